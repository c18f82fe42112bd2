"""
Exact polynomial arithmetic for the pipeline.

LaurentPoly holds univariate polynomials in t with integer (possibly negative)
exponents, TuttePoly holds bivariate polynomials in x, y with non-negative
exponents. Both store a sparse map exponent -> nonzero int and are immutable;
Python ints are unbounded so intermediate Tutte coefficients never overflow.
"""
import logging
import os
import dotenv
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from knots.errors import BadArgument, ZeroPolynomial

# Load environment variables
dotenv.load_dotenv()

# Configure logging
log_level = os.getenv("LOG_LEVEL", "ERROR").upper()
logging.basicConfig(
    level=getattr(logging, log_level, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)


def _trim(terms: Mapping) -> Dict:
    return {k: int(c) for k, c in terms.items() if c != 0}


class LaurentPoly:
    """Univariate Laurent polynomial in t with exact integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] = None):
        terms = _trim(terms or {})
        for exponent in terms:
            if not isinstance(exponent, int):
                logger.error(f"Non-integer Laurent exponent {exponent!r}")
                raise BadArgument(f"Laurent exponents must be integers, got {exponent!r}")
        self._terms = terms
        self._hash = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], min_exponent: int) -> "LaurentPoly":
        """Build a polynomial from a dense ascending coefficient list starting at t^min_exponent."""
        return cls({min_exponent + i: c for i, c in enumerate(coefficients)})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            logger.error("Degree requested for the zero polynomial")
            raise ZeroPolynomial("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            logger.error("Degree requested for the zero polynomial")
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._terms)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def coefficients(self) -> List[Tuple[int, int]]:
        """Ascending (exponent, coefficient) pairs from min to max degree, interior zeros included."""
        if not self._terms:
            logger.error("Coefficient list requested for the zero polynomial")
            raise ZeroPolynomial("coefficients of the zero polynomial are undefined")
        return [(e, self._terms.get(e, 0)) for e in range(self.min_degree, self.max_degree + 1)]

    def mirror(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, t: Union[int, Fraction]) -> Fraction:
        """Exact value at a rational point (t must be nonzero when negative exponents occur)."""
        t = Fraction(t)
        return sum((c * t ** e for e, c in self._terms.items()), Fraction(0))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1})
            logger.error(f"Negative power of non-unit {self}")
            raise BadArgument("only unit monomials have Laurent inverses")
        result, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self, descending: bool = False, variable: str = "t") -> str:
        """Sign-normalized text such as 't^-12 - 4t^-11 + ... + 4 - t'."""
        if not self._terms:
            return "0"
        exponents = sorted(self._terms, reverse=descending)
        pieces = []
        for i, e in enumerate(exponents):
            c = self._terms[e]
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = variable if e == 1 else f"{variable}^{e}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)


class TuttePoly:
    """Bivariate polynomial in x, y with non-negative exponents and integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int], int] = None):
        terms = _trim(terms or {})
        for i, j in terms:
            if i < 0 or j < 0:
                logger.error(f"Negative Tutte exponent {(i, j)}")
                raise BadArgument(f"Tutte exponents must be non-negative, got {(i, j)}")
        self._terms = terms
        self._hash = None

    @classmethod
    def zero(cls) -> "TuttePoly":
        return cls()

    @classmethod
    def one(cls) -> "TuttePoly":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls) -> "TuttePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "TuttePoly":
        return cls({(0, 1): 1})

    @classmethod
    def y_power(cls, n: int) -> "TuttePoly":
        return cls({(0, n): 1})

    @property
    def terms(self) -> Mapping[Tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def swap(self) -> "TuttePoly":
        """Exchange the roles of x and y."""
        return TuttePoly({(j, i): c for (i, j), c in self._terms.items()})

    def __add__(self, other: "TuttePoly") -> "TuttePoly":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return TuttePoly(terms)

    def __neg__(self) -> "TuttePoly":
        return TuttePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TuttePoly") -> "TuttePoly":
        return self + (-other)

    def __mul__(self, other: Union["TuttePoly", int]) -> "TuttePoly":
        if isinstance(other, int):
            return TuttePoly({k: c * other for k, c in self._terms.items()})
        terms: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return TuttePoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TuttePoly":
        if n < 0:
            logger.error(f"Negative TuttePoly power {n}")
            raise BadArgument("TuttePoly powers must be non-negative")
        result = TuttePoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TuttePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"TuttePoly({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Monomials in lexicographic (xExp, yExp) descending order, e.g. 'x^2 + x + y'."""
        if not self._terms:
            return "0"
        pieces = []
        for n, (i, j) in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[(i, j)]
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            power = "".join(factors)
            magnitude = abs(c)
            if not power:
                body = str(magnitude)
            else:
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if n == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Sum of two Laurent polynomials."""
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Product of two Laurent polynomials."""
    return p * q


def coefficients(p: LaurentPoly) -> List[Tuple[int, int]]:
    """Dense (exponent, coefficient) pairs from the lowest to the highest degree."""
    return p.coefficients()


def eval_tutte_at_jones_point(tutte: TuttePoly) -> LaurentPoly:
    """
    Substitute x = -t, y = -1/t.

    Each monomial c x^i y^j becomes c (-1)^(i+j) t^(i-j).
    """
    terms: Dict[int, int] = {}
    for (i, j), c in tutte.terms.items():
        sign = -1 if (i + j) % 2 else 1
        terms[i - j] = terms.get(i - j, 0) + sign * c
    result = LaurentPoly(terms)
    logger.debug(f"Evaluated {len(tutte.terms)} Tutte monomials to {len(result.terms)} Laurent terms")
    return result
