"""
Jones polynomial of a knot diagram by two independent routes.

The Tutte route reads V(t) = (-1)^w t^((b - a + 3w)/4) T_G(-t, -1/t) off the
positive checkerboard graph G of an alternating diagram (a = |V(G)|,
b = |V(G*)|). The bracket route sums the 2^c Kauffman states and works for
any diagram.
"""
import logging
import os
import dotenv
from dataclasses import dataclass
from typing import Dict, Tuple

from knots.diagram import PlanarDiagram, is_alternating, positive_checkerboard, writhe
from knots.errors import BadArgument, InvalidDiagram, NonIntegralExponent, NonIntegralShift, NotReduced, RouteMismatch, TooLarge
from knots.graph import UnionFind, dual
from knots.polynomial import LaurentPoly
from knots.tutte import jones_eval
from utils.json_utils import config_value

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

TUTTE = "tutte"
BRACKET = "bracket"


@dataclass(frozen=True)
class JonesPolynomial:
    poly: LaurentPoly
    route: str

    def value_at_one(self) -> int:
        """V(1), which is 1 for every knot."""
        return int(self.poly.evaluate(1))

    def __str__(self) -> str:
        return self.poly.render()


def _checked(poly: LaurentPoly, route: str) -> JonesPolynomial:
    jones = JonesPolynomial(poly, route)
    if jones.value_at_one() != 1:
        logger.error(f"{route} route produced V(1) = {jones.value_at_one()} for {poly}")
        raise InvalidDiagram(f"Jones polynomial evaluates to {jones.value_at_one()} at t=1, expected 1 for a knot")
    return jones


def jones_via_tutte(diagram: PlanarDiagram) -> JonesPolynomial:
    """(-1)^w t^((b - a + 3w)/4) T_G(-t,-1/t) on the positive checkerboard graph of a reduced alternating diagram."""
    logger.info(f"Computing Jones polynomial via Tutte for {diagram.crossing_count}-crossing diagram")
    if diagram.crossing_count == 0:
        return JonesPolynomial(LaurentPoly.one(), TUTTE)

    graph = positive_checkerboard(diagram)
    other = dual(graph, diagram)
    if graph.has_loops() or other.has_loops():
        logger.error("Checkerboard graph has a loop; diagram has a nugatory crossing")
        raise NotReduced("diagram is not reduced (nugatory crossing)")

    w = writhe(diagram)
    numerator = other.vertex_count - graph.vertex_count + 3 * w
    if numerator % 4:
        logger.error(f"Non-integral prefactor exponent ({numerator})/4 with w={w}")
        raise NonIntegralShift(f"prefactor exponent {numerator}/4 is not an integer")
    shift = numerator // 4
    logger.debug(f"Tutte route: a={graph.vertex_count}, b={other.vertex_count}, w={w}, shift={shift}")

    prefactor = LaurentPoly.monomial(shift, -1 if w % 2 else 1)
    return _checked(prefactor * jones_eval(graph), TUTTE)


def _state_counts(diagram: PlanarDiagram) -> Dict[Tuple[int, int], int]:
    """Number of Kauffman states per (A-smoothing count, loop count)."""
    c = diagram.crossing_count
    slots = [tuple(label - 1 for label in crossing.slots) for crossing in diagram.crossings]
    counts: Dict[Tuple[int, int], int] = {}
    for state in range(1 << c):
        uf = UnionFind(2 * c)
        a_count = 0
        for x, (a, b, cc, d) in enumerate(slots):
            if state >> x & 1:
                uf.union(a, d)
                uf.union(b, cc)
            else:
                a_count += 1
                uf.union(a, b)
                uf.union(cc, d)
        key = (a_count, uf.count())
        counts[key] = counts.get(key, 0) + 1
    return counts


def jones_via_bracket(diagram: PlanarDiagram) -> JonesPolynomial:
    """
    Kauffman bracket in A, normalized by (-A^3)^(-w), then t = A^(-4).

    A state contributes A^(#A - #B) d^(loops - 1) with d = -A^2 - A^-2.
    """
    c = diagram.crossing_count
    limit = config_value("limits", "bracket_max_crossings", 24)
    if c > limit:
        logger.error(f"Bracket state sum refused: {c} crossings exceeds {limit}")
        raise TooLarge(f"bracket state sum limited to {limit} crossings, diagram has {c}")
    logger.info(f"Computing Jones polynomial via bracket over {2 ** c} states")
    if c == 0:
        return JonesPolynomial(LaurentPoly.one(), BRACKET)

    loop_factor = LaurentPoly({2: -1, -2: -1})
    bracket = LaurentPoly.zero()
    for (a_count, loops), count in _state_counts(diagram).items():
        bracket = bracket + LaurentPoly.monomial(2 * a_count - c, count) * loop_factor ** (loops - 1)

    w = writhe(diagram)
    normalized = bracket * LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    terms = {}
    for exponent, coefficient in normalized.terms.items():
        if exponent % 4:
            logger.error(f"Bracket exponent A^{exponent} not divisible by 4")
            raise NonIntegralExponent(f"A-exponent {exponent} is not a multiple of 4")
        terms[-exponent // 4] = coefficient
    return _checked(LaurentPoly(terms), BRACKET)


def reconcile(diagram: PlanarDiagram) -> JonesPolynomial:
    """
    Compare both routes on reduced alternating diagrams and return the common result.

    Other diagrams only have the bracket route.
    """
    bracket = jones_via_bracket(diagram)
    if not is_alternating(diagram):
        return bracket
    try:
        tutte = jones_via_tutte(diagram)
    except NotReduced:
        logger.warning("Alternating diagram is not reduced; using the bracket route only")
        return bracket
    if tutte.poly != bracket.poly:
        logger.error(f"Route mismatch: tutte {tutte.poly} vs bracket {bracket.poly}")
        raise RouteMismatch(f"tutte route gave {tutte.poly}, bracket route gave {bracket.poly}")
    logger.info(f"Both routes agree: {tutte.poly}")
    return tutte


ROUTES = (TUTTE, BRACKET, "both")


def jones_by_route(diagram: PlanarDiagram, route: str = "both") -> JonesPolynomial:
    """Dispatch to one route, or to reconcile for 'both'."""
    if route == TUTTE:
        return jones_via_tutte(diagram)
    if route == BRACKET:
        return jones_via_bracket(diagram)
    if route == "both":
        return reconcile(diagram)
    logger.error(f"Unknown Jones route {route!r}")
    raise BadArgument(f"route must be one of {ROUTES}, got {route!r}")
