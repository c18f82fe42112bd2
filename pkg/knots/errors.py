"""Exceptions raised by the knot invariant pipeline."""


class KnotToolkitError(Exception):
    """Base class for every domain error of the pipeline."""


class ParseError(KnotToolkitError):
    """PD text is syntactically malformed."""


class InvalidDiagram(KnotToolkitError):
    """PD code parses but does not describe a connected planar knot diagram."""


class NotAlternating(KnotToolkitError):
    """An operation that needs an alternating diagram got a non-alternating one."""


class MixedSigns(KnotToolkitError):
    """Neither checkerboard graph of an alternating diagram has uniform edge signs."""


class NotReduced(KnotToolkitError):
    """A checkerboard graph contains a loop (nugatory crossing)."""


class NonIntegralShift(KnotToolkitError):
    """The Tutte-route prefactor exponent (b - a + 3w) / 4 is not an integer."""


class NonIntegralExponent(KnotToolkitError):
    """The normalized bracket has a power of A not divisible by 4."""


class ZeroPolynomial(KnotToolkitError):
    """A coefficient operation was given the zero polynomial."""


class TooLarge(KnotToolkitError):
    """Input exceeds a configured size limit."""


class HasLoops(KnotToolkitError):
    """A graph operation that requires a loop-free graph got a loop."""


class EdgeNotFound(KnotToolkitError):
    """Edge index out of range."""


class ContractLoop(KnotToolkitError):
    """Contraction was requested on a loop."""


class NotCheckerboard(KnotToolkitError):
    """A graph is not the checkerboard graph its caller expects."""


class BadArgument(KnotToolkitError):
    """Invalid option or argument value."""


class RouteMismatch(KnotToolkitError):
    """The Tutte route and the bracket route produced different polynomials."""


class CsvError(KnotToolkitError):
    """A census row failed validation."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
