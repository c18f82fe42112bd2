"""
Coefficient predictions, twist numbers and hyperbolic volume bounds.

The top three coefficients of T_G(-t,-1/t) are determined by |V|, |E~|, n(2)
and the triangle count of the simplified graph. For reduced alternating
diagrams the twist number T = |E~| + |E~*| - |E| equals |a_(n+1)| + |a_(m-1)|
of the Jones polynomial, which feeds the volume bounds.
"""
import logging
import os
import dotenv
from math import comb
from typing import Dict, Optional, Union

from knots.diagram import PlanarDiagram, checkerboard_graphs, is_alternating, is_reduced
from knots.errors import BadArgument, HasLoops, NotAlternating, RouteMismatch, ZeroPolynomial
from knots.graph import Multigraph, SimplifiedGraph, adjacency_traces, is_connected, n_count, simplify, triangle_count
from knots.jones import JonesPolynomial, jones_via_bracket, jones_via_tutte, reconcile
from knots.polynomial import LaurentPoly
from knots.tutte import jones_eval
from models.records import AlternatingStructure, CoefficientPrediction, TwistProfile, VerificationReport, VolumeBounds
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

# Volume of the ideal regular hyperbolic tetrahedron
V0: float = float(config_value("volume", "v0", 1.0149416064096536))


def _require_loop_free(simple: SimplifiedGraph) -> None:
    if simple.loop_count:
        logger.error(f"Coefficient formulas need a loop-free graph, got {simple.loop_count} loops")
        raise HasLoops("graph has loops")


def predict_top_coefficients(simple: SimplifiedGraph, vertex_count: int) -> CoefficientPrediction:
    """Top three coefficients of T_G(-t,-1/t) from |V|, the parallel classes and the triangle count."""
    _require_loop_free(simple)
    sign = -1 if (vertex_count - 1) % 2 else 1
    a_top_minus_1 = sign * (vertex_count - 1 - simple.edge_count)
    a_top_minus_2 = -sign * (-comb(abs(a_top_minus_1) + 1, 2) - n_count(simple, 2) + triangle_count(simple))
    prediction = CoefficientPrediction(
        a_top=sign,
        a_top_minus_1=a_top_minus_1,
        a_top_minus_2=a_top_minus_2,
        top_degree=vertex_count - 1,
    )
    logger.debug(f"Predicted top coefficients {prediction}")
    return prediction


def verify_prediction(graph: Multigraph) -> bool:
    """Compare the predicted top three coefficients with T_G(-t,-1/t)."""
    if graph.has_loops():
        logger.error("Prediction check refused: graph has loops")
        raise HasLoops("graph has loops")
    if not is_connected(graph):
        logger.error("Prediction check refused: graph is disconnected")
        raise BadArgument("graph must be connected")
    prediction = predict_top_coefficients(simplify(graph), graph.vertex_count)
    actual = jones_eval(graph)
    d = prediction.top_degree
    matches = (
        actual.max_degree == d
        and actual.coefficient(d) == prediction.a_top
        and actual.coefficient(d - 1) == prediction.a_top_minus_1
        and actual.coefficient(d - 2) == prediction.a_top_minus_2
    )
    if not matches:
        logger.warning(f"Prediction {prediction} does not match {actual}")
    return matches


def trace_corollary(simple: SimplifiedGraph, vertex_count: int) -> tuple[int, int]:
    """(|a_(m-1)|, |a_(m-2)|) from traces of the 0/1 adjacency matrix."""
    _require_loop_free(simple)
    trace2, trace3, n_two = adjacency_traces(simple)
    second = trace2 // 2 + 1 - vertex_count
    third = comb(second + 1, 2) + n_two - trace3 // 6
    return second, third


def twist_profile(jones: Union[JonesPolynomial, LaurentPoly]) -> TwistProfile:
    """Coefficients, span and T_i = |a_(n+i)| + |a_(m-i)| for i up to span // 2."""
    poly = jones.poly if isinstance(jones, JonesPolynomial) else jones
    if poly.is_zero():
        logger.error("Twist profile requested for the zero polynomial")
        raise ZeroPolynomial("twist profile of the zero polynomial")
    coeffs = [c for _, c in poly.coefficients()]
    span = poly.span
    twist_numbers = [abs(coeffs[i]) + abs(coeffs[span - i]) for i in range(1, span // 2 + 1)]
    profile = TwistProfile(min_exponent=poly.min_degree, coeffs=coeffs, twist_numbers=twist_numbers, span=span)
    logger.info(f"Twist profile: span {span}, T = {twist_numbers}")
    return profile


def _alternating_pair(diagram: PlanarDiagram):
    if not is_alternating(diagram):
        logger.error("Twist number from graphs requested for a non-alternating diagram")
        raise NotAlternating("diagram is not alternating")
    return checkerboard_graphs(diagram)


def twist_number_from_graphs(diagram: PlanarDiagram) -> int:
    """|E~| + |E~*| - |E| over the checkerboard pair."""
    graph, other = _alternating_pair(diagram)
    twist = simplify(graph).edge_count + simplify(other).edge_count - graph.edge_count
    logger.info(f"Twist number from checkerboard graphs: {twist}")
    return twist


def second_order_identity_check(diagram: PlanarDiagram) -> bool:
    """
    |a_(n+2)| + |a_(m-2)| + |a_(m-1)| |a_(n+1)| against
    (T + T^2)/2 + n(2) + n*(2) - tri - tri*.
    """
    graph, other = _alternating_pair(diagram)
    poly = jones_via_tutte(diagram).poly
    n, m = poly.min_degree, poly.max_degree
    left = (
        abs(poly.coefficient(n + 2)) + abs(poly.coefficient(m - 2))
        + abs(poly.coefficient(m - 1)) * abs(poly.coefficient(n + 1))
    )
    simple, simple_other = simplify(graph), simplify(other)
    twist = simple.edge_count + simple_other.edge_count - graph.edge_count
    right = (
        (twist + twist ** 2) // 2
        + n_count(simple, 2) + n_count(simple_other, 2)
        - triangle_count(simple) - triangle_count(simple_other)
    )
    logger.info(f"Second order identity: {left} vs {right}")
    return left == right


def adams_upper(crossings: int) -> Optional[float]:
    """(4c - 16) v0, defined for crossing number c > 4."""
    if crossings <= 4:
        return None
    return (4 * crossings - 16) * V0


def volume_bounds(profile: TwistProfile, crossings: Optional[int] = None) -> VolumeBounds:
    """
    Volume bounds from the second and penultimate Jones coefficients.

    Every bound is clamped at 0, so lower <= upper holds for any profile.
    """
    low, high = profile.second_lowest, profile.second_highest
    twist = low + high
    bounds = VolumeBounds(
        lower=max(0.0, 2 * V0 * (max(low, high) - 1)),
        upper=max(0.0, 10 * V0 * (twist - 1)),
        lackenby_lower=max(0.0, V0 * (twist - 2)),
        lackenby_upper=max(0.0, 10 * V0 * (twist - 1)),
        adams_upper=adams_upper(crossings) if crossings is not None else None,
    )
    logger.debug(f"Volume bounds for |a_n+1|={low}, |a_m-1|={high}: {bounds}")
    return bounds


def within_bounds(bounds: VolumeBounds, volume: float) -> bool:
    return bounds.brackets(volume, config_value("volume", "tolerance", 1e-9))


def alternating_structure(jones: Union[JonesPolynomial, LaurentPoly], crossings: int) -> AlternatingStructure:
    """Span, sign pattern and extreme coefficients, as expected of a reduced alternating diagram."""
    poly = jones.poly if isinstance(jones, JonesPolynomial) else jones
    coeffs = [c for _, c in poly.coefficients()]
    lead = 1 if coeffs[0] > 0 else -1
    signs_alternate = all(c * lead * (-1) ** k >= 0 for k, c in enumerate(coeffs))
    return AlternatingStructure(
        span=poly.span,
        crossings=crossings,
        span_equals_crossings=poly.span == crossings,
        signs_alternate=signs_alternate,
        extreme_coefficients_unit=abs(coeffs[0]) == 1 and abs(coeffs[-1]) == 1,
    )


def _high_valency(graph: Multigraph) -> int:
    degree = [0] * graph.vertex_count
    for u, v in graph.edges:
        degree[u] += 1
        degree[v] += 1
    return sum(1 for d in degree if d >= 3)


def valency_lower_bound(diagram: PlanarDiagram) -> float:
    """
    2 v0 (max(r_p, r_g) - 2), r = vertices of valency >= 3 in each checkerboard graph.

    Only a volume bound for twist-reduced diagrams; reported as computed.
    """
    graph, other = checkerboard_graphs(diagram)
    r = max(_high_valency(graph), _high_valency(other))
    return 2 * V0 * (r - 2)


def verify_diagram(diagram: PlanarDiagram) -> VerificationReport:
    """
    Run every coefficient identity that applies to the diagram.

    Reduced alternating diagrams get the route comparison, both top-coefficient
    predictions, the trace formulas, both twist-number identities and the
    structural facts; other diagrams only get the bracket route and V(1) = 1.
    """
    logger.info(f"Verifying identities on {diagram.crossing_count}-crossing diagram")
    alternating = is_alternating(diagram)
    if not alternating or not is_reduced(diagram):
        jones = jones_via_bracket(diagram)
        profile = twist_profile(jones)
        return VerificationReport(
            crossings=diagram.crossing_count,
            alternating=alternating,
            jones=jones.poly.render(),
            jones_twist_number=profile.twist(1),
            checks={"value_at_one": jones.value_at_one() == 1},
        )

    checks: Dict[str, bool] = {}
    try:
        jones = reconcile(diagram)
        checks["routes_agree"] = True
    except RouteMismatch:
        jones = jones_via_bracket(diagram)
        checks["routes_agree"] = False
    profile = twist_profile(jones)
    graph_twist = twist_number_from_graphs(diagram)
    checks["twist_number"] = profile.twist(1) == graph_twist if diagram.crossing_count else True
    checks["second_order_identity"] = second_order_identity_check(diagram)
    if diagram.crossing_count:
        checks["alternating_structure"] = alternating_structure(jones, diagram.crossing_count).holds

    for colour, graph in zip(("purple", "gold"), checkerboard_graphs(diagram)):
        checks[f"prediction_{colour}"] = verify_prediction(graph)
        actual = jones_eval(graph)
        top = graph.vertex_count - 1
        expected = (abs(actual.coefficient(top - 1)), abs(actual.coefficient(top - 2)))
        checks[f"trace_{colour}"] = trace_corollary(simplify(graph), graph.vertex_count) == expected

    report = VerificationReport(
        crossings=diagram.crossing_count,
        alternating=True,
        jones=jones.poly.render(),
        twist_number=graph_twist,
        jones_twist_number=profile.twist(1),
        checks=checks,
    )
    logger.info(f"Verification {'passed' if report.passed else 'failed'}: {checks}")
    return report
