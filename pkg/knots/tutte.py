"""
Tutte polynomial T_G(x, y) and its evaluation at the Jones point (x, y) = (-t, -1/t).

Three independent paths are provided: the subset-sum definition (oracle),
deletion-contraction over parallel edge classes (production), and the
weighted subset sum over the simplified graph, where each parallel class of
multiplicity m contributes the factor P(m) = 1 - 1/t + 1/t^2 - ... (m terms).
"""
import logging
import os
import dotenv
from dataclasses import dataclass
from math import comb
from typing import Dict, Tuple

from knots.errors import BadArgument, HasLoops, TooLarge
from knots.graph import Multigraph, UnionFind, simplify
from knots.polynomial import LaurentPoly, TuttePoly, eval_tutte_at_jones_point
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

EdgeClasses = Tuple[Tuple[Tuple[int, int], int], ...]


@dataclass(frozen=True)
class PSeries:
    m: int
    value: LaurentPoly


def p_series(m: int) -> PSeries:
    """P(m) = 1 - t^-1 + t^-2 - ... +- t^(1-m)."""
    if m < 1:
        logger.error(f"P(m) requested for m={m}")
        raise BadArgument(f"P(m) is defined for m >= 1, got {m}")
    return PSeries(m, LaurentPoly({-k: (-1) ** k for k in range(m)}))


def _binomial_expansion(a: int) -> Dict[int, int]:
    """Coefficients of (z - 1)^a by power of z."""
    return {i: comb(a, i) * (-1) ** (a - i) for i in range(a + 1)}


def tutte_brute_force(graph: Multigraph) -> TuttePoly:
    """Sum of (x-1)^(k(F)-k(E)) (y-1)^(|F|-|V|+k(F)) over every edge subset F."""
    limit = config_value("limits", "brute_force_max_edges", 24)
    m = graph.edge_count
    if m > limit:
        logger.error(f"Brute-force Tutte refused: {m} edges exceeds {limit}")
        raise TooLarge(f"brute-force Tutte limited to {limit} edges, graph has {m}")
    logger.info(f"Brute-force Tutte over {2 ** m} subsets ({graph.vertex_count} vertices, {m} edges)")

    n = graph.vertex_count
    full = UnionFind(n)
    for u, v in graph.edges:
        full.union(u, v)
    k_full = full.count()

    counts: Dict[Tuple[int, int], int] = {}
    for mask in range(1 << m):
        uf = UnionFind(n)
        size = 0
        for i, (u, v) in enumerate(graph.edges):
            if mask >> i & 1:
                uf.union(u, v)
                size += 1
        k = uf.count()
        key = (k - k_full, size - n + k)
        counts[key] = counts.get(key, 0) + 1

    terms: Dict[Tuple[int, int], int] = {}
    for (a, b), count in counts.items():
        for i, cx in _binomial_expansion(a).items():
            for j, cy in _binomial_expansion(b).items():
                terms[(i, j)] = terms.get((i, j), 0) + count * cx * cy
    return TuttePoly(terms)


def _block(m: int, with_x: bool) -> TuttePoly:
    """x + y + ... + y^(m-1) for a bridge class, 1 + y + ... + y^(m-1) otherwise."""
    terms = {(0, j): 1 for j in range(1, m)}
    terms[(1, 0) if with_x else (0, 0)] = 1
    return TuttePoly(terms)


def _linked_without(vertex_count: int, classes: EdgeClasses, skip: int) -> bool:
    (u, v), _ = classes[skip]
    uf = UnionFind(vertex_count)
    for i, ((a, b), _) in enumerate(classes):
        if i != skip:
            uf.union(a, b)
    return uf.linked(u, v)


def _contract_class(vertex_count: int, classes: EdgeClasses, index: int) -> EdgeClasses:
    (keep, gone), _ = classes[index]

    def relabel(w: int) -> int:
        if w == gone:
            w = keep
        return w - 1 if w > gone else w

    merged: Dict[Tuple[int, int], int] = {}
    for i, ((a, b), m) in enumerate(classes):
        if i == index:
            continue
        a, b = sorted((relabel(a), relabel(b)))
        merged[(a, b)] = merged.get((a, b), 0) + m
    return tuple(sorted(merged.items()))


def _tutte_classes(vertex_count: int, classes: EdgeClasses, memo: Dict) -> TuttePoly:
    if not classes:
        return TuttePoly.one()
    key = (vertex_count, classes)
    cached = memo.get(key)
    if cached is not None:
        return cached

    _, m = classes[0]
    contracted = _tutte_classes(vertex_count - 1, _contract_class(vertex_count, classes, 0), memo)
    if not _linked_without(vertex_count, classes, 0):
        result = _block(m, with_x=True) * contracted
    else:
        deleted = _tutte_classes(vertex_count, classes[1:], memo)
        result = deleted + _block(m, with_x=False) * contracted
    memo[key] = result
    return result


def tutte_deletion_contraction(graph: Multigraph) -> TuttePoly:
    """
    Deletion-contraction on whole parallel classes.

    Loops factor out as y^L. The lowest non-loop class (u, v) of multiplicity m
    is then either a bridge class, giving (x + y + ... + y^(m-1)) T(G/uv), or
    T(G - uv) + (1 + y + ... + y^(m-1)) T(G/uv).
    """
    simple = simplify(graph)
    classes = tuple(sorted(simple.multiplicity.items()))
    logger.info(
        f"Deletion-contraction Tutte on {graph.vertex_count} vertices, "
        f"{len(classes)} edge classes, {simple.loop_count} loops"
    )
    memo: Dict = {}
    result = TuttePoly.y_power(simple.loop_count) * _tutte_classes(graph.vertex_count, classes, memo)
    logger.debug(f"Deletion-contraction memo holds {len(memo)} entries")
    return result


def jones_eval_weighted(graph: Multigraph) -> LaurentPoly:
    """T_G(-t, -1/t) as a subset sum over simplified base edges weighted by P(mu(e))."""
    if graph.has_loops():
        logger.error(f"Weighted evaluation refused: graph has {graph.loop_count} loops")
        raise HasLoops("weighted Tutte evaluation requires a loop-free graph")
    simple = simplify(graph)
    base = simple.base_edges
    limit = config_value("limits", "weighted_max_simple_edges", 24)
    if len(base) > limit:
        logger.error(f"Weighted evaluation refused: {len(base)} simple edges exceeds {limit}")
        raise TooLarge(f"weighted evaluation limited to {limit} simple edges, graph has {len(base)}")

    n = simple.vertex_count
    full = UnionFind(n)
    for u, v in base:
        full.union(u, v)
    k_full = full.count()
    weights = [p_series(simple.multiplicity[e]).value for e in base]

    grouped: Dict[Tuple[int, int], LaurentPoly] = {}
    for mask in range(1 << len(base)):
        uf = UnionFind(n)
        product = LaurentPoly.one()
        size = 0
        for i, (u, v) in enumerate(base):
            if mask >> i & 1:
                uf.union(u, v)
                product = product * weights[i]
                size += 1
        k = uf.count()
        key = (k - k_full, size - n + k)
        grouped[key] = grouped.get(key, LaurentPoly.zero()) + product

    x_minus_one = LaurentPoly({1: -1, 0: -1})
    y_minus_one = LaurentPoly({-1: -1, 0: -1})
    total = LaurentPoly.zero()
    for (a, b), weight in grouped.items():
        total = total + (x_minus_one ** a) * (y_minus_one ** b) * weight
    logger.debug(f"Weighted evaluation over {1 << len(base)} subsets gave {total}")
    return total


def jones_eval(graph: Multigraph) -> LaurentPoly:
    return eval_tutte_at_jones_point(tutte_deletion_contraction(graph))
