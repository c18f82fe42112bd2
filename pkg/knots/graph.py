"""
Planar multigraphs and the combinatorial quantities the coefficient formulas consume.

A Multigraph is an immutable vertex count plus an edge list (loops allowed,
parallel edges allowed) with optional per-edge signs. SimplifiedGraph is the
spanning simple graph: parallel classes collapsed to one base edge carrying
its multiplicity, loops counted separately and excluded from the base.
"""
import logging
import os
import dotenv
import numpy as np
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

from knots.errors import BadArgument, ContractLoop, EdgeNotFound, NotCheckerboard

if TYPE_CHECKING:
    from knots.diagram import PlanarDiagram

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

Edge = Tuple[int, int]


class UnionFind:
    """
    Union-Find with path compression and union by rank.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.size = n

    def find(self, x: int) -> int:
        i = x
        while i != self.parent[i]:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def linked(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def union(self, x: int, y: int) -> bool:
        """Join the sets of x and y; returns False when they were already joined."""
        i, j = self.find(x), self.find(y)
        if i == j:
            return False
        if self.rank[i] < self.rank[j]:
            i, j = j, i
        self.parent[j] = i
        if self.rank[i] == self.rank[j]:
            self.rank[i] += 1
        self.size -= 1
        return True

    def count(self) -> int:
        """Number of disjoint sets."""
        return self.size


def _norm(edge: Edge) -> Edge:
    u, v = edge
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: Tuple[Edge, ...] = ()
    signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        edges = tuple(_norm((int(u), int(v))) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            logger.error(f"Negative vertex count {self.vertex_count}")
            raise BadArgument("vertex_count must be non-negative")
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                logger.error(f"Edge {(u, v)} outside {self.vertex_count} vertices")
                raise BadArgument(f"edge {(u, v)} has a vertex outside 0..{self.vertex_count - 1}")
        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            if len(signs) != len(edges) or any(s not in (1, -1) for s in signs):
                logger.error(f"Bad edge signs {self.signs}")
                raise BadArgument("signs must be +1/-1, one per edge")
            object.__setattr__(self, "signs", signs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def is_loop(self, index: int) -> bool:
        u, v = self.edges[index]
        return u == v

    def has_loops(self) -> bool:
        return self.loop_count > 0

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def same_edges(self, other: "Multigraph") -> bool:
        """Equality up to edge-list order."""
        return self.vertex_count == other.vertex_count and self.sorted_edges() == other.sorted_edges()

    def to_edge_list(self) -> str:
        """Debug serialization: a 'vertices N' header and one 'u-v' line per edge."""
        lines = [f"vertices {self.vertex_count}"]
        lines.extend(f"{u}-{v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Multigraph":
        vertex_count = None
        edges: List[Edge] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("vertices"):
                vertex_count = int(line.split()[1])
                continue
            u, v = line.split("-")
            edges.append((int(u), int(v)))
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, tuple(edges))


@dataclass(frozen=True)
class SimplifiedGraph:
    """Spanning simple graph with edge multiplicities mu(e) >= 1."""

    vertex_count: int
    multiplicity: Dict[Edge, int] = field(default_factory=dict)
    loop_count: int = 0

    @property
    def base_edges(self) -> List[Edge]:
        return sorted(self.multiplicity)

    @property
    def edge_count(self) -> int:
        return len(self.multiplicity)

    def neighbours(self) -> List[set]:
        adjacency = [set() for _ in range(self.vertex_count)]
        for u, v in self.multiplicity:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return adjacency


def simplify(graph: Multigraph) -> SimplifiedGraph:
    """Collapse parallel classes into base edges with multiplicities; loops are set aside."""
    multiplicity: Dict[Edge, int] = {}
    loops = 0
    for u, v in graph.edges:
        if u == v:
            loops += 1
            continue
        multiplicity[(u, v)] = multiplicity.get((u, v), 0) + 1
    logger.debug(f"Simplified {graph.edge_count} edges to {len(multiplicity)} base edges and {loops} loops")
    return SimplifiedGraph(graph.vertex_count, multiplicity, loops)


def n_count(simple: SimplifiedGraph, j: int) -> int:
    """Number of base edges with multiplicity >= j."""
    if j < 1:
        logger.error(f"n(j) requested for j={j}")
        raise BadArgument(f"n(j) is defined for j >= 1, got {j}")
    return sum(1 for mu in simple.multiplicity.values() if mu >= j)


def component_count(graph: Multigraph, edge_subset: Iterable[int] = ()) -> int:
    """Components of the spanning subgraph with all vertices and the chosen edge indices."""
    uf = UnionFind(graph.vertex_count)
    for index in edge_subset:
        if not 0 <= index < graph.edge_count:
            logger.error(f"Edge index {index} not in graph with {graph.edge_count} edges")
            raise EdgeNotFound(f"edge index {index} not in graph with {graph.edge_count} edges")
        u, v = graph.edges[index]
        uf.union(u, v)
    return uf.count()


def is_connected(graph: Multigraph) -> bool:
    """True when the graph with all its edges has at most one component."""
    return component_count(graph, range(graph.edge_count)) <= 1


def triangle_count(simple: SimplifiedGraph) -> int:
    """Number of 3-cliques in the base simple graph."""
    adjacency = simple.neighbours()
    count = 0
    for u, v in simple.multiplicity:
        # u < v always; count each triangle once at its largest vertex w > v
        count += sum(1 for w in adjacency[u] & adjacency[v] if w > v)
    return count


def adjacency_traces(simple: SimplifiedGraph) -> Tuple[int, int, int]:
    """
    Traces of the 0/1 base adjacency matrix.

    Returns (trace A~^2, trace A~^3, n2) where n2 is half the number of
    entries >= 2 of the multiplicity-weighted adjacency matrix.
    """
    n = simple.vertex_count
    weighted = np.zeros((n, n), dtype=np.int64)
    for (u, v), mu in simple.multiplicity.items():
        weighted[u, v] = mu
        weighted[v, u] = mu
    binary = (weighted > 0).astype(np.int64)
    square = binary @ binary
    trace2 = int(np.trace(square))
    trace3 = int(np.trace(square @ binary))
    n_two = int(np.count_nonzero(weighted >= 2)) // 2
    logger.debug(f"Adjacency traces: trace2={trace2}, trace3={trace3}, n2={n_two}")
    return trace2, trace3, n_two


def delete_edge(graph: Multigraph, index: int) -> Multigraph:
    """Remove one edge, keeping vertex ids and the order of the remaining edges."""
    if not 0 <= index < graph.edge_count:
        logger.error(f"Cannot delete edge {index}: graph has {graph.edge_count} edges")
        raise EdgeNotFound(f"edge index {index} not in graph with {graph.edge_count} edges")
    edges = graph.edges[:index] + graph.edges[index + 1:]
    signs = None if graph.signs is None else graph.signs[:index] + graph.signs[index + 1:]
    return Multigraph(graph.vertex_count, edges, signs)


def contract_edge(graph: Multigraph, index: int) -> Multigraph:
    """
    Merge the endpoints of a non-loop edge.

    The higher vertex id is folded into the lower one and ids above it shift
    down by one (order-preserving compaction); parallel copies become loops.
    """
    if not 0 <= index < graph.edge_count:
        logger.error(f"Cannot contract edge {index}: graph has {graph.edge_count} edges")
        raise EdgeNotFound(f"edge index {index} not in graph with {graph.edge_count} edges")
    keep, gone = graph.edges[index]
    if keep == gone:
        logger.error(f"Refusing to contract loop edge {index} at vertex {keep}")
        raise ContractLoop(f"edge {index} is a loop")

    def relabel(w: int) -> int:
        if w == gone:
            w = keep
        return w - 1 if w > gone else w

    edges = tuple((relabel(u), relabel(v)) for i, (u, v) in enumerate(graph.edges) if i != index)
    signs = None if graph.signs is None else graph.signs[:index] + graph.signs[index + 1:]
    return Multigraph(graph.vertex_count - 1, edges, signs)


def dual(graph: Multigraph, diagram: "PlanarDiagram") -> Multigraph:
    """Return the other checkerboard graph of the diagram graph was built from."""
    from knots.diagram import checkerboard_graphs

    first, second = checkerboard_graphs(diagram)
    if graph.same_edges(first):
        return second
    if graph.same_edges(second):
        return first
    logger.error("Graph is not a checkerboard graph of the given diagram")
    raise NotCheckerboard("graph did not originate from this diagram")