"""
Planar diagram (PD) codes of knots.

A crossing X(a,b,c,d) lists its four strand ends counterclockwise starting at
the incoming under-strand, so the under-strand runs a -> c and the over-strand
occupies slots b and d. Corner quadrant q of a crossing is the region between
slot q and slot q+1 (mod 4).
"""
import logging
import os
import re
import dotenv
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from knots.errors import InvalidDiagram, MixedSigns, NotAlternating, ParseError
from knots.graph import Multigraph

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

# Quadrants opened up by the A-smoothing (ends a,b joined and c,d joined).
# Faces meeting a crossing in these quadrants give that crossing's edge sign +1.
A_REGION_QUADRANTS = (1, 3)

PURPLE = "purple"
GOLD = "gold"

_CROSSING_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_UNKNOT_TOKEN = "O"

Corner = Tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    slots: Tuple[int, int, int, int]
    sign: int = 0


@dataclass(frozen=True)
class Face:
    """A region of the diagram: its corners in boundary order and its checkerboard colour."""

    index: int
    boundary: Tuple[Corner, ...]
    color: str


@dataclass(frozen=True)
class PlanarDiagram:
    """Validated single-component diagram with labels normalized to 1..2c."""

    crossings: Tuple[Crossing, ...]

    @classmethod
    def unknot(cls) -> "PlanarDiagram":
        return cls(())

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def _partner(self) -> Dict[Corner, Corner]:
        return _partner_slots([c.slots for c in self.crossings])

    def partner(self, crossing: int, slot: int) -> Corner:
        """The other end of the edge leaving crossing at slot."""
        return self._partner[(crossing, slot)]

    def to_pd(self) -> str:
        if not self.crossings:
            return _UNKNOT_TOKEN
        return " ".join("X({},{},{},{})".format(*c.slots) for c in self.crossings)

    def mirror(self) -> "PlanarDiagram":
        """Switch every crossing; slots are re-read from the new incoming under-strand."""
        rotated = []
        for crossing in self.crossings:
            a, b, c, d = crossing.slots
            rotated.append((b, c, d, a) if crossing.sign < 0 else (d, a, b, c))
        return _build(rotated)

    def __str__(self) -> str:
        return self.to_pd()


def _partner_slots(slots: List[Tuple[int, int, int, int]]) -> Dict[Corner, Corner]:
    occurrences: Dict[int, List[Corner]] = {}
    for x, crossing in enumerate(slots):
        for s, label in enumerate(crossing):
            occurrences.setdefault(label, []).append((x, s))
    partner = {}
    for label, ends in occurrences.items():
        if len(ends) != 2:
            logger.error(f"Edge label {label} appears {len(ends)} times")
            raise InvalidDiagram(f"edge label {label} appears {len(ends)} times, expected exactly 2")
        first, second = ends
        partner[first] = second
        partner[second] = first
    return partner


def _orientation_signs(slots: List[Tuple[int, int, int, int]], partner: Dict[Corner, Corner]) -> List[int]:
    """
    Walk the knot from the outgoing under-strand of crossing 0 and read crossing signs.

    Entering at slot a continues to c; entering at b continues to d and the
    crossing is negative; entering at d continues to b and the crossing is positive.
    """
    edge_count = 2 * len(slots)
    signs = [0] * len(slots)
    exit_slot = {0: 2, 1: 3, 3: 1}
    here = (0, 2)
    steps = 0
    while True:
        crossing, slot = partner[here]
        steps += 1
        if slot == 2:
            logger.error(f"Strand enters crossing {crossing} at its outgoing under slot")
            raise InvalidDiagram(f"inconsistent orientation at crossing {crossing}")
        if slot == 1:
            signs[crossing] = -1
        elif slot == 3:
            signs[crossing] = 1
        here = (crossing, exit_slot[slot])
        if here == (0, 2) or steps > edge_count:
            break
    if steps != edge_count or 0 in signs:
        logger.error(f"Strand walk covered {steps} of {edge_count} edges")
        raise InvalidDiagram("diagram is not a single connected knot component")
    return signs


def _corner_orbits(crossing_count: int, partner: Dict[Corner, Corner]) -> Tuple[Dict[Corner, int], List[List[Corner]]]:
    """Orbits of the corner successor (X, q) -> partner(X, q+1); a planar knot diagram has c + 2 of them."""
    face_of: Dict[Corner, int] = {}
    orbits: List[List[Corner]] = []
    for x in range(crossing_count):
        for q in range(4):
            if (x, q) in face_of:
                continue
            orbit = []
            corner = (x, q)
            while corner not in face_of:
                face_of[corner] = len(orbits)
                orbit.append(corner)
                corner = partner[(corner[0], (corner[1] + 1) % 4)]
            orbits.append(orbit)
    if len(orbits) != crossing_count + 2:
        logger.error(f"Diagram with {crossing_count} crossings has {len(orbits)} faces, expected {crossing_count + 2}")
        raise InvalidDiagram(f"found {len(orbits)} faces, expected {crossing_count + 2}; not a planar knot diagram")
    return face_of, orbits


def _build(slots: List[Tuple[int, int, int, int]]) -> PlanarDiagram:
    labels = sorted({label for crossing in slots for label in crossing})
    relabel = {old: new for new, old in enumerate(labels, start=1)}
    slots = [tuple(relabel[label] for label in crossing) for crossing in slots]
    if not slots:
        return PlanarDiagram.unknot()
    partner = _partner_slots(slots)
    signs = _orientation_signs(slots, partner)
    _corner_orbits(len(slots), partner)
    return PlanarDiagram(tuple(Crossing(s, sign) for s, sign in zip(slots, signs)))


def parse_pd(text: str) -> PlanarDiagram:
    """
    Parse whitespace-separated X(a,b,c,d) terms into a validated diagram.

    Text after '#' on a line is ignored. The single token 'O' denotes the
    0-crossing unknot.
    """
    lines = [line.split("#", 1)[0] for line in (text or "").splitlines()]
    body = " ".join(lines).strip()
    if not body:
        logger.error("Empty PD code")
        raise ParseError("empty PD code")
    if body == _UNKNOT_TOKEN:
        logger.info("Parsed 0-crossing unknot")
        return PlanarDiagram.unknot()

    slots = []
    position = 0
    for match in _CROSSING_RE.finditer(body):
        gap = body[position:match.start()]
        if gap.strip(" \t,;"):
            logger.error(f"Unexpected text in PD code: {gap.strip()!r}")
            raise ParseError(f"unexpected text {gap.strip()!r}")
        values = tuple(int(v) for v in match.groups())
        if min(values) < 1:
            logger.error(f"Non-positive edge label in {values}")
            raise ParseError(f"edge labels must be positive integers, got {values}")
        slots.append(values)
        position = match.end()
    if body[position:].strip(" \t,;"):
        logger.error(f"Unexpected trailing text in PD code: {body[position:].strip()!r}")
        raise ParseError(f"unexpected text {body[position:].strip()!r}")
    if not slots:
        logger.error("PD code has no X terms")
        raise ParseError("no X(a,b,c,d) terms found")

    diagram = _build(slots)
    logger.info(f"Parsed {diagram.crossing_count}-crossing diagram with writhe {writhe(diagram)}")
    return diagram


def writhe(diagram: PlanarDiagram) -> int:
    """Sum of the crossing signs."""
    return sum(c.sign for c in diagram.crossings)


def is_alternating(diagram: PlanarDiagram) -> bool:
    """True iff every edge runs from an under slot to an over slot."""
    for (x, s), (y, t) in diagram._partner.items():
        if s % 2 == t % 2:
            logger.debug(f"Edge {diagram.crossings[x].slots[s]} stays on the same level")
            return False
    return True


def faces(diagram: PlanarDiagram) -> List[Face]:
    """
    Regions as orbits of the corner successor (X, q) -> partner(X, q+1).

    Colours come from a breadth-first 2-colouring in which the faces at
    neighbouring quadrants of a crossing differ; the face holding corner
    (0, 0) is purple.
    """
    c = diagram.crossing_count
    if c == 0:
        return [Face(0, (), PURPLE), Face(1, (), GOLD)]

    face_of, orbits = _corner_orbits(c, diagram._partner)

    neighbours: List[set] = [set() for _ in orbits]
    for x in range(c):
        for q in range(4):
            f, g = face_of[(x, q)], face_of[(x, (q + 1) % 4)]
            neighbours[f].add(g)
            neighbours[g].add(f)

    colour: Dict[int, int] = {face_of[(0, 0)]: 0}
    queue = deque([face_of[(0, 0)]])
    while queue:
        f = queue.popleft()
        for g in neighbours[f]:
            if g not in colour:
                colour[g] = 1 - colour[f]
                queue.append(g)
            elif colour[g] == colour[f]:
                logger.error(f"Faces {f} and {g} cannot be checkerboard coloured")
                raise InvalidDiagram("face adjacency is not 2-colourable")

    result = [Face(i, tuple(orbit), GOLD if colour[i] else PURPLE) for i, orbit in enumerate(orbits)]
    logger.debug(f"Found {len(result)} faces, {sum(1 for f in result if f.color == PURPLE)} purple")
    return result


def checkerboard_graphs(diagram: PlanarDiagram) -> Tuple[Multigraph, Multigraph]:
    """
    The purple and gold checkerboard graphs, in that order.

    Each crossing contributes one edge to each graph, joining the two faces of
    that colour diagonally opposite at the crossing. The edge sign is +1 when
    those faces sit in the A-region quadrants, -1 otherwise.
    """
    region_faces = faces(diagram)
    face_of = {corner: face.index for face in region_faces for corner in face.boundary}
    graphs = []
    for colour in (PURPLE, GOLD):
        members = [face.index for face in region_faces if face.color == colour]
        vertex = {index: v for v, index in enumerate(members)}
        edges, signs = [], []
        for x in range(diagram.crossing_count):
            for quadrant_pair in ((0, 2), (1, 3)):
                f, g = (face_of[(x, q)] for q in quadrant_pair)
                if region_faces[f].color == colour:
                    edges.append((vertex[f], vertex[g]))
                    signs.append(1 if quadrant_pair == A_REGION_QUADRANTS else -1)
        graphs.append(Multigraph(len(members), tuple(edges), tuple(signs)))
    purple, gold = graphs
    logger.info(
        f"Checkerboard graphs: purple V={purple.vertex_count}, gold V={gold.vertex_count}, "
        f"E={purple.edge_count}"
    )
    return purple, gold


def positive_checkerboard(diagram: PlanarDiagram) -> Multigraph:
    """The checkerboard graph of an alternating diagram whose edges are all positive."""
    if not is_alternating(diagram):
        logger.error("Positive checkerboard graph requested for a non-alternating diagram")
        raise NotAlternating("diagram is not alternating")
    purple, gold = checkerboard_graphs(diagram)
    if diagram.crossing_count == 0:
        return purple
    for graph in (purple, gold):
        if len(set(graph.signs)) != 1:
            logger.error(f"Mixed edge signs {sorted(set(graph.signs))} in an alternating diagram")
            raise MixedSigns("checkerboard graph of an alternating diagram has mixed edge signs")
    positive = [g for g in (purple, gold) if g.signs[0] == 1]
    if len(positive) != 1:
        logger.error("Both checkerboard graphs carry the same edge sign")
        raise MixedSigns("checkerboard graphs of an alternating diagram must have opposite signs")
    return positive[0]


def is_reduced(diagram: PlanarDiagram) -> bool:
    """No nugatory crossing, i.e. neither checkerboard graph has a loop."""
    return not any(graph.has_loops() for graph in checkerboard_graphs(diagram))
