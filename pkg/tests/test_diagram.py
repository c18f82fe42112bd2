import logging
import pytest

from knots.diagram import (
    GOLD,
    PURPLE,
    PlanarDiagram,
    checkerboard_graphs,
    faces,
    is_alternating,
    is_reduced,
    parse_pd,
    positive_checkerboard,
    writhe,
)
from knots.errors import InvalidDiagram, NotAlternating, ParseError
from knots.graph import simplify
from tests.knot_data import ALTERNATING, NON_ALTERNATING, TREFOIL_PD, VIRTUAL_TREFOIL_PD, WRITHE

KINKED_UNKNOT_PD = "X(1,1,2,2)"
HOPF_LINK_PD = "X(4,1,3,2) X(2,3,1,4)"


class TestParsePd:
    """Test cases for PD code parsing"""

    def test_parse_trefoil(self, trefoil):
        """Test crossing count, signs and labels of the trefoil"""
        assert trefoil.crossing_count == 3
        assert trefoil.edge_count == 6
        assert [c.sign for c in trefoil.crossings] == [1, 1, 1]
        assert trefoil.crossings[0].slots == (1, 5, 2, 4)

    def test_comments_and_separators(self):
        """Test that comments, newlines and commas between terms are accepted"""
        text = "# right-handed trefoil\nX(1,5,2,4),\nX(3, 1, 4, 6)  # second\nX(5,3,6,2)\n"
        assert parse_pd(text).crossings == parse_pd(TREFOIL_PD).crossings

    def test_labels_are_normalized(self):
        """Test relabelling of arbitrary positive labels to 1..2c"""
        diagram = parse_pd("X(10,50,20,40) X(30,10,40,60) X(50,30,60,20)")
        assert diagram.crossings == parse_pd(TREFOIL_PD).crossings

    def test_unknot_token(self):
        """Test the 0-crossing unknot"""
        diagram = parse_pd("O")
        assert diagram == PlanarDiagram.unknot()
        assert diagram.to_pd() == "O"

    def test_to_pd_reparses(self, figure_eight):
        """Test that rendered PD text parses back to the same diagram"""
        assert parse_pd(figure_eight.to_pd()) == figure_eight
        assert str(figure_eight) == figure_eight.to_pd()

    @pytest.mark.parametrize("text", ["", "   \n# only a comment\n", "X(1,2,3)", "X(1,5,2,4) junk", "Y(1,2,3,4)"])
    def test_parse_errors(self, text):
        """Test ParseError for empty or malformed text"""
        with pytest.raises(ParseError):
            parse_pd(text)

    def test_zero_label(self):
        """Test ParseError for a non-positive label"""
        with pytest.raises(ParseError):
            parse_pd("X(0,1,1,0)")

    def test_errors_are_logged(self, caplog):
        """Test that parse failures are logged at error level before raising"""
        with caplog.at_level(logging.ERROR, logger="knots.diagram"):
            for text in ("X(0,1,1,0)", "# only a comment\n;"):
                with pytest.raises(ParseError):
                    parse_pd(text)
        assert len([r for r in caplog.records if r.levelno == logging.ERROR]) == 2

    def test_label_appears_once(self):
        """Test InvalidDiagram when an edge label is not shared by two slots"""
        with pytest.raises(InvalidDiagram):
            parse_pd("X(1,2,3,4)")

    def test_two_component_link(self):
        """Test InvalidDiagram for a link, whose strand walk misses edges"""
        with pytest.raises(InvalidDiagram):
            parse_pd(HOPF_LINK_PD)

    def test_non_planar_code(self):
        """Test InvalidDiagram for a code that orients as one component but has too few faces"""
        with pytest.raises(InvalidDiagram, match="not a planar knot diagram"):
            parse_pd(VIRTUAL_TREFOIL_PD)


class TestDiagramInvariants:
    """Test cases for writhe, alternation and mirror images"""

    @pytest.mark.parametrize("name", sorted(WRITHE))
    def test_writhe(self, census_diagrams, name):
        """Test writhe against the census diagrams"""
        assert writhe(census_diagrams[name]) == WRITHE[name]

    @pytest.mark.parametrize("name", ALTERNATING)
    def test_alternating(self, census_diagrams, name):
        """Test that alternating census diagrams are recognized"""
        assert is_alternating(census_diagrams[name])

    @pytest.mark.parametrize("name", NON_ALTERNATING)
    def test_non_alternating(self, census_diagrams, name):
        """Test that non-alternating census diagrams are recognized"""
        assert not is_alternating(census_diagrams[name])

    def test_mirror(self, trefoil):
        """Test that mirroring negates the writhe and is an involution"""
        mirror = trefoil.mirror()
        assert writhe(mirror) == -3
        assert is_alternating(mirror)
        assert writhe(mirror.mirror()) == 3


class TestFaces:
    """Test cases for face tracing and checkerboard colouring"""

    @pytest.mark.parametrize("name", sorted(WRITHE))
    def test_face_count(self, census_diagrams, name):
        """Test that a c-crossing diagram has c + 2 faces"""
        diagram = census_diagrams[name]
        assert len(faces(diagram)) == diagram.crossing_count + 2

    def test_corners_covered_once(self, knot_13a):
        """Test that every corner lies on exactly one face"""
        corners = [corner for face in faces(knot_13a) for corner in face.boundary]
        assert len(corners) == 4 * knot_13a.crossing_count
        assert len(set(corners)) == len(corners)

    def test_first_corner_is_purple(self, figure_eight):
        """Test the colour convention for the face at corner (0, 0)"""
        region = next(face for face in faces(figure_eight) if (0, 0) in face.boundary)
        assert region.color == PURPLE

    def test_colour_counts(self, knot_13a):
        """Test 8 purple and 7 gold faces for the 13-crossing knot"""
        colours = [face.color for face in faces(knot_13a)]
        assert colours.count(PURPLE) == 8
        assert colours.count(GOLD) == 7


class TestCheckerboardGraphs:
    """Test cases for the checkerboard graph pair"""

    @pytest.mark.parametrize("name", sorted(WRITHE))
    def test_vertex_and_edge_counts(self, census_diagrams, name):
        """Test |E| = c for both graphs and |V| + |V*| = c + 2"""
        diagram = census_diagrams[name]
        purple, gold = checkerboard_graphs(diagram)
        assert purple.edge_count == gold.edge_count == diagram.crossing_count
        assert purple.vertex_count + gold.vertex_count == diagram.crossing_count + 2

    def test_trefoil_positive_graph(self, trefoil):
        """Test that the positive trefoil graph is the gold triangle"""
        purple, gold = checkerboard_graphs(trefoil)
        positive = positive_checkerboard(trefoil)
        assert positive == gold
        assert positive.vertex_count == 3
        assert set(positive.signs) == {1}
        assert set(purple.signs) == {-1}

    def test_13a_positive_graph(self, knot_13a):
        """Test the simplified positive graph of the 13-crossing knot"""
        simple = simplify(positive_checkerboard(knot_13a))
        assert simple.vertex_count == 7
        assert simple.edge_count == 10

    def test_non_alternating_has_no_positive_graph(self, knot_8_19):
        """Test NotAlternating for a non-alternating diagram"""
        with pytest.raises(NotAlternating):
            positive_checkerboard(knot_8_19)

    def test_non_alternating_has_mixed_signs(self, knot_8_19):
        """Test that some checkerboard graph of 8_19 carries both signs"""
        assert any(len(set(graph.signs)) == 2 for graph in checkerboard_graphs(knot_8_19))

    def test_reduced(self, trefoil):
        """Test that a kink makes a diagram non-reduced"""
        assert is_reduced(trefoil)
        assert not is_reduced(parse_pd(KINKED_UNKNOT_PD))

    def test_unknot_graphs(self):
        """Test the single-vertex graphs of the 0-crossing unknot"""
        purple, gold = checkerboard_graphs(PlanarDiagram.unknot())
        assert purple.vertex_count == gold.vertex_count == 1
        assert purple.edge_count == 0
