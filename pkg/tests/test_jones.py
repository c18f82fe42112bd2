import pytest
from unittest.mock import patch

from knots.diagram import PlanarDiagram, parse_pd
from knots.errors import BadArgument, NotAlternating, NotReduced, RouteMismatch, TooLarge
from knots.jones import BRACKET, TUTTE, JonesPolynomial, jones_by_route, jones_via_bracket, jones_via_tutte, reconcile
from knots.polynomial import LaurentPoly
from tests.knot_data import ALTERNATING, JONES

KINKED_UNKNOT_PD = "X(1,1,2,2)"


def expected_jones(name: str) -> LaurentPoly:
    min_exponent, coeffs = JONES[name]
    return LaurentPoly.from_coefficients(coeffs, min_exponent)


class TestBracketRoute:
    """Test cases for the Kauffman bracket state sum"""

    @pytest.mark.parametrize("name", sorted(JONES))
    def test_census_knots(self, census_diagrams, name):
        """Test the bracket route against reference Jones polynomials"""
        result = jones_via_bracket(census_diagrams[name])
        assert result.poly == expected_jones(name)
        assert result.route == BRACKET
        assert result.value_at_one() == 1

    def test_trefoil_text(self, trefoil):
        """Test the rendered trefoil polynomial"""
        assert str(jones_via_bracket(trefoil)) == "t + t^3 - t^4"

    def test_unknot(self):
        """Test V = 1 for the 0-crossing and the kinked unknot"""
        assert jones_via_bracket(PlanarDiagram.unknot()).poly == 1
        assert jones_via_bracket(parse_pd(KINKED_UNKNOT_PD)).poly == 1

    def test_mirror_image(self, trefoil):
        """Test V_mirror(t) = V(1/t)"""
        assert jones_via_bracket(trefoil.mirror()).poly == jones_via_bracket(trefoil).poly.mirror()

    @patch('knots.jones.config_value')
    def test_crossing_limit(self, mock_config_value, figure_eight):
        """Test TooLarge when the diagram exceeds the configured crossing limit"""
        mock_config_value.return_value = 3
        with pytest.raises(TooLarge):
            jones_via_bracket(figure_eight)


class TestTutteRoute:
    """Test cases for the Jones polynomial from the positive checkerboard graph"""

    @pytest.mark.parametrize("name", ALTERNATING)
    def test_census_knots(self, census_diagrams, name):
        """Test the Tutte route against reference Jones polynomials"""
        result = jones_via_tutte(census_diagrams[name])
        assert result.poly == expected_jones(name)
        assert result.route == TUTTE

    def test_13a_text(self, knot_13a):
        """Test the rendered 13-crossing polynomial"""
        assert jones_via_tutte(knot_13a).poly.render() == (
            "t^-12 - 4t^-11 + 11t^-10 - 23t^-9 + 35t^-8 - 47t^-7 + 53t^-6 "
            "- 52t^-5 + 47t^-4 - 34t^-3 + 22t^-2 - 11t^-1 + 4 - t"
        )

    def test_mirror_image(self, figure_eight, trefoil):
        """Test the Tutte route on mirror images"""
        assert jones_via_tutte(trefoil.mirror()).poly == LaurentPoly({-1: 1, -3: 1, -4: -1})
        assert jones_via_tutte(figure_eight.mirror()).poly == jones_via_tutte(figure_eight).poly

    def test_non_alternating(self, knot_8_19):
        """Test NotAlternating for the Tutte route on 8_19"""
        with pytest.raises(NotAlternating):
            jones_via_tutte(knot_8_19)

    def test_not_reduced(self):
        """Test NotReduced for a diagram with a nugatory crossing"""
        with pytest.raises(NotReduced):
            jones_via_tutte(parse_pd(KINKED_UNKNOT_PD))

    def test_unknot(self):
        """Test V = 1 for the 0-crossing unknot"""
        assert jones_via_tutte(PlanarDiagram.unknot()).poly == 1


class TestReconcile:
    """Test cases for comparing the two routes"""

    def test_routes_agree(self, knot_13a):
        """Test that reconcile returns the common polynomial"""
        assert reconcile(knot_13a).poly == expected_jones("13a_123")

    def test_non_alternating_uses_bracket(self, knot_8_19):
        """Test that non-alternating diagrams fall back to the bracket route"""
        result = reconcile(knot_8_19)
        assert result.route == BRACKET
        assert result.poly == expected_jones("8_19")

    def test_not_reduced_uses_bracket(self):
        """Test that non-reduced alternating diagrams fall back to the bracket route"""
        assert reconcile(parse_pd(KINKED_UNKNOT_PD)).route == BRACKET

    @patch('knots.jones.jones_via_tutte')
    def test_mismatch(self, mock_tutte, trefoil):
        """Test RouteMismatch when the routes disagree"""
        mock_tutte.return_value = JonesPolynomial(LaurentPoly.one(), TUTTE)
        with pytest.raises(RouteMismatch):
            reconcile(trefoil)

    @pytest.mark.parametrize("route", ["tutte", "bracket", "both"])
    def test_jones_by_route(self, trefoil, route):
        """Test dispatch to each route"""
        assert jones_by_route(trefoil, route).poly == expected_jones("3_1")

    def test_unknown_route(self, trefoil):
        """Test BadArgument for an unknown route name"""
        with pytest.raises(BadArgument):
            jones_by_route(trefoil, "skein")
