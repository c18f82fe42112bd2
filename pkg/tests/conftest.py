import pytest
import os
import json

from knots.census import load_census
from knots.diagram import parse_pd
from knots.graph import Multigraph
from tests.knot_data import (
    CENSUS_FIXTURE,
    FIGURE_EIGHT_PD,
    KNOT_13A_PD,
    KNOT_8_19_PD,
    TREFOIL_PD,
    random_planar_multigraphs,
)


@pytest.fixture
def trefoil():
    """Fixture providing the 3-crossing trefoil diagram"""
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def figure_eight():
    """Fixture providing the 4-crossing figure-eight diagram"""
    return parse_pd(FIGURE_EIGHT_PD)


@pytest.fixture
def knot_8_19():
    """Fixture providing a non-alternating 8-crossing torus knot diagram"""
    return parse_pd(KNOT_8_19_PD)


@pytest.fixture(scope="session")
def knot_13a():
    """Fixture providing the 13-crossing alternating knot with twist number 8"""
    return parse_pd(KNOT_13A_PD)


@pytest.fixture
def triangle():
    """Fixture providing the triangle graph"""
    return Multigraph(3, ((0, 1), (1, 2), (0, 2)))


@pytest.fixture
def triple_edge():
    """Fixture providing two vertices joined by three parallel edges"""
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


@pytest.fixture
def figure_one_graph():
    """Fixture providing a multigraph with one edge of each multiplicity 2, 3 and 4"""
    edges = [(0, 1)] * 2 + [(1, 2)] * 3 + [(2, 3)] * 4 + [(0, 3), (0, 2)]
    return Multigraph(4, tuple(edges))


@pytest.fixture(scope="session")
def census_records():
    """Fixture providing the validated records of the shipped census fixture"""
    return load_census(str(CENSUS_FIXTURE))


@pytest.fixture(scope="session")
def census_diagrams(census_records):
    """Fixture mapping census names to parsed diagrams"""
    return {record.name: parse_pd(record.pd) for record in census_records}


@pytest.fixture(scope="session")
def random_graphs():
    """Fixture providing 100 seeded random connected loop-free planar multigraphs"""
    return random_planar_multigraphs(100)


@pytest.fixture
def temp_config_file(tmp_path):
    """Fixture providing a temporary configuration file with small limits"""
    config = {
        "_metadata": {"version": "test"},
        "knots": {
            "limits": {"brute_force_max_edges": 3, "bracket_max_crossings": 3},
            "volume": {"v0": 1.0149416064096536, "tolerance": 1e-9},
        },
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config))
    return path


@pytest.fixture(autouse=True)
def setup_test_environment():
    """Fixture to set up test environment variables"""
    # Set test environment variables
    test_env = {
        'LOG_LEVEL': 'ERROR',  # Suppress logs during testing
    }

    # Store original values
    original_env = {}
    for key, value in test_env.items():
        original_env[key] = os.environ.get(key)
        os.environ[key] = value

    yield

    # Restore original values
    for key, original_value in original_env.items():
        if original_value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = original_value
