import logging

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rlocal.graph_core import Graph, fixture

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def connected_graphs(draw, min_vertices=2, max_vertices=8, max_extra_edges=8):
    """Small connected graphs: a random tree plus a few chords, vertex names v0, v1, ..."""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    names = [f"v{i}" for i in range(n)]
    edges = {(names[draw(st.integers(min_value=0, max_value=i - 1))], names[i]) for i in range(1, n)}
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=max_extra_edges, unique=True))
    edges.update(extra)
    return Graph.from_edges(edges)


@pytest.fixture
def p3():
    return fixture("P3")


@pytest.fixture
def c6():
    return fixture("C6")


@pytest.fixture
def k4():
    return fixture("K4")


@pytest.fixture
def k23():
    return fixture("K23")


@pytest.fixture
def bowtie():
    return fixture("BOWTIE")


@pytest.fixture
def ring6():
    return fixture("RING6")


@pytest.fixture
def triangle_ring():
    return fixture("TRIANGLE_RING")


@pytest.fixture
def q3():
    return fixture("Q3")


@pytest.fixture
def claw():
    return fixture("CLAW")


@pytest.fixture
def two_k5():
    return fixture("TWO_K5")


@pytest.fixture(autouse=True)
def _reset_rlocal_logging():
    yield
    logger = logging.getLogger("rlocal")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
