from __future__ import annotations

import pytest
from hypothesis import strategies as st

from lineid import generators
from lineid.digraph import Digraph


@st.composite
def strong_digraphs(draw, min_order=3, max_order=7, min_in=0, oriented=False):
    """Strongly connected digraphs drawn through the seeded generator."""
    n = draw(st.integers(min_order, max_order))
    p = draw(st.sampled_from([0.1, 0.2, 0.35, 0.5, 0.8]))
    seed = draw(st.integers(0, 2**32))
    return generators.random_strongly_connected(n, p, seed=seed, min_in=min_in, oriented=oriented)


@st.composite
def small_digraphs(draw, max_order=6):
    """Arbitrary loop-free digraphs, not necessarily connected."""
    n = draw(st.integers(1, max_order))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, arcs)


@pytest.fixture
def k22():
    return generators.kautz(2, 2)


@pytest.fixture
def k32():
    return generators.kautz(3, 2)


@pytest.fixture
def k3():
    return generators.complete_symmetric(3)
