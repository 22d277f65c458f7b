from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lineid import generators
from lineid.digraph import digons, find_tt3, is_oriented, is_strongly_connected
from lineid.errors import PreconditionError
from lineid.generators import Lcg, kautz, random_strongly_connected
from lineid.line import iterated_line_digraph
from lineid.structure import find_config_a, find_config_b, find_config_c


def test_complete_symmetric():
    k3 = generators.complete_symmetric(3)
    assert k3.size == 6 and k3.min_in_degree == k3.min_out_degree == 2
    assert generators.complete_symmetric(4).size == 12
    with pytest.raises(PreconditionError):
        generators.complete_symmetric(1)


@pytest.mark.parametrize("d, k, order, size", [(2, 2, 6, 12), (3, 2, 12, 36), (2, 3, 12, 24), (1, 1, 2, 2)])
def test_kautz_sizes(d, k, order, size):
    g = kautz(d, k)
    assert (g.order, g.size) == (order, size)


def test_kautz_labels_and_rule():
    g = kautz(2, 3)
    assert list(g.labels) == sorted(g.labels)
    for u, v in g.arcs:
        assert g.label(u)[1:] == g.label(v)[:-1]


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_kautz_is_iterated_line_of_complete(d, k):
    g = kautz(d, k)
    it = iterated_line_digraph(generators.complete_symmetric(d + 1), k - 1)
    assert it.graph.arcs == g.arcs
    assert all(g.in_degree(v) == d == g.out_degree(v) for v in g.vertices)
    assert is_strongly_connected(g)


def test_directed_cycle():
    assert generators.directed_cycle(4).size == 4
    assert len(digons(generators.directed_cycle(2))) == 1
    with pytest.raises(PreconditionError):
        generators.directed_cycle(1)


def test_lcg_reference_values():
    rng = Lcg(0)
    assert rng.next() == 1442695040888963407
    assert rng.next() == (6364136223846793005 * 1442695040888963407 + 1442695040888963407) % 2**64


def test_random_is_deterministic():
    a = random_strongly_connected(8, 0.4, seed=7, min_in=2, oriented=True)
    b = random_strongly_connected(8, 0.4, seed=7, min_in=2, oriented=True)
    assert a == b


def test_random_examples():
    g = random_strongly_connected(5, 0.5, seed=1, min_in=2, oriented=True)
    assert is_oriented(g) and is_strongly_connected(g) and g.min_in_degree >= 2
    assert random_strongly_connected(6, 1.0, seed=3).arcs == generators.complete_symmetric(6).arcs
    with pytest.raises(PreconditionError):
        random_strongly_connected(3, 0.5, seed=1, min_in=2, oriented=True)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(3, 10),
    st.sampled_from([0.1, 0.3, 0.6, 1.0]),
    st.integers(0, 2**40),
    st.integers(0, 3),
    st.booleans(),
)
def test_random_respects_constraints(n, p, seed, min_in, oriented):
    if min_in > ((n - 1) // 2 if oriented else n - 1):
        with pytest.raises(PreconditionError):
            random_strongly_connected(n, p, seed=seed, min_in=min_in, oriented=oriented)
        return
    g = random_strongly_connected(n, p, seed=seed, min_in=min_in, oriented=oriented)
    assert g.order == n and is_strongly_connected(g)
    assert g.min_in_degree >= min_in
    if oriented:
        assert is_oriented(g)


def test_fixtures():
    assert find_config_a(generators.fixture("config-a")) is not None
    assert find_config_b(generators.fixture("config-b")) is not None
    assert find_config_c(generators.fixture("config-c")) is not None
    assert find_tt3(generators.fixture("tt3")) is not None
    rt = generators.fixture("rotational-tournament-5")
    assert is_oriented(rt) and is_strongly_connected(rt)
    assert rt.min_in_degree == rt.min_out_degree == 2 == max(rt.in_degree(v) for v in rt.vertices)
    with pytest.raises(PreconditionError):
        generators.fixture("nope")


def test_package_exports_generator_not_module():
    import lineid

    assert callable(lineid.kautz) and lineid.kautz(2, 2).order == 6
