from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from lineid import generators
from lineid.digraph import (
    Digraph,
    bfs_distances,
    build_digraph,
    closed_in_neighborhood_set,
    degree_summary,
    diameter,
    digons,
    distance,
    find_tt3,
    is_oriented,
    is_strongly_connected,
    mask_to_set,
    neighborhood,
    semigirth,
    set_to_mask,
)
from lineid.errors import DigraphError, PreconditionError

from conftest import small_digraphs, strong_digraphs
from oracles import semigirth_by_paths, to_nx

CYCLE3 = [(0, 1), (1, 2), (2, 0)]


def test_build_cycle_and_complete():
    c = build_digraph(3, CYCLE3)
    assert c.size == 3
    k3 = build_digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])
    assert k3.min_in_degree == k3.min_out_degree == 2


@pytest.mark.parametrize(
    "order, arcs",
    [(2, [(0, 0)]), (2, [(0, 1), (0, 1)]), (2, [(0, 2)]), (2, [(-1, 0)])],
    ids=["loop", "duplicate", "out-of-range", "negative"],
)
def test_build_rejects(order, arcs):
    with pytest.raises(DigraphError):
        build_digraph(order, arcs)


def test_labels_must_be_distinct_and_complete():
    with pytest.raises(DigraphError):
        Digraph(2, [(0, 1)], ["a", "a"])
    with pytest.raises(DigraphError):
        Digraph(2, [(0, 1)], ["a"])


def test_digraph_is_hashable_value():
    a = Digraph(3, [(1, 2), (0, 1)])
    b = Digraph(3, [(0, 1), (1, 2)])
    assert a == b and hash(a) == hash(b)
    assert a.arcs == ((0, 1), (1, 2))
    assert a != a.with_labels(["x", "y", "z"])


def test_neighborhoods(k3):
    c = build_digraph(3, CYCLE3)
    assert neighborhood(c, 1, "in", closed=True) == {0, 1}
    assert neighborhood(k3, 0, "in") == {1, 2}
    assert neighborhood(k3, 0, "in", closed=True) == {0, 1, 2}
    assert neighborhood(c, 1, "out") == {2}
    with pytest.raises(DigraphError):
        neighborhood(c, 5)


def test_closed_in_neighborhood_set(k22):
    c = build_digraph(3, CYCLE3)
    assert closed_in_neighborhood_set(c, {1, 2}) == {0, 1, 2}
    assert closed_in_neighborhood_set(c, set()) == frozenset()
    assert closed_in_neighborhood_set(k22, range(k22.order)) == set(k22.vertices)
    got = closed_in_neighborhood_set(k22, {k22.vertex("01"), k22.vertex("02")})
    assert {k22.label(v) for v in got} == {"01", "02", "10", "20"}


def test_strong_connectivity(k22):
    assert is_strongly_connected(build_digraph(3, CYCLE3))
    assert not is_strongly_connected(build_digraph(2, [(0, 1)]))
    assert is_strongly_connected(k22)


def test_digons(k3, k22):
    assert len(digons(k3)) == 3
    assert digons(generators.directed_cycle(5)) == []
    pairs = {frozenset((k22.label(u), k22.label(v))) for u, v in digons(k22)}
    assert pairs == {frozenset(p) for p in (("01", "10"), ("02", "20"), ("12", "21"))}
    assert is_oriented(generators.directed_cycle(5)) and not is_oriented(k3)


def test_find_tt3(k22):
    a, b, c = find_tt3(generators.fixture("tt3"))
    tt3 = generators.fixture("tt3")
    assert tt3.has_arc(a, b) and tt3.has_arc(a, c) and tt3.has_arc(b, c)
    assert find_tt3(generators.directed_cycle(6)) is None
    assert find_tt3(k22) is None


def test_distance(k3):
    c = build_digraph(3, CYCLE3)
    assert distance(c, 0, 2) == 2
    assert distance(k3, 0, 1) == 1
    assert distance(build_digraph(2, [(0, 1)]), 1, 0) is None
    assert distance(c, 1, 1) == 0


def test_semigirth_examples(k3, k22):
    assert semigirth(k3) == 1
    for n in range(2, 8):
        assert semigirth(generators.directed_cycle(n)) == n - 1
    assert semigirth(k22) == 2


def test_semigirth_rejects_disconnected():
    with pytest.raises(PreconditionError):
        semigirth(build_digraph(3, [(0, 1), (1, 2)]))


def test_mask_roundtrip():
    assert mask_to_set(set_to_mask({0, 3, 7})) == {0, 3, 7}
    assert set_to_mask([]) == 0


@settings(max_examples=150, deadline=None)
@given(strong_digraphs(min_order=3, max_order=8))
def test_semigirth_matches_path_enumeration(g):
    assert semigirth(g) == semigirth_by_paths(g)


@settings(max_examples=150, deadline=None)
@given(small_digraphs())
def test_connectivity_and_distances_match_networkx(g):
    ng = to_nx(g)
    assert is_strongly_connected(g) == nx.is_strongly_connected(ng)
    for s in g.vertices:
        ref = nx.single_source_shortest_path_length(ng, s)
        assert bfs_distances(g, s) == [ref.get(v) for v in g.vertices]
    if nx.is_strongly_connected(ng):
        assert diameter(g) == nx.diameter(ng)


@settings(max_examples=150, deadline=None)
@given(small_digraphs())
def test_degree_sums_and_tt3_free_arcs(g):
    s = degree_summary(g)
    assert sum(g.in_degree(v) for v in g.vertices) == g.size
    assert sum(g.out_degree(v) for v in g.vertices) == g.size
    assert s.min_in == g.min_in_degree
    if find_tt3(g) is None:
        for x, y in g.arcs:
            assert not g.in_neighbors(x) & g.in_neighbors(y)
            assert not g.out_neighbors(x) & g.out_neighbors(y)


@settings(max_examples=100, deadline=None)
@given(strong_digraphs(min_in=2))
def test_min_in_two_forces_out_degree_two(g):
    assert any(g.out_degree(v) >= 2 for v in g.vertices)
