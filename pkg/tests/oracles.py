"""Independent reference implementations used only by the tests.

Everything here works on plain Python sets and explicit path enumeration,
sharing no code with the package beyond reading ``graph.arcs``.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(graph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from(graph.arcs)
    return g


def in_sets(graph):
    preds = [set() for _ in range(graph.order)]
    for u, v in graph.arcs:
        preds[v].add(u)
    return preds


def closed_in(graph, xs):
    preds = in_sets(graph)
    out = set()
    for x in xs:
        out |= preds[x] | {x}
    return frozenset(out)


def naive_is_code(graph, code, ell=1):
    code = set(code)
    preds = in_sets(graph)
    if any(not ((preds[v] | {v}) & code) for v in range(graph.order)):
        return False
    seen = {}
    for size in range(1, ell + 1):
        for xs in combinations(range(graph.order), size):
            trace = closed_in(graph, xs) & code
            if trace in seen:
                return False
            seen[trace] = xs
    return True


def naive_min_code(graph, ell=1):
    """Smallest size of a code by trying every subset; None if there is none."""
    for size in range(1, graph.order + 1):
        for cand in combinations(range(graph.order), size):
            if naive_is_code(graph, cand, ell):
                return size
    return None


def naive_arc_code(graph, code):
    """Definition of an arc-identifying code, via balls {uv} plus the in-arcs of u."""
    code = set(code)
    traces = set()
    for u, v in graph.arcs:
        ball = {(u, v)} | {(t, h) for t, h in graph.arcs if h == u}
        trace = frozenset(ball & code)
        if not trace or trace in traces:
            return False
        traces.add(trace)
    return True


def simple_path_counts(graph, max_len):
    """counts[x][y][L] = number of x -> y paths with L arcs, L <= max_len."""
    succ = [[] for _ in range(graph.order)]
    for u, v in graph.arcs:
        succ[u].append(v)
    counts = [[[0] * (max_len + 1) for _ in range(graph.order)] for _ in range(graph.order)]

    def walk(src, node, length, visited):
        counts[src][node][length] += 1
        if length == max_len:
            return
        for w in succ[node]:
            if w not in visited:
                walk(src, w, length + 1, visited | {w})

    for x in range(graph.order):
        walk(x, x, 0, {x})
    return counts


def semigirth_by_paths(graph):
    g = to_nx(graph)
    diam = nx.diameter(g)
    counts = simple_path_counts(graph, diam + 1)
    dist = dict(nx.all_pairs_shortest_path_length(g))
    pairs = [(x, y) for x in range(graph.order) for y in range(graph.order) if x != y]
    best = 1
    for gam in range(1, diam + 1):
        ok = True
        for x, y in pairs:
            d = dist[x][y]
            if d < gam and (counts[x][y][d] != 1 or counts[x][y][d + 1] != 0):
                ok = False
            if d == gam and counts[x][y][d] != 1:
                ok = False
        if ok:
            best = gam
    return best
