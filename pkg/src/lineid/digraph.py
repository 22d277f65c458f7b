"""Immutable simple digraphs and the basic analyses run on them.

Vertices are dense integers ``0..order-1``. Adjacency is kept in both
directions, as frozensets and as integer bitmasks; the bitmasks are what
the code engine uses for fast trace comparisons.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DigraphError, PreconditionError

Arc = tuple[int, int]

UNREACHABLE = None
"""Sentinel returned by :func:`distance` when no path exists."""


class Digraph:
    """A finite loop-free digraph without multiple arcs.

    Instances are immutable; every analysis in the package is a pure
    function of a ``Digraph``. Optional ``labels`` attach a string to each
    vertex (generators use this for Kautz words).
    """

    __slots__ = (
        "_order", "_arcs", "_arc_set", "_out", "_in", "_labels", "_label_index",
        "_in_mask", "_out_mask",
    )

    def __init__(self, order: int, arcs: Iterable[Arc], labels: Sequence[str] | None = None):
        if not isinstance(order, int) or order < 0:
            raise DigraphError(f"order must be a nonnegative integer, got {order!r}")
        arc_list = [(int(u), int(v)) for u, v in arcs]
        seen = set()
        for u, v in arc_list:
            if not (0 <= u < order and 0 <= v < order):
                raise DigraphError(f"arc ({u},{v}) has an endpoint outside 0..{order - 1}")
            if u == v:
                raise DigraphError(f"loop arc ({u},{u}) is not allowed")
            if (u, v) in seen:
                raise DigraphError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        out = [set() for _ in range(order)]
        inn = [set() for _ in range(order)]
        for u, v in arc_list:
            out[u].add(v)
            inn[v].add(u)
        self._order = order
        self._arcs = tuple(sorted(arc_list))
        self._arc_set = frozenset(seen)
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in inn)
        self._in_mask = tuple(sum(1 << u for u in s) for s in inn)
        self._out_mask = tuple(sum(1 << v for v in s) for s in out)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise DigraphError(f"expected {order} labels, got {len(labels)}")
            if len(set(labels)) != order:
                raise DigraphError("vertex labels must be distinct")
            self._label_index = {lab: i for i, lab in enumerate(labels)}
        else:
            self._label_index = None
        self._labels = labels

    # basic structure

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return len(self._arcs)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        """All arcs, sorted lexicographically by (tail, head)."""
        return self._arcs

    @property
    def vertices(self) -> range:
        return range(self._order)

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def out_neighbors(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def out_arcs(self, v: int) -> frozenset[Arc]:
        return frozenset((v, w) for w in self._out[v])

    def in_arcs(self, v: int) -> frozenset[Arc]:
        return frozenset((u, v) for u in self._in[v])

    def in_mask(self, v: int) -> int:
        """Bitmask of the open in-neighborhood of ``v``."""
        return self._in_mask[v]

    def closed_in_mask(self, v: int) -> int:
        return self._in_mask[v] | (1 << v)

    def out_mask(self, v: int) -> int:
        return self._out_mask[v]

    def closed_out_mask(self, v: int) -> int:
        return self._out_mask[v] | (1 << v)

    @property
    def min_in_degree(self) -> int:
        return min((len(s) for s in self._in), default=0)

    @property
    def min_out_degree(self) -> int:
        return min((len(s) for s in self._out), default=0)

    # labels

    def label(self, v: int) -> str:
        """Label of ``v``, or its decimal id when the digraph is unlabeled."""
        return self._labels[v] if self._labels is not None else str(v)

    def vertex(self, token: str | int) -> int:
        """Resolve a vertex given by label or by id."""
        if isinstance(token, int):
            if not 0 <= token < self._order:
                raise DigraphError(f"vertex {token} out of range")
            return token
        if self._label_index is not None and token in self._label_index:
            return self._label_index[token]
        try:
            v = int(token)
        except ValueError:
            raise DigraphError(f"unknown vertex label {token!r}") from None
        return self.vertex(v)

    def with_labels(self, labels: Sequence[str] | None) -> Digraph:
        return Digraph(self._order, self._arcs, labels)

    # dunder

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self._order, self._arcs, self._labels) == (other._order, other._arcs, other._labels)

    def __hash__(self):
        return hash((self._order, self._arcs, self._labels))

    def __repr__(self):
        return f"Digraph(order={self._order}, size={self.size})"


def build_digraph(order: int, arcs: Iterable[Arc], labels: Sequence[str] | None = None) -> Digraph:
    """Validate and freeze a digraph. Loops, duplicates and bad endpoints raise."""
    return Digraph(order, arcs, labels)


@dataclass(frozen=True)
class DegreeSummary:
    min_in: int
    min_out: int
    out_degree_one: frozenset[int]
    out_degree_at_least_two: frozenset[int]


def degree_summary(graph: Digraph) -> DegreeSummary:
    return DegreeSummary(
        min_in=graph.min_in_degree,
        min_out=graph.min_out_degree,
        out_degree_one=frozenset(v for v in graph.vertices if graph.out_degree(v) == 1),
        out_degree_at_least_two=frozenset(v for v in graph.vertices if graph.out_degree(v) >= 2),
    )


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def neighborhood(graph: Digraph, v: int, direction: str = "in", closed: bool = False) -> frozenset[int]:
    """N^-(v), N^+(v), or their closed versions."""
    if not 0 <= v < graph.order:
        raise DigraphError(f"vertex {v} out of range")
    if direction == "in":
        nbrs = graph.in_neighbors(v)
    elif direction == "out":
        nbrs = graph.out_neighbors(v)
    else:
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")
    return nbrs | {v} if closed else nbrs


def closed_in_neighborhood_set(graph: Digraph, vertices: Iterable[int]) -> frozenset[int]:
    """Union of closed in-neighborhoods; the empty set maps to the empty set."""
    mask = 0
    for v in vertices:
        mask |= graph.closed_in_mask(v)
    return mask_to_set(mask)


def _reach_mask(graph: Digraph, source: int, forward: bool) -> int:
    nbr = graph.out_mask if forward else graph.in_mask
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nbr(low.bit_length() - 1)
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(graph: Digraph) -> bool:
    if graph.order == 0:
        return False
    full = (1 << graph.order) - 1
    return _reach_mask(graph, 0, True) == full and _reach_mask(graph, 0, False) == full


def digons(graph: Digraph) -> list[tuple[int, int]]:
    """All pairs ``(u, v)`` with ``u < v`` joined by arcs in both directions."""
    return [(u, v) for u, v in graph.arcs if u < v and graph.has_arc(v, u)]


def is_oriented(graph: Digraph) -> bool:
    return not digons(graph)


def find_tt3(graph: Digraph) -> tuple[int, int, int] | None:
    """First ``(a, b, c)`` with arcs a->b, a->c, b->c, or None if TT3-free."""
    for a, b in graph.arcs:
        common = graph.out_neighbors(a) & graph.out_neighbors(b)
        if common:
            return a, b, min(common)
    return None


def bfs_distances(graph: Digraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * graph.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(graph.out_neighbors(u)):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(graph: Digraph, u: int, v: int) -> int | None:
    """Length of a shortest u->v path, or ``UNREACHABLE`` (None)."""
    return bfs_distances(graph, u)[v]


def diameter(graph: Digraph) -> int:
    if not is_strongly_connected(graph):
        raise PreconditionError("diameter is only defined here for strongly connected digraphs")
    return max(max(bfs_distances(graph, u)) for u in graph.vertices)


def semigirth(graph: Digraph) -> int:
    """Semigirth of a strongly connected loop-free digraph of order >= 2.

    Walk counts per (source, length, target) are capped at 2; walks of
    length dist or dist+1 between a pair are automatically paths, since
    dropping a repeated vertex would shorten them below dist.
    """
    if graph.order < 2:
        raise PreconditionError("semigirth needs order >= 2")
    if not is_strongly_connected(graph):
        raise PreconditionError("semigirth is undefined for digraphs that are not strongly connected")
    n = graph.order
    diam = 0
    first_bad = None  # smallest dist with a non-unique shortest path or a (dist+1)-path
    nonunique_at: set[int] = set()
    for x in graph.vertices:
        dist = bfs_distances(graph, x)
        ecc = max(dist)
        diam = max(diam, ecc)
        layers = [[0] * n]
        layers[0][x] = 1
        for _ in range(ecc + 1):
            prev = layers[-1]
            cur = [0] * n
            for u in range(n):
                if prev[u]:
                    for w in graph.out_neighbors(u):
                        cur[w] = min(2, cur[w] + prev[u])
            layers.append(cur)
        for y in graph.vertices:
            d = dist[y]
            unique = layers[d][y] == 1
            extra = layers[d + 1][y] > 0
            if not unique:
                nonunique_at.add(d)
            if not unique or extra:
                first_bad = d if first_bad is None else min(first_bad, d)
    ceiling = diam if first_bad is None else min(diam, first_bad)
    for g in range(ceiling, 0, -1):
        if g not in nonunique_at:
            return g
    # g = 1 always qualifies: no loops and no multiple arcs
    raise AssertionError("unreachable: semigirth 1 always satisfies the definition")

