"""Line digraphs, iterated line digraphs, and line-digraph recognition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .digraph import Arc, Digraph
from .errors import DigraphError, PreconditionError


@dataclass(frozen=True)
class LineageMap:
    """Bijection between the arcs of a parent digraph and the vertices of its line digraph."""

    forward: Mapping[Arc, int]
    backward: tuple[Arc, ...]

    def __post_init__(self):
        if len(self.forward) != len(self.backward):
            raise ValueError("lineage maps must be bijections")

    def __len__(self):
        return len(self.backward)

    @classmethod
    def identity(cls, graph: Digraph) -> LineageMap:
        # stage-0 placeholder: vertex v stands for itself, stored as the pair (v, v)
        backward = tuple((v, v) for v in graph.vertices)
        return cls({a: i for i, a in enumerate(backward)}, backward)


@dataclass(frozen=True)
class LineDigraph:
    graph: Digraph
    parent: Digraph
    lineage: LineageMap


def _merged_labels(parent: Digraph) -> list[str] | None:
    """Kautz-style labels for L(parent): ``x1..xk`` then ``y`` for the arc x1..xk -> x2..xk y.

    Only produced when every arc of the parent overlaps its endpoints' labels
    that way; otherwise the line digraph is left unlabeled.
    """
    if parent.labels is None:
        return None
    labels = []
    for u, v in parent.arcs:
        tail, head = parent.labels[u], parent.labels[v]
        if len(tail) != len(head) or tail[1:] != head[:-1]:
            return None
        labels.append(tail + head[-1])
    return labels


def line_digraph(graph: Digraph) -> LineDigraph:
    """Build L(D): one vertex per arc, uv -> wz whenever v == w.

    Vertices are numbered by the lexicographic order of the parent arcs.
    """
    if graph.size == 0:
        raise PreconditionError("the line digraph of an arcless digraph is empty")
    backward = graph.arcs
    forward = {a: i for i, a in enumerate(backward)}
    arcs = []
    for i, (_, v) in enumerate(backward):
        for w in sorted(graph.out_neighbors(v)):
            arcs.append((i, forward[(v, w)]))
    line = Digraph(len(backward), arcs, _merged_labels(graph))
    return LineDigraph(line, graph, LineageMap(forward, backward))


@dataclass(frozen=True)
class IteratedLineDigraph:
    """L^k D together with the lineage of every stage (stage j maps L^{j-1} D -> L^j D)."""

    graph: Digraph
    base: Digraph
    stages: tuple[LineDigraph, ...]

    @property
    def iterations(self) -> int:
        return len(self.stages)

    @property
    def last(self) -> LineDigraph:
        if not self.stages:
            return LineDigraph(self.base, self.base, LineageMap.identity(self.base))
        return self.stages[-1]


def iterated_line_digraph(graph: Digraph, k: int) -> IteratedLineDigraph:
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    stages = []
    current = graph
    for stage in range(1, k + 1):
        if current.size == 0:
            raise PreconditionError(f"stage {stage}: digraph L^{stage - 1}D has no arcs")
        ld = line_digraph(current)
        stages.append(ld)
        current = ld.graph
    return IteratedLineDigraph(current, graph, tuple(stages))


def heuchenne_check(graph: Digraph) -> tuple[int, int] | None:
    """Return None when ``graph`` is a line digraph, else the first violating pair.

    A pair violates the condition when its in-neighborhoods meet without
    being equal. Multiple arcs cannot occur in a :class:`Digraph`.
    """
    for u, v in combinations(graph.vertices, 2):
        a, b = graph.in_neighbors(u), graph.in_neighbors(v)
        if a != b and a & b:
            return u, v
    return None


def is_line_digraph(graph: Digraph) -> bool:
    return heuchenne_check(graph) is None


def arcs_to_line_vertices(lineage: LineageMap, arcs: Iterable[Arc]) -> frozenset[int]:
    out = set()
    for arc in arcs:
        arc = (int(arc[0]), int(arc[1]))
        if arc not in lineage.forward:
            raise DigraphError(f"arc {arc} is not an arc of the parent digraph")
        out.add(lineage.forward[arc])
    return frozenset(out)


def line_vertices_to_arcs(lineage: LineageMap, vertices: Iterable[int]) -> frozenset[Arc]:
    return frozenset(lineage.backward[v] for v in vertices)
