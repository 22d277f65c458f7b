"""Arc-identifying codes of a digraph D, i.e. identifying codes of L(D) seen from D.

The identifier of an arc uv is its ball ``{uv} | in_arcs(u)``; a set of
arcs C is an arc-identifying code when every ball meets C and no two
arcs have the same ball trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .digraph import Arc, Digraph, is_oriented, is_strongly_connected
from .errors import BudgetExhausted, DigraphError, PreconditionError, VerificationError

DEFAULT_HAMILTONIAN_BOUND = 14


@dataclass(frozen=True)
class ArcCode:
    arcs: frozenset[Arc]
    provenance: str = "manual"

    def __len__(self):
        return len(self.arcs)


@dataclass(frozen=True)
class ArcViolation:
    """``kind`` is ``"not-dominating"`` (one arc) or ``"not-separating"`` (two arcs)."""

    kind: str
    arcs: tuple[Arc, ...]


@dataclass(frozen=True)
class CharacFailure:
    """Which of the two local conditions failed, and where.

    Condition ``"i"`` carries a vertex, condition ``"ii"`` an arc.
    """

    condition: str
    witness: int | Arc


def _require_arc(graph: Digraph, arc: Arc) -> Arc:
    u, v = int(arc[0]), int(arc[1])
    if not graph.has_arc(u, v):
        raise DigraphError(f"({u},{v}) is not an arc of the digraph")
    return u, v


def _arc_set(graph: Digraph, code) -> frozenset[Arc]:
    arcs = code.arcs if isinstance(code, ArcCode) else code
    return frozenset(_require_arc(graph, a) for a in arcs)


def arc_identifier(graph: Digraph, arc: Arc) -> frozenset[Arc]:
    u, v = _require_arc(graph, arc)
    return graph.in_arcs(u) | {(u, v)}


def verify_arc_identifying_code(graph: Digraph, code: ArcCode | Iterable[Arc]) -> ArcViolation | None:
    """Definitional check. Returns None when valid, else the first offending arc or arc pair."""
    c = _arc_set(graph, code)
    traces = {}
    for arc in graph.arcs:
        t = arc_identifier(graph, arc) & c
        if not t:
            return ArcViolation("not-dominating", (arc,))
        traces[arc] = t
    for a, b in combinations(graph.arcs, 2):
        if traces[a] == traces[b]:
            return ArcViolation("not-separating", (a, b))
    return None


def _require_sc3(graph: Digraph) -> None:
    if graph.order < 3:
        raise PreconditionError("needs order >= 3")
    if not is_strongly_connected(graph):
        raise PreconditionError("needs a strongly connected digraph")


def check_charac_conditions(graph: Digraph, code: ArcCode | Iterable[Arc]) -> CharacFailure | None:
    """Local characterization of arc-identifying codes (strongly connected, order >= 3).

    (i)  every vertex has at most one out-arc outside C, and a vertex with
         exactly one such arc has an in-arc in C;
    (ii) for every uv in C with vu in C or exactly one out-arc of v outside
         C, some in-arc of u or v other than uv and vu lies in C.
    """
    _require_sc3(graph)
    c = _arc_set(graph, code)
    missing_out = {v: len(graph.out_arcs(v) - c) for v in graph.vertices}
    for v in graph.vertices:
        if missing_out[v] > 1:
            return CharacFailure("i", v)
        if missing_out[v] == 1 and not graph.in_arcs(v) & c:
            return CharacFailure("i", v)
    for u, v in sorted(c):
        if (v, u) in c or missing_out[v] == 1:
            rest = (graph.in_arcs(u) | graph.in_arcs(v)) - {(u, v), (v, u)}
            if not rest & c:
                return CharacFailure("ii", (u, v))
    return None


def lower_bound_line_idnumber(graph: Digraph) -> int:
    """|A(D)| - |V(D)|, a lower bound on the identifying number of L(D)."""
    if graph.min_in_degree < 2:
        raise PreconditionError("the bound needs minimum in-degree >= 2")
    if not is_strongly_connected(graph):
        raise PreconditionError("the bound needs a strongly connected digraph")
    return graph.size - graph.order


@dataclass(frozen=True)
class AlgoState:
    """Snapshot of the working sets of :func:`algorithm1`.

    ``processed`` holds the vertices whose out-arcs have been decided,
    ``covered`` the vertices known to have an in-arc in the code, and
    ``target`` the vertex the current chain is trying to cover.
    """

    processed: frozenset[int]
    covered: frozenset[int]
    code: frozenset[Arc]
    target: int | None = None


@dataclass(frozen=True)
class Algorithm1Result:
    code: ArcCode
    u_minus: frozenset[int]
    predicted_size: int
    trace: tuple[dict, ...]
    backtracks: int = 0


TIE_BREAKS = ("lookahead", "smallest")
DEFAULT_ALGO1_BUDGET = 200_000


def algorithm1(
    graph: Digraph, tie_break: str = "lookahead", budget: int | None = DEFAULT_ALGO1_BUDGET
) -> Algorithm1Result:
    """Arc-identifying code for oriented strongly connected digraphs with min in-degree >= 2.

    Vertices whose in-neighbors all have out-degree 1 get one in-arc up
    front. After that every vertex of out-degree >= 2 is processed once:
    all of its out-arcs but one join the code, and the head of the omitted
    arc becomes the next target, covered by processing another of its
    in-neighbors. When a target has no unprocessed in-neighbor left, the
    chain restarts from any arc into an uncovered vertex.

    The steps leave open which in-neighbor, which omitted arc and which
    restart arc to take. Those choices are explored depth-first: candidates
    are ordered by ``tie_break`` ("smallest" id first, or "lookahead", which
    first prefers omitting heads that are already covered or that another
    unprocessed vertex can still cover), and a branch is abandoned as soon
    as some uncovered vertex has no unprocessed in-neighbor. The output is
    re-checked against :func:`check_charac_conditions`.
    """
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"unknown tie-break policy {tie_break!r}")
    if graph.min_in_degree < 2:
        raise PreconditionError("the greedy arc construction needs minimum in-degree >= 2")
    if not is_strongly_connected(graph):
        raise PreconditionError("the greedy arc construction needs a strongly connected digraph")
    if not is_oriented(graph):
        raise PreconditionError("the greedy arc construction needs an oriented digraph (no digons)")

    V = frozenset(graph.vertices)
    v1 = frozenset(v for v in V if graph.out_degree(v) == 1)
    u_minus = frozenset(v for v in V if graph.in_neighbors(v) <= v1)
    trace: list[dict] = []
    code = set()
    for v in sorted(u_minus):
        f = min(graph.in_neighbors(v))
        code.add((f, v))
        trace.append({"step": "u-minus", "vertex": v, "arc": (f, v)})
    root = AlgoState(v1, u_minus, frozenset(code))

    def process(st, x, omit, target):
        return AlgoState(
            st.processed | {x},
            st.covered | (graph.out_neighbors(x) - {omit}),
            st.code | (graph.out_arcs(x) - {(x, omit)}),
            target,
        )

    def safety(st, z, besides):
        """0: already covered, 1: another unprocessed vertex can cover it, 2: would be stranded."""
        if z in st.covered:
            return 0
        return 1 if graph.in_neighbors(z) - st.processed - {besides} else 2

    def order(options, key):
        return sorted(options) if tie_break == "smallest" else sorted(options, key=key)

    def moves(st):
        """Admissible next steps from ``st`` as (log entry, next state), best first."""
        if st.target is None:
            opening = [(a, b) for a, b in graph.arcs if a not in st.processed and b not in st.covered]
            for a, b in order(opening, lambda arc: (safety(st, arc[1], arc[0]), arc)):
                yield {"step": "start", "vertex": a, "omitted": (a, b)}, process(st, a, b, b)
            return
        y = st.target
        feeders = graph.in_neighbors(y) - st.processed
        if feeders:
            options = [(t, z) for t in feeders for z in graph.out_neighbors(t) - {y}]
            for t, z in order(options, lambda tz: (tz[0], safety(st, tz[1], tz[0]), tz[1])):
                yield {"step": "chain", "vertex": t, "covers": y, "omitted": (t, z)}, process(st, t, z, z)
            return
        restarts = [(a, b) for a, b in graph.arcs if b not in st.covered]
        for a, b in order(restarts, lambda arc: (min(safety(st, arc[1], arc[0]), 2), arc)):
            # a processed tail necessarily omitted b already, so this only retargets the chain
            yield {"step": "restart", "vertex": a, "omitted": (a, b)}, process(st, a, b, b)

    nodes = 0
    backtracks = 0
    path: list[dict] = []

    def search(st):
        nonlocal nodes, backtracks
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted("the greedy arc construction choice search exhausted its budget", nodes_explored=nodes - 1)
        if st.covered == V:
            return st
        if any(not graph.in_neighbors(v) - st.processed for v in V - st.covered):
            backtracks += 1
            return None
        for entry, nxt in moves(st):
            path.append(entry)
            done = search(nxt)
            if done is not None:
                return done
            path.pop()
        return None

    final = search(root)
    if final is None:
        raise VerificationError(
            "no run of the greedy arc construction covers every vertex on this digraph", trace=trace + path
        )
    trace.extend(path)
    st = final
    for u in sorted(V - st.processed):
        v = min(graph.out_neighbors(u))
        st = process(st, u, v, None)
        trace.append({"step": "finish", "vertex": u, "omitted": (u, v)})

    result = ArcCode(st.code, "algo1")
    failure = check_charac_conditions(graph, result)
    if failure is not None:
        raise VerificationError(f"the greedy arc construction output fails condition ({failure.condition})", trace=trace)
    return Algorithm1Result(
        result, u_minus, graph.size - graph.order + len(u_minus), tuple(trace), backtracks
    )


def find_hamiltonian_cycle(
    graph: Digraph,
    budget: int | None = None,
    max_order: int = DEFAULT_HAMILTONIAN_BOUND,
) -> tuple[int, ...] | None:
    """Backtracking search from vertex 0, trying out-neighbors in increasing order.

    Returns the cycle as a vertex sequence (the closing arc back to 0 is
    implicit), or None. Digraphs of order < 3 have no Hamiltonian cycle
    under this convention.
    """
    n = graph.order
    if n > max_order:
        raise PreconditionError(f"order {n} exceeds the Hamiltonian search bound {max_order}")
    if n < 3:
        return None
    succ = [sorted(graph.out_neighbors(v)) for v in graph.vertices]
    path = [0]
    on_path = 1
    nodes = 0
    # iterative DFS: one iterator of remaining successors per path position
    iters = [iter(succ[0])]
    while iters:
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted("Hamiltonian search budget exhausted", nodes_explored=nodes - 1)
        advanced = False
        for w in iters[-1]:
            if on_path >> w & 1:
                continue
            path.append(w)
            on_path |= 1 << w
            if len(path) == n:
                if graph.has_arc(w, 0):
                    return tuple(path)
                path.pop()
                on_path &= ~(1 << w)
                continue
            iters.append(iter(succ[w]))
            advanced = True
            break
        if not advanced:
            iters.pop()
            last = path.pop()
            on_path &= ~(1 << last)
    return None


def _cycle_arcs(cycle: tuple[int, ...]) -> set[Arc]:
    return {(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}


def hamiltonian_code(graph: Digraph, cycle: tuple[int, ...]) -> ArcCode:
    """All arcs off a Hamiltonian cycle; valid when min in-degree >= 3 and min out-degree >= 2."""
    if graph.min_in_degree < 3 or graph.min_out_degree < 2:
        raise PreconditionError("needs minimum in-degree >= 3 and minimum out-degree >= 2")
    if sorted(cycle) != list(graph.vertices):
        raise PreconditionError("cycle must visit every vertex exactly once")
    h = _cycle_arcs(cycle)
    if not all(graph.has_arc(u, v) for u, v in h):
        raise PreconditionError("cycle uses a pair that is not an arc")
    code = ArcCode(frozenset(set(graph.arcs) - h), "hamiltonian")
    failure = check_charac_conditions(graph, code)
    if failure is not None:
        raise VerificationError(f"Hamiltonian complement fails condition ({failure.condition})")
    return code


def kautz_identifying_number(d: int, k: int) -> int:
    if d < 2 or k < 2:
        raise PreconditionError("closed form holds for d >= 2 and k >= 2")
    return d**k - d ** (k - 2)
