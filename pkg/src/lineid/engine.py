"""Exhaustive verification and exact search for (1, <=l)-identifying codes.

Every vertex set is handled as an integer bitmask. The trace of a set X
under a code C is ``N^-[X] & C``. Subsets are always enumerated by size
and then lexicographically, which fixes the order in which violations and
minimum codes are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .digraph import Digraph, is_strongly_connected, mask_to_set, set_to_mask
from .errors import BudgetExhausted, DigraphError, PreconditionError
from .line import heuchenne_check

DEFAULT_ELL_CAP = 3


@dataclass(frozen=True)
class SeparationViolation:
    """Why a vertex set fails to be a (1, <=l)-identifying code.

    ``kind`` is ``"not-dominating"`` (``x`` holds the undominated vertex and
    ``y`` is empty) or ``"not-separating"`` (``x`` and ``y`` are distinct sets
    with equal traces).
    """

    kind: str
    x: tuple[int, ...]
    y: tuple[int, ...] = ()


@dataclass(frozen=True)
class CodeSearchResult:
    identifying_number: int | None
    code: frozenset[int] | None
    nodes_explored: int
    exact: bool = True
    lower_bound: int = 0
    upper_bound: int | None = None


def _check_ell(ell: int, cap: int) -> None:
    if ell < 1:
        raise PreconditionError("ell must be at least 1")
    if ell > cap:
        raise PreconditionError(
            f"ell={ell} exceeds the cap {cap}; subset-pair enumeration grows like n^(2*ell). "
            f"Raise ell_cap explicitly if you really want this."
        )


def _as_mask(graph: Digraph, code: Iterable[int] | int) -> int:
    if isinstance(code, int):
        return code
    mask = 0
    for v in code:
        if not 0 <= v < graph.order:
            raise DigraphError(f"code vertex {v} is not a vertex of the digraph")
        mask |= 1 << v
    return mask


def _subsets(n: int, ell: int):
    for size in range(1, ell + 1):
        yield from combinations(range(n), size)


def _first_collision(graph: Digraph, code_mask: int, ell: int) -> SeparationViolation | None:
    closed = [graph.closed_in_mask(v) for v in graph.vertices]
    first_by_trace: dict[int, tuple[int, ...]] = {}
    best = None
    for subset in _subsets(graph.order, ell):
        trace = 0
        for v in subset:
            trace |= closed[v]
        trace &= code_mask
        earlier = first_by_trace.get(trace)
        if earlier is None:
            first_by_trace[trace] = subset
            continue
        # pairs are ordered by (key of X, key of Y); X is the earliest set with this trace
        pair = (earlier, subset)
        if best is None or _pair_key(pair) < _pair_key(best):
            best = pair
    if best is None:
        return None
    return SeparationViolation("not-separating", best[0], best[1])


def _pair_key(pair):
    x, y = pair
    return (len(x), x, len(y), y)


def is_dominating(graph: Digraph, code: Iterable[int] | int) -> int | None:
    """Return None if ``code`` dominates, else the smallest undominated vertex."""
    mask = _as_mask(graph, code)
    for v in graph.vertices:
        if not graph.closed_in_mask(v) & mask:
            return v
    return None


def verify_identifying_code(
    graph: Digraph, code: Iterable[int] | int, ell: int = 1, ell_cap: int = DEFAULT_ELL_CAP
) -> SeparationViolation | None:
    """Check ``code`` against the (1, <=ell) definition.

    Returns None when the code is valid, otherwise the first violation in
    size-then-lexicographic order.
    """
    _check_ell(ell, ell_cap)
    mask = _as_mask(graph, code)
    v = is_dominating(graph, mask)
    if v is not None:
        return SeparationViolation("not-dominating", (v,))
    return _first_collision(graph, mask, ell)


def is_identifying_code(graph: Digraph, code, ell: int = 1, ell_cap: int = DEFAULT_ELL_CAP) -> bool:
    return verify_identifying_code(graph, code, ell, ell_cap) is None


def admissibility_witness(
    graph: Digraph, ell: int, ell_cap: int = DEFAULT_ELL_CAP
) -> SeparationViolation | None:
    """Sets X != Y with N^-[X] == N^-[Y] and |X|, |Y| <= ell, or None if none exist."""
    _check_ell(ell, ell_cap)
    return _first_collision(graph, (1 << graph.order) - 1, ell)


def admits_identifying_code(graph: Digraph, ell: int, ell_cap: int = DEFAULT_ELL_CAP) -> bool:
    return admissibility_witness(graph, ell, ell_cap) is None


class InfeasibleError(PreconditionError):
    """The digraph admits no (1, <=l)-identifying code at all."""

    def __init__(self, message, violation):
        super().__init__(message)
        self.violation = violation


def min_identifying_code(
    graph: Digraph,
    ell: int = 1,
    budget: int | None = None,
    ell_cap: int = DEFAULT_ELL_CAP,
) -> CodeSearchResult:
    """Exact minimum (1, <=ell)-identifying code by size-ascending search.

    Within each size the candidates are visited depth-first in
    lexicographic order, pruning any branch that leaves a vertex with all
    of its closed in-neighbors skipped. The first code found is therefore
    the lexicographically smallest minimum code.

    Raises :class:`InfeasibleError` when no code exists. If ``budget`` search
    nodes are spent first, returns an inexact result whose ``upper_bound``
    is the whole vertex set and whose ``lower_bound`` is the smallest size
    not yet ruled out.
    """
    _check_ell(ell, ell_cap)
    witness = admissibility_witness(graph, ell, ell_cap)
    if witness is not None:
        raise InfeasibleError(f"digraph admits no (1,<={ell})-identifying code", witness)
    n = graph.order
    closed_out = [graph.closed_out_mask(v) for v in graph.vertices]
    # vertex v is "settled" once every member of N^-[v] lies below the scan position
    settled_before = [0] * (n + 1)
    for v in graph.vertices:
        reach = max(mask_to_set(graph.closed_in_mask(v)))
        for pos in range(reach + 1, n + 1):
            settled_before[pos] |= 1 << v

    nodes = 0

    def search(size):
        nonlocal nodes
        stack = [(0, 0, 0, 0)]  # (next candidate, depth, chosen mask, dominated mask)
        while stack:
            start, depth, chosen, dominated = stack.pop()
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted("search budget exhausted", nodes_explored=nodes - 1)
            if settled_before[start] & ~dominated:
                continue
            if depth == size:
                if dominated == (1 << n) - 1 and _first_collision(graph, chosen, ell) is None:
                    return chosen
                continue
            # push in reverse so the smallest candidate is explored first
            for v in range(n - (size - depth), start - 1, -1):
                stack.append((v + 1, depth + 1, chosen | (1 << v), dominated | closed_out[v]))
        return None

    for size in range(1, n + 1):
        try:
            found = search(size)
        except BudgetExhausted:
            return CodeSearchResult(
                None, None, nodes - 1, exact=False, lower_bound=size, upper_bound=n
            )
        if found is not None:
            return CodeSearchResult(size, mask_to_set(found), nodes, lower_bound=size, upper_bound=size)
    raise AssertionError("the full vertex set must be a code once admissibility holds")


def equiv_classes(graph: Digraph) -> list[tuple[int, ...]]:
    """Partition of V by equal open in-neighborhoods, classes sorted by smallest member."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in graph.vertices:
        groups.setdefault(graph.in_neighbors(v), []).append(v)
    return sorted(tuple(g) for g in groups.values())


def code_structure_holds(graph: Digraph, code: Iterable[int]) -> bool:
    """Each class of equal in-neighborhoods has at most one vertex outside ``code``."""
    code = set(code)
    return all(sum(1 for v in cls if v not in code) <= 1 for cls in equiv_classes(graph))


def non_existence_witness_ell3(graph: Digraph) -> SeparationViolation:
    """Explicit X, Y with |X| = 3 and N^-[X] == N^-[Y] in a line digraph with min in-degree >= 2.

    Takes the smallest pair u < v with equal in-neighborhoods and the smallest
    out-neighbor w of u; then X = {u, v, w} and Y = {v, w}.
    """
    if graph.order < 2 or graph.min_in_degree < 2:
        raise PreconditionError("needs minimum in-degree >= 2")
    if not is_strongly_connected(graph):
        raise PreconditionError("needs a strongly connected digraph")
    if heuchenne_check(graph) is not None:
        raise PreconditionError("needs a line digraph")
    for cls in equiv_classes(graph):
        if len(cls) >= 2:
            u, v = cls[0], cls[1]
            break
    else:
        raise AssertionError("a line digraph with min in-degree >= 2 has two equivalent vertices")
    w = min(graph.out_neighbors(u))
    x, y = tuple(sorted((u, v, w))), tuple(sorted((v, w)))
    if set_to_mask(_closed(graph, x)) != set_to_mask(_closed(graph, y)) or w == v:
        raise AssertionError("constructed witness does not collide")
    return SeparationViolation("not-separating", x, y)


def _closed(graph, vertices):
    out = set()
    for v in vertices:
        out |= graph.in_neighbors(v) | {v}
    return out
