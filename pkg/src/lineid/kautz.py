"""Shift arithmetic on Kautz words, the 1-factorization of K(d, k), and codes of K(2, k).

Words are tuples of letters in ``0..d``; string labels are accepted
wherever a word is expected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arccodes import check_charac_conditions
from .digraph import Arc, Digraph, digons
from .engine import verify_identifying_code
from .errors import PreconditionError, VerificationError
from .generators import kautz, label_to_word, word_to_label
from .line import arcs_to_line_vertices, line_digraph

Word = tuple[int, ...]


def _word(x) -> Word:
    return label_to_word(x) if isinstance(x, str) else tuple(x)


def _check_word(x: Word, d: int | None = None) -> None:
    if len(x) < 2:
        raise PreconditionError("shift operations need words of length >= 2")
    if any(a == b for a, b in zip(x, x[1:])):
        raise PreconditionError(f"{x} repeats a letter in consecutive positions")
    if d is not None and not all(0 <= a <= d for a in x):
        raise PreconditionError(f"{x} uses letters outside 0..{d}")


def sigma1(x) -> Word:
    """Rotate left; when first and last letters agree, append the second letter instead."""
    x = _word(x)
    _check_word(x)
    return x[1:] + ((x[0],) if x[0] != x[-1] else (x[1],))


def inc(x, i: int, d: int) -> Word:
    """Replace the last letter by the shifted letter of the generalized K-shift."""
    x = _word(x)
    _check_word(x, d)
    if not 0 <= i < d:
        raise PreconditionError(f"shift index must lie in 0..{d - 1}")
    prev, last = x[-2], x[-1]
    if (prev > last and prev > last + i) or (prev < last and prev + d + 1 > last + i):
        new = (last + i) % (d + 1)
    else:
        new = (last + i + 1) % (d + 1)
    return x[:-1] + (new,)


def sigma1_plus(x, i: int, d: int) -> Word:
    return inc(sigma1(x), i, d)


def sigmak_plus(x, i: int, d: int, j: int) -> Word:
    """``j``-fold iterate of :func:`sigma1_plus`."""
    if j < 1:
        raise PreconditionError("iteration count must be >= 1")
    x = _word(x)
    for _ in range(j):
        x = sigma1_plus(x, i, d)
    return x


@dataclass(frozen=True)
class OneFactor:
    index: int
    arcs: frozenset[Arc]

    def labelled(self, graph: Digraph) -> list[tuple[str, str]]:
        return sorted((graph.label(u), graph.label(v)) for u, v in self.arcs)


def _validate_factor(graph: Digraph, arcs: list[Arc], i: int) -> None:
    heads = [0] * graph.order
    for u, v in arcs:
        if not graph.has_arc(u, v):
            raise VerificationError(f"factor {i}: {graph.label(u)} -> {graph.label(v)} is not an arc")
        heads[v] += 1
    for v, h in enumerate(heads):
        if h != 1:
            raise VerificationError(f"factor {i}: vertex {graph.label(v)} has {h} in-arcs")


def one_factor(d: int, k: int, i: int, graph: Digraph | None = None) -> OneFactor:
    """The arcs x -> sigma1_plus(x, i) of K(d, k), checked to form a 1-factor."""
    if d < 2 or k < 2:
        raise PreconditionError("factorization needs d >= 2 and k >= 2")
    graph = graph if graph is not None else kautz(d, k)
    arcs = []
    for v in graph.vertices:
        w = sigma1_plus(graph.label(v), i, d)
        arcs.append((v, graph.vertex(word_to_label(w))))
    _validate_factor(graph, arcs, i)
    return OneFactor(i, frozenset(arcs))


def factorization(d: int, k: int) -> list[OneFactor]:
    """Partition of the arcs of K(d, k) into d 1-factors F_0, ..., F_{d-1}."""
    graph = kautz(d, k)
    factors = [one_factor(d, k, i, graph) for i in range(d)]
    union = set()
    for f in factors:
        if union & f.arcs:
            raise VerificationError(f"factor {f.index} overlaps an earlier factor")
        union |= f.arcs
    if union != set(graph.arcs):
        raise VerificationError("factors do not cover every arc")
    if d == 2:
        f0 = factors[0].arcs
        for u, v in digons(graph):
            if (u, v) not in f0 or (v, u) not in f0:
                raise VerificationError(f"digon {graph.label(u)} <-> {graph.label(v)} escapes F_0")
    return factors


@dataclass(frozen=True)
class KautzCode:
    graph: Digraph
    vertices: frozenset[int]

    @property
    def labels(self) -> list[str]:
        return sorted(self.graph.label(v) for v in self.vertices)


def k2k_identifying_code(k: int) -> KautzCode:
    """Identifying code of K(2, k) of size 3 * 2^(k-2).

    For k = 2 it is the directed triangle 01 -> 12 -> 20. For larger k it is
    the factor F_1 of K(2, k-1), read as vertices of its line digraph.
    """
    if k < 2:
        raise PreconditionError("needs k >= 2")
    if k == 2:
        graph = kautz(2, 2)
        code = frozenset(graph.vertex(lab) for lab in ("01", "12", "20"))
    else:
        parent = kautz(2, k - 1)
        f1 = one_factor(2, k - 1, 1, parent)
        failure = check_charac_conditions(parent, f1.arcs)
        if failure is not None:
            raise VerificationError(f"F_1 of K(2,{k - 1}) fails condition ({failure.condition})")
        ld = line_digraph(parent)
        graph = ld.graph
        code = arcs_to_line_vertices(ld.lineage, f1.arcs)
    violation = verify_identifying_code(graph, code, 1)
    if violation is not None:
        raise VerificationError(f"K(2,{k}) code fails verification: {violation}")
    return KautzCode(graph, code)
