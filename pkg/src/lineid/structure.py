"""Structural decision procedures for identifying codes in line digraphs.

The detectors look for the three forbidden configurations that decide
(1, <=2)-identifiability of a line digraph. Each one scans candidate
vertices in increasing id order and returns the first hit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph, digons, is_strongly_connected
from .engine import (
    DEFAULT_ELL_CAP,
    SeparationViolation,
    admissibility_witness,
    non_existence_witness_ell3,
)
from .errors import PreconditionError
from .line import heuchenne_check


@dataclass(frozen=True)
class ForbiddenWitness:
    """One embedded forbidden configuration.

    ``binding`` names the vertices: ``x``, ``y``, ``z`` for kind ``a`` (the
    3-cycle z -> y -> x -> z) and ``x``, ``x'``, ``y``, ``y'`` for kinds ``b``
    and ``c``.
    """

    kind: str
    binding: dict[str, int]

    def separation_pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The sets X, Y with equal closed in-neighborhoods implied by the configuration."""
        b = self.binding
        if self.kind == "a":
            return tuple(sorted((b["x"], b["z"]))), tuple(sorted((b["y"], b["z"])))
        return tuple(sorted((b["x"], b["x'"]))), tuple(sorted((b["y"], b["y'"])))

    def holds_in(self, graph: Digraph) -> bool:
        """Re-check the defining equations by direct neighborhood queries."""
        b = self.binding
        N = graph.in_neighbors
        if self.kind == "a":
            x, y, z = b["x"], b["y"], b["z"]
            return (
                len({x, y, z}) == 3
                and graph.has_arc(z, y) and graph.has_arc(y, x) and graph.has_arc(x, z)
                and graph.in_degree(x) == 1 and graph.in_degree(y) == 1
            )
        x, xp, y, yp = b["x"], b["x'"], b["y"], b["y'"]
        if self.kind == "b":
            return (
                len({x, xp, y, yp}) == 4
                and N(x) == {y, yp} and N(yp) == {xp}
                and x in N(xp) and x in N(y)
            )
        if self.kind == "c":
            return N(x) == {y, yp} and N(y) == {x, xp} and bool(N(xp) & N(yp))
        return False


def find_config_a(graph: Digraph) -> ForbiddenWitness | None:
    """A 3-cycle (z, y, x, z) with d^-(x) = d^-(y) = 1."""
    for x in graph.vertices:
        if graph.in_degree(x) != 1:
            continue
        (y,) = graph.in_neighbors(x)
        if graph.in_degree(y) != 1:
            continue
        (z,) = graph.in_neighbors(y)
        if z != x and graph.has_arc(x, z):
            return ForbiddenWitness("a", {"x": x, "y": y, "z": z})
    return None


def find_config_b(graph: Digraph) -> ForbiddenWitness | None:
    """N^-(x) = {y, y'}, N^-(y') = {x'} and x in N^-(x') and N^-(y), all four distinct."""
    for x in graph.vertices:
        if graph.in_degree(x) != 2:
            continue
        pair = sorted(graph.in_neighbors(x))
        for y, yp in (pair, pair[::-1]):
            if graph.in_degree(yp) != 1:
                continue
            (xp,) = graph.in_neighbors(yp)
            if len({x, xp, y, yp}) == 4 and graph.has_arc(x, xp) and graph.has_arc(x, y):
                return ForbiddenWitness("b", {"x": x, "x'": xp, "y": y, "y'": yp})
    return None


def find_config_c(graph: Digraph) -> ForbiddenWitness | None:
    """N^-(x) = {y, y'}, N^-(y) = {x, x'} and N^-(x') meets N^-(y')."""
    for x in graph.vertices:
        if graph.in_degree(x) != 2:
            continue
        pair = sorted(graph.in_neighbors(x))
        for y, yp in (pair, pair[::-1]):
            if graph.in_degree(y) != 2 or x not in graph.in_neighbors(y):
                continue
            (xp,) = graph.in_neighbors(y) - {x}
            if graph.in_neighbors(xp) & graph.in_neighbors(yp):
                return ForbiddenWitness("c", {"x": x, "x'": xp, "y": y, "y'": yp})
    return None


@dataclass(frozen=True)
class HypothesisReport:
    is_line_digraph: bool
    strongly_connected: bool
    is_four_cycle: bool
    in_degree_one_on_digon: int | None
    heuchenne_witness: tuple[int, int] | None = None

    @property
    def applicable(self) -> bool:
        return (
            self.is_line_digraph
            and self.strongly_connected
            and not self.is_four_cycle
            and self.in_degree_one_on_digon is None
        )


@dataclass(frozen=True)
class Theorem1Decision:
    hypotheses: HypothesisReport
    admits2: bool | None
    witness: ForbiddenWitness | None

    @property
    def applicable(self) -> bool:
        return self.hypotheses.applicable


def hypothesis_report(graph: Digraph) -> HypothesisReport:
    heu = heuchenne_check(graph)
    sc = graph.order > 0 and is_strongly_connected(graph)
    four_cycle = (
        graph.order == 4 and graph.size == 4 and sc
        and all(graph.in_degree(v) == 1 for v in graph.vertices)
    )
    on_digon = sorted({v for pair in digons(graph) for v in pair if graph.in_degree(v) == 1})
    return HypothesisReport(
        is_line_digraph=heu is None,
        strongly_connected=sc,
        is_four_cycle=four_cycle,
        in_degree_one_on_digon=on_digon[0] if on_digon else None,
        heuchenne_witness=heu,
    )


def theorem1_decide(graph: Digraph) -> Theorem1Decision:
    """Decide (1, <=2)-identifiability of a line digraph from forbidden configurations.

    Outside the hypotheses (a strongly connected line digraph, not a 4-cycle,
    with no in-degree-1 vertex on a digon) the decision is reported as not
    applicable and ``admits2`` is None.
    """
    report = hypothesis_report(graph)
    if not report.applicable:
        return Theorem1Decision(report, None, None)
    for finder in (find_config_a, find_config_b, find_config_c):
        witness = finder(graph)
        if witness is not None:
            return Theorem1Decision(report, False, witness)
    return Theorem1Decision(report, True, None)


@dataclass(frozen=True)
class CapabilityReport:
    """What the structure results certify about (1, <=l)-identifiability.

    ``guaranteed`` is the largest l certified admissible (0 when nothing is
    certified); ``impossible_from`` is the smallest l certified
    inadmissible, or None.
    """

    guaranteed: int
    impossible_from: int | None
    rationale: tuple[str, ...]
    witness: ForbiddenWitness | SeparationViolation | None = None
    oracle: dict[int, bool] = field(default_factory=dict)

    @property
    def oracle_consistent(self) -> bool:
        for ell, admits in self.oracle.items():
            if admits and self.impossible_from is not None and ell >= self.impossible_from:
                return False
            if not admits and ell <= self.guaranteed:
                return False
        return True


def classify_capabilities(
    graph: Digraph,
    iterations: int | None = None,
    oracle_order_bound: int = 12,
) -> CapabilityReport:
    """Strongest statement the line-digraph results make about ``graph``.

    ``iterations`` is k when ``graph`` is known to be L^k D. When omitted,
    ``graph`` is treated as L D if it passes the line-digraph test and as
    no line digraph otherwise. For orders up to ``oracle_order_bound`` every
    claim is cross-checked against the brute-force oracle.
    """
    is_line = heuchenne_check(graph) is None
    if iterations is None:
        iterations = 1 if is_line else 0
    elif iterations >= 1 and not is_line:
        raise PreconditionError("graph was declared a line digraph but fails the Heuchenne test")
    sc = graph.order > 0 and is_strongly_connected(graph)
    min_in = graph.min_in_degree
    guaranteed, impossible, tags, witness = 0, None, [], None

    if iterations >= 1 and sc and graph.order >= 3:
        guaranteed = 1
        tags.append("line-digraph-admits-1")
    if iterations >= 1 and sc:
        if iterations >= 2 and min_in >= 2:
            guaranteed = 2
            tags.append("iterated-min-in-2-admits-2")
        elif iterations == 1 and min_in >= 3:
            guaranteed = 2
            tags.append("min-in-3-admits-2")
        elif all(graph.in_degree(v) == 2 for v in graph.vertices):
            witness = find_config_c(graph)
            tags.append("2-in-regular-config-c")
            if witness is None:
                guaranteed = 2
            else:
                impossible = 2
        else:
            decision = theorem1_decide(graph)
            if decision.applicable:
                tags.append("forbidden-configurations")
                if decision.admits2:
                    guaranteed = 2
                else:
                    impossible, witness = 2, decision.witness
        if min_in >= 2:
            if impossible is None:
                impossible = 3
                witness = non_existence_witness_ell3(graph)
            tags.append("min-in-2-never-admits-3")

    oracle = {}
    if graph.order <= oracle_order_bound:
        for ell in range(1, DEFAULT_ELL_CAP + 1):
            oracle[ell] = admissibility_witness(graph, ell) is None
    return CapabilityReport(guaranteed, impossible, tuple(tags), witness, oracle)
