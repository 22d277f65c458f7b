from __future__ import annotations

import pytest
from hypothesis import given, settings

from lineid import generators
from lineid.digraph import Digraph
from lineid.engine import (
    InfeasibleError,
    SeparationViolation,
    admissibility_witness,
    admits_identifying_code,
    code_structure_holds,
    equiv_classes,
    is_dominating,
    is_identifying_code,
    min_identifying_code,
    non_existence_witness_ell3,
    verify_identifying_code,
)
from lineid.errors import PreconditionError
from lineid.line import line_digraph

from conftest import small_digraphs, strong_digraphs
from oracles import closed_in, naive_is_code, naive_min_code

CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def _ids(g, labels):
    return {g.vertex(x) for x in labels}


def test_domination():
    assert is_dominating(CYCLE3, {0}) == 2
    assert is_dominating(CYCLE3, {0, 1}) is None
    assert is_dominating(CYCLE3, range(3)) is None


def test_three_cycle_code_of_k22(k22):
    assert verify_identifying_code(k22, _ids(k22, ["01", "12", "20"]), 1) is None


def test_tt3_violations():
    tt3 = generators.fixture("tt3")  # a=0, b=1, c=2
    v = verify_identifying_code(tt3, range(3), 2)
    assert v.kind == "not-separating"
    assert closed_in(tt3, v.x) == closed_in(tt3, v.y)
    # size-then-lex order puts {b} against {a, b} ahead of {c} against {b, c}
    assert (v.x, v.y) == ((1,), (0, 1))
    assert closed_in(tt3, [2]) == closed_in(tt3, [1, 2])
    assert verify_identifying_code(tt3, range(3), 1) is None


def test_ell_cap():
    with pytest.raises(PreconditionError, match="cap"):
        verify_identifying_code(CYCLE3, range(3), 4)
    assert verify_identifying_code(CYCLE3, range(3), 1, ell_cap=5) is None
    with pytest.raises(PreconditionError):
        verify_identifying_code(CYCLE3, range(3), 0)


def test_admissibility(k22, k32):
    assert not admits_identifying_code(k22, 2)
    assert admits_identifying_code(k32, 2)
    assert admits_identifying_code(k22, 1)


def test_min_codes(k22, k32):
    r = min_identifying_code(k22, 1)
    assert r.identifying_number == 3 and r.exact
    assert is_identifying_code(k22, r.code)
    assert min_identifying_code(CYCLE3, 1).identifying_number == 2
    assert min_identifying_code(k32, 1).identifying_number == 8


def test_min_code_infeasible(k22):
    with pytest.raises(InfeasibleError) as info:
        min_identifying_code(k22, 2)
    assert info.value.violation.kind == "not-separating"


def test_min_code_budget(k32):
    r = min_identifying_code(k32, 1, budget=50)
    assert not r.exact and r.code is None
    assert 1 <= r.lower_bound <= 8 <= r.upper_bound


def test_equiv_classes(k22, k3):
    assert equiv_classes(generators.directed_cycle(5)) == [(v,) for v in range(5)]
    labelled = {tuple(k22.label(v) for v in cls) for cls in equiv_classes(k22)}
    assert labelled == {("01", "02"), ("10", "12"), ("20", "21")}
    assert equiv_classes(k3) == [(0,), (1,), (2,)]


def test_ell3_witness(k22, k32):
    w = non_existence_witness_ell3(k22)
    assert [k22.label(v) for v in w.x] == ["01", "02", "10"]
    assert [k22.label(v) for v in w.y] == ["02", "10"]
    w = non_existence_witness_ell3(k32)
    assert len(w.x) == 3 and closed_in(k32, w.x) == closed_in(k32, w.y)
    with pytest.raises(PreconditionError):
        non_existence_witness_ell3(generators.directed_cycle(4))


@settings(max_examples=200, deadline=None)
@given(small_digraphs(max_order=6))
def test_min_code_matches_naive_oracle(g):
    for ell in (1, 2):
        want = naive_min_code(g, ell)
        if want is None:
            with pytest.raises(InfeasibleError):
                min_identifying_code(g, ell)
            continue
        got = min_identifying_code(g, ell)
        assert got.identifying_number == want
        assert naive_is_code(g, got.code, ell)
        assert code_structure_holds(g, got.code)


@settings(max_examples=200, deadline=None)
@given(small_digraphs(max_order=6))
def test_verify_matches_definition_and_whole_set(g):
    for ell in (1, 2, 3):
        whole = verify_identifying_code(g, range(g.order), ell) is None
        assert whole == admits_identifying_code(g, ell) == naive_is_code(g, range(g.order), ell)
        v = admissibility_witness(g, ell)
        if v is not None:
            assert v.x != v.y and closed_in(g, v.x) == closed_in(g, v.y)
            assert 1 <= len(v.x) <= ell and 1 <= len(v.y) <= ell
    # admitting ell implies admitting every smaller ell
    flags = [admits_identifying_code(g, ell) for ell in (1, 2, 3)]
    assert flags == sorted(flags, reverse=True)


@settings(max_examples=100, deadline=None)
@given(small_digraphs(max_order=6))
def test_supersets_of_codes_are_codes(g):
    r = None
    try:
        r = min_identifying_code(g, 1)
    except InfeasibleError:
        return
    for extra in g.vertices:
        assert is_identifying_code(g, r.code | {extra})


@settings(max_examples=100, deadline=None)
@given(strong_digraphs(max_order=5, min_in=2))
def test_line_digraphs_with_min_in_two_never_admit_three(g):
    lg = line_digraph(g).graph
    assert not admits_identifying_code(lg, 3)
    w = non_existence_witness_ell3(lg)
    assert isinstance(w, SeparationViolation)
    assert closed_in(lg, w.x) == closed_in(lg, w.y) and len(w.x) == 3
