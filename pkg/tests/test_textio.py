from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from lineid import generators
from lineid.digraph import Digraph
from lineid.errors import DigraphError
from lineid.line import iterated_line_digraph
from lineid.textio import (
    certificate,
    digest,
    format_digraph,
    parse_arc_list,
    parse_digraph,
    parse_lineage,
    parse_vertex_list,
    vertex_record,
)

from conftest import small_digraphs


def test_format_is_exact():
    text = format_digraph(Digraph(3, [(1, 2), (0, 1), (2, 0)]))
    assert text == "digraph 3 3\n0 1\n1 2\n2 0\n"


def test_labels_roundtrip(k22):
    text = format_digraph(k22)
    assert "label 0 01\n" in text
    assert parse_digraph(text) == k22


@settings(max_examples=150, deadline=None)
@given(small_digraphs())
def test_roundtrip(g):
    assert parse_digraph(format_digraph(g)) == g


def test_comments_and_blanks():
    g = parse_digraph("# a comment\n\ndigraph 2 1\n  0 1  \n")
    assert g.arcs == ((0, 1),)


@pytest.mark.parametrize(
    "text",
    ["", "graph 2 1\n0 1\n", "digraph 2 2\n0 1\n", "digraph 2 1\n0 x\n", "digraph 2 1\n0 1\nlabel 0 a\n",
     "digraph 2 1\n0 0\n"],
    ids=["empty", "bad-header", "count", "non-int", "partial-labels", "loop"],
)
def test_parse_errors(text):
    with pytest.raises(DigraphError):
        parse_digraph(text)


def test_lineage_lines(k3):
    it = iterated_line_digraph(k3, 1)
    text = format_digraph(it.graph, it.stages[-1].lineage)
    assert parse_digraph(text) == it.graph
    lm = parse_lineage(text)
    assert lm.backward == it.stages[-1].lineage.backward


def test_code_lists(k22):
    assert parse_vertex_list("01\n12\n# c\n4\n", k22) == {0, 3, 4}
    assert parse_arc_list("01 12\n0 2\n", k22) == {(0, 3), (0, 2)}
    with pytest.raises(DigraphError):
        parse_vertex_list("99\n", k22)
    with pytest.raises(DigraphError):
        parse_arc_list("0\n", k22)


def test_certificate_is_canonical(k22):
    a = certificate(["x"], k22, "ok", code=vertex_record(k22, [3, 0]))
    b = certificate(["x"], k22, "ok", code=vertex_record(k22, [0, 3]))
    assert a == b and a.endswith("\n")
    rec = json.loads(a)
    assert rec["code"] == {"ids": [0, 3], "labels": ["01", "12"]}
    assert rec["input_digest"] == digest(k22)
    assert digest(generators.kautz(2, 2)) == digest(k22)
