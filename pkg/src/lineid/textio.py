"""Plain-text digraph format, code lists, and certificate records.

Digraph format::

    digraph <order> <arc-count>
    <tail> <head>            one line per arc, 0-based, sorted
    label <id> <string>      optional, one per labelled vertex
    lineage <tail> <head> <line-vertex>   optional, written by ``lineid line``

Every line ends with LF. Blank lines and lines starting with ``#`` are
skipped on input; ``lineage`` lines are ignored by :func:`parse_digraph`.
"""

from __future__ import annotations

import hashlib
import json
from typing import Iterable

from .digraph import Arc, Digraph
from .errors import DigraphError
from .line import LineageMap

CERTIFICATE_FORMAT = "lineid-certificate/1"


def format_digraph(graph: Digraph, lineage: LineageMap | None = None) -> str:
    lines = [f"digraph {graph.order} {graph.size}"]
    lines += [f"{u} {v}" for u, v in graph.arcs]
    if graph.labels is not None:
        lines += [f"label {i} {lab}" for i, lab in enumerate(graph.labels)]
    if lineage is not None:
        lines += [f"lineage {u} {v} {i}" for i, (u, v) in enumerate(lineage.backward)]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise DigraphError("empty input: expected a 'digraph <order> <arc-count>' header") from None
    if len(header) != 3 or header[0] != "digraph":
        raise DigraphError(f"line {lineno}: expected 'digraph <order> <arc-count>'")
    try:
        order, count = int(header[1]), int(header[2])
    except ValueError:
        raise DigraphError(f"line {lineno}: order and arc count must be integers") from None
    arcs: list[Arc] = []
    labels: dict[int, str] = {}
    for lineno, fields in lines:
        try:
            if fields[0] == "label" and len(fields) == 3:
                labels[int(fields[1])] = fields[2]
            elif fields[0] == "lineage" and len(fields) == 4:
                continue
            elif len(fields) == 2:
                arcs.append((int(fields[0]), int(fields[1])))
            else:
                raise ValueError
        except ValueError:
            raise DigraphError(f"line {lineno}: cannot parse {' '.join(fields)!r}") from None
    if len(arcs) != count:
        raise DigraphError(f"header announces {count} arcs but {len(arcs)} were given")
    label_list = None
    if labels:
        if sorted(labels) != list(range(order)):
            raise DigraphError("labels must be given for every vertex or for none")
        label_list = [labels[i] for i in range(order)]
    return Digraph(order, arcs, label_list)


def parse_lineage(text: str) -> LineageMap:
    backward: dict[int, Arc] = {}
    for lineno, fields in _content_lines(text):
        if fields[0] == "lineage":
            if len(fields) != 4:
                raise DigraphError(f"line {lineno}: expected 'lineage <tail> <head> <vertex>'")
            backward[int(fields[3])] = (int(fields[1]), int(fields[2]))
    ordered = tuple(backward[i] for i in sorted(backward))
    return LineageMap({a: i for i, a in enumerate(ordered)}, ordered)


def parse_vertex_list(text: str, graph: Digraph) -> frozenset[int]:
    """One vertex per line, given by id or by label."""
    return frozenset(graph.vertex(fields[0]) for _, fields in _content_lines(text))


def parse_arc_list(text: str, graph: Digraph) -> frozenset[Arc]:
    """One ``tail head`` pair per line; endpoints by id or by label."""
    arcs = set()
    for lineno, fields in _content_lines(text):
        if len(fields) != 2:
            raise DigraphError(f"line {lineno}: expected '<tail> <head>'")
        arcs.add((graph.vertex(fields[0]), graph.vertex(fields[1])))
    return frozenset(arcs)


def digest(graph: Digraph) -> str:
    return "sha256:" + hashlib.sha256(format_digraph(graph).encode()).hexdigest()


def vertex_record(graph: Digraph, vertices: Iterable[int]) -> dict:
    ids = sorted(vertices)
    rec: dict = {"ids": ids}
    if graph.labels is not None:
        rec["labels"] = [graph.label(v) for v in ids]
    return rec


def arc_record(graph: Digraph, arcs: Iterable[Arc]) -> dict:
    arcs = sorted(arcs)
    rec: dict = {"ids": [list(a) for a in arcs]}
    if graph.labels is not None:
        rec["labels"] = [[graph.label(u), graph.label(v)] for u, v in arcs]
    return rec


def certificate(command: list[str], graph: Digraph | None, outcome: str, **fields) -> str:
    """Render a certificate record as canonical JSON (sorted keys, LF-terminated)."""
    record = {
        "format": CERTIFICATE_FORMAT,
        "command": command,
        "input_digest": digest(graph) if graph is not None else None,
        "outcome": outcome,
    }
    record.update(fields)
    return json.dumps(record, sort_keys=True, indent=2) + "\n"
