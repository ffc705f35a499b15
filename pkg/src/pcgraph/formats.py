"""JSON graph format and GraphViz DOT emission.

JSON layout::

    {"vertices": [term, ...], "edges": [[term, term], ...]}

where a term is a string (atom) or a two-element array (pair). Opaque
labels (type terms) are written as their display text. Arrays are emitted
in canonical sorted order so output is byte-for-byte reproducible.
"""
from __future__ import annotations

import json
from typing import Any

from .graph import Digraph, GraphError, Label, label_text


class FormatError(ValueError):
    """Raised for JSON input that does not follow the graph format."""


def label_to_term(x: Label) -> Any:
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return [label_to_term(x[0]), label_to_term(x[1])]
    return str(x)


def term_to_label(t: Any) -> Label:
    if isinstance(t, str):
        if not t:
            raise FormatError("empty string is not a valid atom label")
        return t
    if isinstance(t, list) and len(t) == 2:
        return (term_to_label(t[0]), term_to_label(t[1]))
    raise FormatError(f"invalid label term: {json.dumps(t)}")


def graph_to_dict(g: Digraph) -> dict:
    return {
        "vertices": [label_to_term(v) for v in g.sorted_vertices()],
        "edges": [[label_to_term(s), label_to_term(t)] for s, t in g.sorted_edges()],
    }


def graph_from_dict(data: Any) -> Digraph:
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError('graph JSON must be an object with a "vertices" array')
    vertices = data["vertices"]
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise FormatError('"vertices" and "edges" must be arrays')
    vs = [term_to_label(t) for t in vertices]
    es = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"edge must be a [source, target] pair: {json.dumps(e)}")
        es.append((term_to_label(e[0]), term_to_label(e[1])))
    if len(set(vs)) != len(vs):
        raise FormatError("duplicate vertex in vertex list")
    try:
        return Digraph(vs, es)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def dumps(g: Digraph) -> str:
    """One vertex or edge per line; valid JSON, diff-friendly."""
    d = graph_to_dict(g)

    def block(items):
        if not items:
            return "[]"
        return "[\n" + ",\n".join("    " + json.dumps(x) for x in items) + "\n  ]"

    return ('{\n  "vertices": ' + block(d["vertices"])
            + ',\n  "edges": ' + block(d["edges"]) + "\n}\n")


def loads(text: str) -> Digraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None
    return graph_from_dict(data)


def load(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Digraph, name: str = "G") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for v in g.sorted_vertices():
        lines.append(f"  {_quote(label_text(v))};")
    for s, t in g.sorted_edges():
        lines.append(f"  {_quote(label_text(s))} -> {_quote(label_text(t))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(g: Digraph, fmt: str, name: str = "G") -> str:
    if fmt == "dot":
        return to_dot(g, name)
    if fmt == "json":
        return dumps(g)
    raise ValueError(f"unknown output format {fmt!r}")

