"""Reading and writing graphs as JSON or as plain edge lists.

JSON::

    {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "len": "3/2"}]}

Edge list: one ``u v length`` per line, ``#`` starts a comment.  A line with a
single token declares a vertex; declarations fix the vertex order, which
otherwise follows first appearance.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import BadIndex, Edge, GraphError, MetrizedGraph, as_length


def format_fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _assemble(labels: list[str], triples) -> MetrizedGraph:
    index = {}
    for lab in labels:
        if lab in index:
            raise BadIndex(f"duplicate vertex label {lab!r}")
        index[lab] = len(index)
    edges = []
    for u, w, length in triples:
        for x in (u, w):
            if x not in index:
                raise BadIndex(f"edge endpoint {x!r} is not a declared vertex")
        edges.append(Edge(index[u], index[w], as_length(length)))
    return MetrizedGraph(tuple(labels), tuple(edges))


def graph_from_dict(data: dict) -> MetrizedGraph:
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphError("graph JSON must be an object with an 'edges' list")
    triples = []
    for item in data["edges"]:
        try:
            triples.append((str(item["u"]), str(item["v"]), item["len"]))
        except (KeyError, TypeError):
            raise GraphError(f"edge entry needs 'u', 'v' and 'len': {item!r}") from None
    if "vertices" in data:
        labels = [str(x) for x in data["vertices"]]
    else:
        labels = list(dict.fromkeys(x for u, w, _ in triples for x in (u, w)))
    return _assemble(labels, triples)


def graph_to_dict(g: MetrizedGraph) -> dict:
    return {
        "vertices": list(g.labels),
        "edges": [
            {"u": g.labels[e.u], "v": g.labels[e.v], "len": format_fraction(e.length)}
            for e in g.edges
        ],
    }


def loads_json(text: str) -> MetrizedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def dumps_json(g: MetrizedGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2)


def loads_edgelist(text: str) -> MetrizedGraph:
    labels: dict[str, None] = {}
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            labels.setdefault(parts[0])
        elif len(parts) == 3:
            u, w, length = parts
            labels.setdefault(u)
            labels.setdefault(w)
            triples.append((u, w, length))
        else:
            raise GraphError(f"line {lineno}: expected 'u v length', got {raw!r}")
    return _assemble(list(labels), triples)


def dumps_edgelist(g: MetrizedGraph) -> str:
    lines = list(g.labels)
    lines += [f"{g.labels[e.u]} {g.labels[e.v]} {format_fraction(e.length)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> MetrizedGraph:
    """Load a graph, choosing the format from the extension (``.json`` or anything else)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return loads_json(text)
    return loads_edgelist(text)


def write_graph(g: MetrizedGraph, path) -> None:
    path = Path(path)
    path.write_text(dumps_json(g) if path.suffix.lower() == ".json" else dumps_edgelist(g))
