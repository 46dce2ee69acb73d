"""Reading hypergraphs from the line-oriented text format and its JSON twin.

Text format::

    # comment
    vertices: 1 2 3 4 5      # or "vertices: 5" for unlabeled ids 0..4;
                             # "vertices: [5]" is a single vertex labeled 5
    1 3
    [1 2 3]                  # brackets / braces and commas are optional
    {1, 4, 5}

Each edge line lists vertex labels; listing order is the default edge order.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

from .hypergraph import Hypergraph, HypergraphError


class HypergraphParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(r"[^\s,\[\]{}]+")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _tokens(body: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the text format into a validated :class:`Hypergraph`."""
    header = None
    labels: list[str] = []
    index: dict[str, int] = {}
    vertex_count = 0
    edges: list[frozenset[int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        if header is None:
            m = re.match(r"\s*vertices\s*:(.*)$", body)
            if m is None:
                col = len(body) - len(body.lstrip()) + 1
                raise HypergraphParseError("expected 'vertices:' header", lineno, col)
            header = lineno
            offset = m.start(1)
            toks = _tokens(m.group(1))
            if m.group(1).strip().isdigit():
                vertex_count = int(toks[0][0])
                labels = [str(i) for i in range(vertex_count)]
            else:
                for tok, col in toks:
                    if tok in index:
                        raise HypergraphParseError(f"duplicate vertex label {tok!r}", lineno, offset + col)
                    index[tok] = len(labels)
                    labels.append(tok)
                vertex_count = len(labels)
            index = {lab: i for i, lab in enumerate(labels)}
            continue

        toks = _tokens(body)
        if not toks:
            col = len(body) - len(body.lstrip()) + 1
            raise HypergraphParseError("empty edge", lineno, col)
        edge = set()
        for tok, col in toks:
            if tok not in index:
                raise HypergraphParseError(f"unknown vertex {tok!r}", lineno, col)
            edge.add(index[tok])
        edges.append(frozenset(edge))

    if header is None:
        raise HypergraphParseError("missing 'vertices:' header", max(1, len(text.splitlines())))
    return Hypergraph(vertex_count, tuple(edges), tuple(labels)).checked()


def parse_hypergraph_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise HypergraphParseError("expected an object with 'vertices' and 'edges'", 1)
    vertices = data["vertices"]
    if isinstance(vertices, int):
        vertices = list(range(vertices))
    labels = [str(v) for v in vertices]
    if len(set(labels)) != len(labels):
        raise HypergraphError(["duplicate vertex label"])
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for i, e in enumerate(data["edges"]):
        if not isinstance(e, list):
            raise HypergraphParseError(f"edge {i} is not a list", 1)
        unknown = [str(v) for v in e if str(v) not in index]
        if unknown:
            raise HypergraphError([f"edge {i}: unknown vertex {u!r}" for u in unknown])
        edges.append(frozenset(index[str(v)] for v in e))
    return Hypergraph(len(labels), tuple(edges), tuple(labels)).checked()


def load_hypergraph(path: Union[str, Path]) -> Hypergraph:
    """Read a hypergraph file; ``.json`` files use the JSON format."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return parse_hypergraph_json(text)
    return parse_hypergraph(text)


def format_hypergraph(G: Hypergraph) -> str:
    """Render ``G`` in the text format (round-trips through :func:`parse_hypergraph`)."""
    labels = [G.label(v) for v in range(G.vertex_count)]
    if labels == [str(i) for i in range(G.vertex_count)]:
        lines = [f"vertices: {G.vertex_count}"]
    else:
        lines = ["vertices: [" + " ".join(labels) + "]"]
    lines += [" ".join(G.edge_labels(e)) for e in range(G.edge_count)]
    return "\n".join(lines) + "\n"
