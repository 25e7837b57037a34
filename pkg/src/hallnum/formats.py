"""Line-oriented text formats for graphs, list assignments and reports.

Graph file (``#`` starts a comment, blank lines ignored)::

    parts: 4 2 2              # complete multipartite, conventional labels

or::

    vertices: 5
    labels: a b c d e         # optional, default 0 1 2 ...
    edge: 0 1                 # endpoints by index or label

Assignment file::

    list u1: a b
    list v1: c                # an empty list is written "list v1:"

Graph directives and ``list`` lines may share one file: each parser skips
the other's lines, so a dump can be passed as both inputs.

Machine-readable records start with ``format: hallnum-records v1``;
records are blocks of ``key: value`` lines separated by blank lines.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graph import Graph, complete_multipartite
from .lists import ListAssignment

RECORDS_HEADER = "format: hallnum-records v1"

_GRAPH_KEYS = ("parts", "vertices", "labels", "edge")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def _directive(line: str, num: int) -> tuple[str, str]:
    if ":" not in line:
        raise ParseError(f"expected 'key: value', got {line!r}", num)
    key, _, rest = line.partition(":")
    return key.strip(), rest.strip()


def parse_graph(text: str) -> Graph:
    parts = n = labels = None
    edges: list[tuple[str, str, int]] = []
    for num, line in _lines(text):
        if line.startswith("list "):
            continue
        key, rest = _directive(line, num)
        toks = rest.split()
        if key == "parts":
            try:
                parts = [int(t) for t in toks]
            except ValueError:
                raise ParseError(f"part sizes must be integers: {rest!r}", num) from None
            if not parts or any(p < 1 for p in parts):
                raise ParseError("need at least one positive part size", num)
        elif key == "vertices":
            if len(toks) != 1 or not toks[0].isdigit():
                raise ParseError(f"expected a vertex count, got {rest!r}", num)
            n = int(toks[0])
        elif key == "labels":
            labels = toks
        elif key == "edge":
            if len(toks) != 2:
                raise ParseError(f"edge needs two endpoints, got {rest!r}", num)
            edges.append((toks[0], toks[1], num))
        else:
            raise ParseError(f"unknown directive {key!r}", num)
    if parts is not None:
        if n is not None or edges:
            raise ParseError("'parts' cannot be combined with 'vertices' or 'edge'")
        g = complete_multipartite(parts)
        if labels is not None:
            if len(labels) != g.n:
                raise ParseError(f"expected {g.n} labels, got {len(labels)}")
            g = Graph(g.n, g.adj, g.parts, tuple(labels))
        return g
    if n is None:
        raise ParseError("missing 'parts' or 'vertices' line")
    if labels is not None and len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}")
    names = labels or [str(i) for i in range(n)]
    pairs = []
    for a, b, num in edges:
        ends = []
        for tok in (a, b):
            if tok in names:
                ends.append(names.index(tok))
            elif tok.isdigit() and int(tok) < n:
                ends.append(int(tok))
            else:
                raise ParseError(f"unknown vertex {tok!r}", num)
        if ends[0] == ends[1]:
            raise ParseError("self-loops are not allowed", num)
        pairs.append(tuple(ends))
    return Graph.from_edges(n, pairs, names)


def parse_lists(text: str, g: Graph) -> ListAssignment:
    lists: dict[int, tuple[str, ...]] = {}
    for num, line in _lines(text):
        if not line.startswith("list "):
            key = line.partition(":")[0].strip()
            if key in _GRAPH_KEYS:
                continue
            raise ParseError(f"expected 'list <vertex>: <colours>', got {line!r}", num)
        head, sep, rest = line[5:].partition(":")
        if not sep:
            raise ParseError("missing ':' after vertex label", num)
        label = head.strip()
        try:
            v = g.index(label)
        except KeyError:
            raise ParseError(f"unknown vertex {label!r}", num) from None
        if v in lists:
            raise ParseError(f"second list for vertex {label!r}", num)
        lists[v] = tuple(rest.split())
    missing = [g.labels[v] for v in g.vertices if v not in lists]
    if missing:
        raise ParseError(f"no list for vertices {missing}")
    return ListAssignment(g, tuple(lists[v] for v in g.vertices))


def _default_labels(g: Graph) -> bool:
    return g.parts is not None and g == complete_multipartite(g.part_sizes())


def format_graph(g: Graph) -> str:
    if g.parts is not None and g.n and _default_labels(g):
        return f"parts: {' '.join(map(str, g.part_sizes()))}\n"
    out = [f"vertices: {g.n}"]
    if g.labels != tuple(str(i) for i in g.vertices):
        out.append("labels: " + " ".join(g.labels))
    out += [f"edge: {u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def format_lists(L: ListAssignment) -> str:
    return "".join(f"list {lab}: {' '.join(lst)}".rstrip() + "\n"
                   for lab, lst in zip(L.graph.labels, L.lists))


def format_instance(L: ListAssignment, header: Iterable[str] = ()) -> str:
    head = "".join(f"# {h}\n" for h in header)
    return head + format_graph(L.graph) + format_lists(L)


def parse_instance(text: str) -> ListAssignment:
    g = parse_graph(text)
    return parse_lists(text, g)


def format_certificate(b) -> str:
    """A bound's lower-bound assignment with a header naming parameter, bound and search level."""
    L = b.lower_cert.assignment
    if L is None:
        raise ValueError("bound has no assignment certificate")
    header = [
        "certificate",
        f"parameter: {b.parameter}",
        f"bound: lower {b.lower}",
        f"reason: {b.lower_cert.note}",
        f"exhaustion: {b.lower_cert.level or 'n/a'}",
    ]
    return format_instance(L, header)


def format_records(records: Iterable[Mapping[str, object]]) -> str:
    blocks = [RECORDS_HEADER]
    for rec in records:
        lines = []
        for key, value in rec.items():
            text = str(value).replace("\n", " ")
            lines.append(f"{key}: {text}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_records(text: str) -> list[dict[str, str]]:
    chunks = text.strip().split("\n\n")
    if not chunks or chunks[0].strip() != RECORDS_HEADER:
        raise ParseError("missing records header")
    out = []
    for chunk in chunks[1:]:
        rec = {}
        for line in chunk.splitlines():
            key, _, value = line.partition(": ")
            rec[key] = value
        out.append(rec)
    return out
