"""Text serialization for graphs.

Arc-list format (extension ``.dg`` for digraphs, ``.ug`` for undirected
graphs): line 1 is ``n m``, followed by m lines ``u v`` (0-based,
space-separated; an arc u->v, or an edge for ``.ug``). Lines starting
with ``#`` are comments. Labeled graphs (``.lg``) use the header
``n m L`` with L the maximum label, then m lines ``u v label``.

Writers emit a canonical form: sorted arc/edge lines, a single trailing
newline, so equal graphs always serialize to identical bytes.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Digraph, LabeledGraph, UndirectedGraph


class FormatError(ValueError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped


def _parse_ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"expected integers, got {fields!r}", lineno) from None


def _parse_body(text: str, width: int):
    """Yield (header_ints, rows); header has len >= width header fields."""
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise FormatError("missing header line", 1) from None
    fields = header.split()
    if len(fields) != width:
        raise FormatError(f"header must have {width} fields, got {len(fields)}",
                          header_line)
    header_ints = _parse_ints(fields, header_line)
    m = header_ints[1]
    rows = []
    for lineno, line in lines:
        rows.append((lineno, _parse_ints(line.split(), lineno)))
    if len(rows) != m:
        where = rows[-1][0] if rows else header_line
        raise FormatError(f"header announces {m} lines, found {len(rows)}", where)
    return header_ints, rows


def dumps_digraph(d: Digraph, comments: tuple[str, ...] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    body = "".join(f"{u} {v}\n" for u, v in d.arcs)
    return f"{head}{d.n} {d.size}\n{body}"


def _check_endpoints(u: int, v: int, n: int, seen: set, lineno: int, kind: str) -> None:
    if u == v:
        raise FormatError(f"self-loop ({u},{v})", lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise FormatError(f"{kind} ({u},{v}) has an endpoint outside [0,{n})", lineno)
    key = (u, v) if kind == "arc" else (min(u, v), max(u, v))
    if key in seen:
        raise FormatError(f"duplicate {kind} ({u},{v})", lineno)
    seen.add(key)


def loads_digraph(text: str) -> Digraph:
    (n, m), rows = _parse_body(text, 2)
    arcs = []
    seen: set = set()
    for lineno, fields in rows:
        if len(fields) != 2:
            raise FormatError(f"arc line must have 2 fields, got {len(fields)}", lineno)
        _check_endpoints(fields[0], fields[1], n, seen, lineno, "arc")
        arcs.append((fields[0], fields[1]))
    try:
        return Digraph.from_arcs(n, arcs)
    except ValueError as exc:
        raise FormatError(str(exc), 1) from None


def dumps_undirected(g: UndirectedGraph, comments: tuple[str, ...] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    body = "".join(f"{u} {v}\n" for u, v in g.edges)
    return f"{head}{g.n} {g.size}\n{body}"


def loads_undirected(text: str) -> UndirectedGraph:
    (n, m), rows = _parse_body(text, 2)
    edges = []
    seen: set = set()
    for lineno, fields in rows:
        if len(fields) != 2:
            raise FormatError(f"edge line must have 2 fields, got {len(fields)}", lineno)
        _check_endpoints(fields[0], fields[1], n, seen, lineno, "edge")
        edges.append((fields[0], fields[1]))
    try:
        return UndirectedGraph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc), 1) from None


def dumps_labeled(lg: LabeledGraph, comments: tuple[str, ...] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    max_label = max(lg.labels.values(), default=0)
    body = "".join(f"{u} {v} {lg.labels[(u, v)]}\n" for u, v in lg.base.edges)
    return f"{head}{lg.n} {lg.base.size} {max_label}\n{body}"


def loads_labeled(text: str) -> LabeledGraph:
    (n, m, _max_label), rows = _parse_body(text, 3)
    edges = []
    labels = {}
    seen: set = set()
    for lineno, fields in rows:
        if len(fields) != 3:
            raise FormatError(f"labeled line must have 3 fields, got {len(fields)}",
                              lineno)
        u, v, lab = fields
        _check_endpoints(u, v, n, seen, lineno, "edge")
        if lab < 1:
            raise FormatError(f"label {lab} on edge ({u},{v}) must be >= 1", lineno)
        edges.append((u, v))
        labels[(min(u, v), max(u, v))] = lab
    try:
        return LabeledGraph(UndirectedGraph.from_edges(n, edges), labels)
    except ValueError as exc:
        raise FormatError(str(exc), 1) from None


_LOADERS = {".dg": loads_digraph, ".ug": loads_undirected, ".lg": loads_labeled}


def read_path(path) -> Digraph | UndirectedGraph | LabeledGraph:
    """Load a graph file, dispatching on its extension."""
    p = Path(path)
    loader = _LOADERS.get(p.suffix)
    if loader is None:
        raise ValueError(f"unknown graph file extension {p.suffix!r} (expected .dg/.ug/.lg)")
    return loader(p.read_text())


def write_path(path, obj, comments: tuple[str, ...] = ()) -> None:
    p = Path(path)
    if isinstance(obj, Digraph):
        p.write_text(dumps_digraph(obj, comments))
    elif isinstance(obj, LabeledGraph):
        p.write_text(dumps_labeled(obj, comments))
    elif isinstance(obj, UndirectedGraph):
        p.write_text(dumps_undirected(obj, comments))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
