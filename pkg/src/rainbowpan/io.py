"""Plain-text instance format.

Layout: first line ``n m``; then for each color i in 0..m-1 a block starting
``graph i``, followed by one ``u v`` edge per line, closed by ``end``.
Blank lines and ``#`` comments are ignored anywhere.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .core import GraphCollection, SimpleGraph, build_graph


class InstanceFormatError(ValueError):
    """Malformed instance text; message carries the 1-based line number."""


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_instance(text: str) -> GraphCollection:
    stream = _tokens(text)

    def fail(lineno: int, why: str) -> InstanceFormatError:
        return InstanceFormatError(f"line {lineno}: {why}")

    try:
        lineno, head = next(stream)
    except StopIteration:
        raise InstanceFormatError("empty instance") from None
    if len(head) != 2:
        raise fail(lineno, "expected header 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise fail(lineno, "header values must be integers") from None

    graphs: list[SimpleGraph] = []
    for i in range(m):
        try:
            lineno, tok = next(stream)
        except StopIteration:
            raise InstanceFormatError(f"missing block 'graph {i}'") from None
        if tok != ["graph", str(i)]:
            raise fail(lineno, f"expected 'graph {i}', got {' '.join(tok)!r}")
        edges: list[tuple[int, int]] = []
        while True:
            try:
                lineno, tok = next(stream)
            except StopIteration:
                raise InstanceFormatError(f"graph {i} not terminated by 'end'") from None
            if tok == ["end"]:
                break
            if len(tok) != 2:
                raise fail(lineno, "expected edge 'u v'")
            try:
                u, v = int(tok[0]), int(tok[1])
            except ValueError:
                raise fail(lineno, "edge endpoints must be integers") from None
            edges.append((u, v))
        try:
            graphs.append(build_graph(n, edges))
        except ValueError as exc:
            raise InstanceFormatError(f"graph {i}: {exc}") from None

    for lineno, tok in stream:
        raise fail(lineno, f"trailing content {' '.join(tok)!r}")
    try:
        return GraphCollection(n, tuple(graphs))
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None


def format_instance(coll: GraphCollection) -> str:
    """Canonical text form: edges sorted, one trailing newline."""
    lines = [f"{coll.n} {coll.m}"]
    for i, g in enumerate(coll.graphs):
        lines.append(f"graph {i}")
        lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
        lines.append("end")
    return "\n".join(lines) + "\n"


def read_instance(path: Union[str, Path]) -> GraphCollection:
    return parse_instance(Path(path).read_text())


def write_instance(path: Union[str, Path], coll: GraphCollection) -> None:
    Path(path).write_text(format_instance(coll))
