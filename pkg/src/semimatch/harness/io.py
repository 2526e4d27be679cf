"""Text graph format.

One directive per line::

    # comment
    n 4
    class bipartite          # bipartite | triangle-free | general
    side 0 A                 # bipartite only, one line per vertex
    e 0 1                    # edges stream in file order

Blank lines and ``#`` comments (whole-line or trailing) are ignored.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional, Union

from ..graph import GRAPH_CLASSES, SIDES, Edge, Graph, GraphError

PathLike = Union[str, os.PathLike]


class GraphFormatError(GraphError):
    """A malformed graph file; ``lineno`` is 1-based (0 for whole-file problems)."""

    def __init__(self, message: str, lineno: int = 0, path: Optional[str] = None):
        self.lineno = lineno
        self.path = path
        where = f"{path or '<text>'}:{lineno}: " if lineno else f"{path or '<text>'}: "
        super().__init__(where + message)


def _int(tok: str, lineno: int, path, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {tok!r}", lineno, path) from None
    if val < 0:
        raise GraphFormatError(f"{what} must be non-negative, got {val}", lineno, path)
    return val


def parse_graph_lines(lines: Iterable[str], path: Optional[str] = None) -> Graph:
    n = None
    label = "general"
    sides: dict[int, tuple[str, int]] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head, args = tok[0], tok[1:]
        if head == "n":
            if len(args) != 1:
                raise GraphFormatError("expected 'n <count>'", lineno, path)
            if n is not None:
                raise GraphFormatError("vertex count given twice", lineno, path)
            n = _int(args[0], lineno, path, "vertex count")
        elif head == "class":
            if len(args) != 1 or args[0] not in GRAPH_CLASSES:
                raise GraphFormatError(
                    f"expected 'class <{'|'.join(GRAPH_CLASSES)}>'", lineno, path)
            label = args[0]
        elif head == "side":
            if len(args) != 2 or args[1] not in SIDES:
                raise GraphFormatError("expected 'side <vertex> <A|B>'", lineno, path)
            v = _int(args[0], lineno, path, "vertex")
            if v in sides:
                raise GraphFormatError(f"side of vertex {v} given twice", lineno, path)
            sides[v] = (args[1], lineno)
        elif head == "e":
            if len(args) != 2:
                raise GraphFormatError("expected 'e <u> <v>'", lineno, path)
            u = _int(args[0], lineno, path, "vertex")
            v = _int(args[1], lineno, path, "vertex")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno, path)
            edges.append((u, v, lineno))
        else:
            raise GraphFormatError(f"unknown directive {head!r}", lineno, path)

    if n is None:
        raise GraphFormatError("missing 'n <count>' directive", 0, path)
    for u, v, lineno in edges:
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex {max(u, v)} out of range for n={n}", lineno, path)
    for v, (_, lineno) in sides.items():
        if v >= n:
            raise GraphFormatError(f"vertex {v} out of range for n={n}", lineno, path)
    side_tuple = None
    if label == "bipartite":
        missing = [v for v in range(n) if v not in sides]
        if missing:
            raise GraphFormatError(
                f"class bipartite needs a side for every vertex; missing {missing[:5]}", 0, path)
        side_tuple = tuple(sides[v][0] for v in range(n))
        for u, v, lineno in edges:
            if side_tuple[u] == side_tuple[v]:
                raise GraphFormatError(
                    f"edge ({u}, {v}) lies within side {side_tuple[u]}", lineno, path)
    elif sides:
        lineno = min(ln for _, ln in sides.values())
        raise GraphFormatError("'side' lines are only allowed with class bipartite", lineno, path)
    return Graph(n, tuple((u, v) for u, v, _ in edges), label, side_tuple)


def parse_graph_text(text: str) -> Graph:
    return parse_graph_lines(text.splitlines())


def parse_graph_file(path: PathLike) -> Graph:
    """Read a graph file; line order defines the stream order."""
    with open(path, encoding="utf-8") as fh:
        return parse_graph_lines(fh, os.fspath(path))


def format_graph(g: Graph, edges: Optional[Iterable[Edge]] = None,
                 comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {g.n}")
    out.append(f"class {g.class_label}")
    if g.class_label == "bipartite" and g.sides:
        out.extend(f"side {v} {s}" for v, s in enumerate(g.sides))
    out.extend(f"e {u} {v}" for u, v in (g.edges if edges is None else edges))
    return "\n".join(out) + "\n"


def write_graph_file(g: Graph, path: PathLike, comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment=comment))
