"""Edges, graphs and matchings shared by every other module.

Vertices are dense integer ids ``0..n-1``. Edges are stored normalized with the
smaller endpoint first so that ``(u, v)`` and ``(v, u)`` compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

GRAPH_CLASSES = ("bipartite", "triangle-free", "general")
SIDES = ("A", "B")

UNMATCHED = -1


class GraphError(ValueError):
    """Malformed graph input: self-loops, out-of-range ids, bad sides."""


class AugmentationError(ValueError):
    """An attempted 3-augmentation whose preconditions do not hold."""


class Edge(NamedTuple):
    u: int
    v: int

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} is not an endpoint of {tuple(self)}")


def make_edge(u: int, v: int) -> Edge:
    """Return the normalized edge between ``u`` and ``v``.

    >>> make_edge(3, 1)
    Edge(u=1, v=3)
    """
    u = int(u)
    v = int(v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if u < 0 or v < 0:
        raise GraphError(f"negative vertex id in edge ({u}, {v})")
    return Edge(u, v) if u < v else Edge(v, u)


def is_valid_matching(edges: Iterable[Sequence[int]]) -> bool:
    """True iff no vertex appears in two of ``edges``."""
    seen: set[int] = set()
    for e in edges:
        u, v = e[0], e[1]
        if u == v or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with a declared class label.

    ``edges`` keeps the input order, which is also the default stream order.
    ``sides`` maps every vertex to ``"A"`` or ``"B"`` and is required exactly
    when ``class_label == "bipartite"``.
    """

    n: int
    edges: tuple[Edge, ...]
    class_label: str = "general"
    sides: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if self.class_label not in GRAPH_CLASSES:
            raise GraphError(f"unknown graph class {self.class_label!r}")
        edges = tuple(make_edge(*e) for e in self.edges)
        for e in edges:
            if e.v >= self.n:
                raise GraphError(f"vertex {e.v} out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)
        if self.class_label == "bipartite":
            if self.sides is None:
                raise GraphError("bipartite graph requires sides for every vertex")
            sides = tuple(self.sides)
            if len(sides) != self.n or any(s not in SIDES for s in sides):
                raise GraphError("sides must assign 'A' or 'B' to every vertex")
            for e in edges:
                if sides[e.u] == sides[e.v]:
                    raise GraphError(f"edge {tuple(e)} lies within side {sides[e.u]}")
            object.__setattr__(self, "sides", sides)
        elif self.sides is not None:
            object.__setattr__(self, "sides", tuple(self.sides))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, tuple(make_edge(*e) for e in edges), self.class_label, self.sides)


class Matching:
    """A set of vertex-disjoint edges with O(1) partner lookup.

    Mutable while an algorithm runs; every mutation goes through :meth:`add`,
    :meth:`remove` or :meth:`augment3`, which keep ``mate`` a symmetric
    involution on covered vertices.
    """

    __slots__ = ("n", "mate", "_size")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        self.n = n
        self.mate = [UNMATCHED] * n
        self._size = 0
        for e in edges:
            self.add(e[0], e[1])

    def __len__(self) -> int:
        return self._size

    def __contains__(self, e) -> bool:
        u, v = e
        return 0 <= u < self.n and self.mate[u] == v

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and self.mate == other.mate

    def __repr__(self) -> str:
        return f"Matching(n={self.n}, edges={[tuple(e) for e in self.edges()]})"

    def edges(self) -> list[Edge]:
        return [Edge(u, w) for u, w in enumerate(self.mate) if w > u]

    def vertices(self) -> set[int]:
        return {u for u, w in enumerate(self.mate) if w != UNMATCHED}

    def covers(self, v: int) -> bool:
        return self.mate[v] != UNMATCHED

    def partner(self, v: int) -> Optional[int]:
        w = self.mate[v]
        return None if w == UNMATCHED else w

    def copy(self) -> "Matching":
        other = Matching(self.n)
        other.mate = list(self.mate)
        other._size = self._size
        return other

    def add(self, u: int, v: int) -> None:
        if u == v:
            raise AugmentationError(f"self-loop at {u}")
        if self.mate[u] != UNMATCHED or self.mate[v] != UNMATCHED:
            raise AugmentationError(f"edge ({u}, {v}) touches a covered vertex")
        self.mate[u] = v
        self.mate[v] = u
        self._size += 1

    def remove(self, u: int, v: int) -> None:
        if self.mate[u] != v:
            raise AugmentationError(f"edge ({u}, {v}) is not in the matching")
        self.mate[u] = UNMATCHED
        self.mate[v] = UNMATCHED
        self._size -= 1

    def augment3(self, drop: Sequence[int], add1: Sequence[int], add2: Sequence[int]) -> None:
        """Replace ``drop`` by ``add1`` and ``add2`` along a 3-edge path, in place."""
        y, v = drop
        if self.mate[y] != v:
            raise AugmentationError(f"{tuple(drop)} is not in the matching")
        # orient so that add1 hangs off y and add2 off v
        if y not in add1:
            y, v = v, y
        if y not in add1 or v not in add2 or v in add1 or y in add2:
            raise AugmentationError(
                f"{tuple(add1)}, {tuple(drop)}, {tuple(add2)} is not a path of length 3")
        x = add1[0] if add1[1] == y else add1[1]
        b = add2[0] if add2[1] == v else add2[1]
        if x == b:
            raise AugmentationError(f"outer endpoints coincide at {x} (triangle)")
        if self.mate[x] != UNMATCHED or self.mate[b] != UNMATCHED:
            raise AugmentationError(f"outer endpoint {x} or {b} is already covered")
        self.mate[x] = y
        self.mate[y] = x
        self.mate[v] = b
        self.mate[b] = v
        self._size += 1

    def is_valid(self) -> bool:
        """Full consistency check of the partner array."""
        count = 0
        for u, w in enumerate(self.mate):
            if w == UNMATCHED:
                continue
            if w == u or not 0 <= w < self.n or self.mate[w] != u:
                return False
            count += 1
        return count == 2 * self._size


def augment_3(M: Matching, drop: Sequence[int], add1: Sequence[int], add2: Sequence[int]) -> Matching:
    """Apply the 3-augmentation ``M - drop + add1 + add2`` to ``M`` and return it.

    ``M`` is modified in place (copying would cost O(n) per augmentation).
    Raises :class:`AugmentationError` when the three edges do not form an
    augmenting path of length 3 with uncovered, distinct outer endpoints.
    """
    M.augment3(drop, add1, add2)
    return M


@dataclass
class LabelMap:
    """Assigns dense ids to arbitrary hashable vertex labels in first-seen order."""

    ids: dict = field(default_factory=dict)

    def __call__(self, label) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.ids)
        return self.ids[label]

    @property
    def n(self) -> int:
        return len(self.ids)

    def names(self) -> list:
        return list(self.ids)
