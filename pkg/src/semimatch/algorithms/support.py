"""Degree-capped support edges between matched and unmatched vertices."""

from __future__ import annotations

from typing import Collection, Iterable, Optional, Sequence

from ..graph import Edge, Matching, make_edge
from ..stream import Meter
from ._checks import InvariantViolation

IN_I = 1
IN_IB = 2


class SupportSet:
    """Edges ``xy`` with ``x`` unmatched and ``y`` matched by a base matching.

    Unmatched-side degrees are capped by ``lambda_u`` and matched-side degrees
    by ``lambda_m``. Edges are only ever added. ``nbrs[v]`` lists the
    S-neighbours of ``v`` in insertion order.
    """

    __slots__ = ("n", "lambda_u", "lambda_m", "matched", "nbrs", "edges")

    def __init__(self, n: int, lambda_u: int, lambda_m: int, matched: Sequence[bool]):
        self.n = n
        self.lambda_u = lambda_u
        self.lambda_m = lambda_m
        self.matched = matched
        self.nbrs: list[list[int]] = [[] for _ in range(n)]
        self.edges: list[Edge] = []

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        u, v = e
        return v in self.nbrs[u]

    def deg(self, v: int) -> int:
        return len(self.nbrs[v])

    def add(self, x: int, y: int) -> None:
        self.nbrs[x].append(y)
        self.nbrs[y].append(x)
        self.edges.append(make_edge(x, y))

    def cap(self, v: int) -> int:
        return self.lambda_m if self.matched[v] else self.lambda_u

    def check_caps(self, base: Optional[Matching] = None) -> None:
        """Raise if any degree cap, or the per-matched-edge sum, is exceeded."""
        for v in range(self.n):
            if len(self.nbrs[v]) > self.cap(v):
                raise InvariantViolation(
                    f"deg_S({v}) = {len(self.nbrs[v])} exceeds cap {self.cap(v)}")
        if base is not None:
            for u, v in base.edges():
                if len(self.nbrs[u]) + len(self.nbrs[v]) > self.lambda_m:
                    raise InvariantViolation(
                        f"deg_S({u}) + deg_S({v}) exceeds lambda_M = {self.lambda_m}")
            if len(self.edges) > self.lambda_m * len(base):
                raise InvariantViolation("|S| exceeds lambda_M * |M0|")


class IgnoreSets:
    """Vertices retired after augmentations: ``I`` (participants) and ``I_B``.

    Stored as one flag byte per vertex; both sets only grow.
    """

    __slots__ = ("flags", "size_i", "size_ib")

    def __init__(self, n: int):
        self.flags = bytearray(n)
        self.size_i = 0
        self.size_ib = 0

    def add_i(self, v: int) -> None:
        if not self.flags[v] & IN_I:
            self.flags[v] |= IN_I
            self.size_i += 1

    def add_ib(self, v: int) -> None:
        if not self.flags[v] & IN_IB:
            self.flags[v] |= IN_IB
            self.size_ib += 1

    @property
    def I(self) -> set[int]:
        return {v for v, f in enumerate(self.flags) if f & IN_I}

    @property
    def I_B(self) -> set[int]:
        return {v for v, f in enumerate(self.flags) if f & IN_IB}

    def __contains__(self, v: int) -> bool:
        return bool(self.flags[v])


def semi_matching(
    stream: Iterable[Sequence[int]],
    lam: int,
    X: Collection[int],
    Y: Collection[int],
    n: Optional[int] = None,
    meter: Optional[Meter] = None,
) -> SupportSet:
    """Greedy (lam, X, Y)-semi-matching over one pass.

    An edge ``xy`` with ``x`` in X and ``y`` in Y is kept iff, on arrival,
    ``x`` has no kept edge and ``y`` has fewer than ``lam``. Edges not
    crossing X and Y are skipped.
    """
    if n is None:
        n = max([*X, *Y], default=-1) + 1
    in_x = bytearray(n)
    in_y = bytearray(n)
    for v in X:
        in_x[v] = 1
    for v in Y:
        if in_x[v]:
            raise ValueError(f"vertex {v} is in both X and Y")
        in_y[v] = 1
    # the X side plays the matched role with cap 1
    S = SupportSet(n, lam, 1, in_x)
    nbrs = S.nbrs
    count = 0
    for p, q in stream:
        count += 1
        if in_x[p] and in_y[q]:
            x, y = p, q
        elif in_x[q] and in_y[p]:
            x, y = q, p
        else:
            continue
        if not nbrs[x] and len(nbrs[y]) <= lam - 1:
            S.add(x, y)
    if meter is not None:
        meter.ops(count)
    return S


def greedy_augment(
    M0: Matching,
    S: SupportSet,
    order: Optional[Sequence[Sequence[int]]] = None,
    meter: Optional[Meter] = None,
) -> Matching:
    """Augment ``M0`` one edge at a time through support edges, after the pass.

    Scans ``order`` (default: ``M0`` edges by lower endpoint). For ``uv`` with
    support edges ``au`` and ``vb`` (earliest inserted), ``a != b`` and both
    still free, swaps ``uv`` for ``au, vb`` and retires every support edge at
    ``a`` and ``b``.
    """
    M = M0.copy()
    used = bytearray(M0.n)
    nbrs = S.nbrs
    ops = 0
    for u, v in (order if order is not None else M0.edges()):
        ops += 1
        if M0.mate[u] != v:
            raise ValueError(f"({u}, {v}) is not an edge of M0")
        a = next((w for w in nbrs[u] if not used[w]), None)
        b = next((w for w in nbrs[v] if not used[w]), None)
        ops += len(nbrs[u]) + len(nbrs[v])
        if a is None or b is None or a == b:
            continue
        M.augment3((u, v), (a, u), (v, b))
        used[a] = used[b] = 1
    if meter is not None:
        meter.ops(ops)
    return M
