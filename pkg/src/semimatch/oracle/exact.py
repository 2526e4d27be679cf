"""Exact maximum-cardinality matchings for offline ground truth."""

from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..graph import UNMATCHED, Graph, Matching

EXHAUSTIVE_EDGE_LIMIT = 24


class OracleLimitError(ValueError):
    """The requested exact method refuses an input this large."""


def max_matching(g: Graph, method: str = "auto") -> Matching:
    """A maximum-cardinality matching of ``g``.

    ``method`` is ``"hopcroft-karp"`` (bipartite inputs with sides),
    ``"blossom"`` (any input) or ``"auto"``, which picks Hopcroft-Karp when
    the graph is declared bipartite.
    """
    if method == "auto":
        method = "hopcroft-karp" if g.class_label == "bipartite" and g.sides else "blossom"
    if method == "hopcroft-karp":
        return _hopcroft_karp(g)
    if method == "blossom":
        return _blossom(g)
    raise ValueError(f"unknown method {method!r}")


def _hopcroft_karp(g: Graph) -> Matching:
    if g.sides is None:
        raise ValueError("Hopcroft-Karp needs the bipartition")
    left = [v for v in range(g.n) if g.sides[v] == "A"]
    right = [v for v in range(g.n) if g.sides[v] == "B"]
    M = Matching(g.n)
    if not g.edges or not left or not right:
        return M
    row = {v: i for i, v in enumerate(left)}
    col = {v: j for j, v in enumerate(right)}
    rows, cols = [], []
    for u, v in set(g.edges):
        a, b = (u, v) if g.sides[u] == "A" else (v, u)
        rows.append(row[a])
        cols.append(col[b])
    bi = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(left), len(right)))
    match = maximum_bipartite_matching(bi, perm_type="column")
    for i, j in enumerate(match.tolist()):
        if j >= 0:
            M.add(left[i], right[j])
    return M


def _blossom(g: Graph) -> Matching:
    """Edmonds' blossom algorithm, O(n^3), seeded with a greedy matching."""
    n = g.n
    adj = [list(s) for s in g.adjacency()]
    mate = [UNMATCHED] * n
    for u, v in g.edges:
        if mate[u] == UNMATCHED and mate[v] == UNMATCHED:
            mate[u], mate[v] = v, u

    def find_path(root: int):
        used = [False] * n
        parent = [UNMATCHED] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == UNMATCHED:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == UNMATCHED:
                    parent[to] = v
                    if mate[to] == UNMATCHED:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return UNMATCHED, parent

    for root in range(n):
        if mate[root] != UNMATCHED or not adj[root]:
            continue
        v, parent = find_path(root)
        # flip the alternating path ending at v
        while v != UNMATCHED:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    M = Matching(n)
    for u, v in enumerate(mate):
        if v > u:
            M.add(u, v)
    return M


def exhaustive_max_matching(g: Graph, limit: int = EXHAUSTIVE_EDGE_LIMIT) -> Matching:
    """Maximum matching by branch and bound over edge subsets.

    Refuses graphs with more than ``limit`` distinct edges.
    """
    edges = sorted(set(g.edges))
    if len(edges) > limit:
        raise OracleLimitError(f"{len(edges)} edges exceeds the exhaustive limit {limit}")
    best: list = []
    used = [False] * g.n
    chosen: list = []

    def search(i: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(edges):
            return
        free = sum(1 for w in used if not w)
        if len(chosen) + min(len(edges) - i, free // 2) <= len(best):
            return
        u, v = edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            chosen.append(edges[i])
            search(i + 1)
            chosen.pop()
            used[u] = used[v] = False
        search(i + 1)

    search(0)
    return Matching(g.n, best)
