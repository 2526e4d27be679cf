"""Offline verification of the declared graph class."""

from __future__ import annotations

from collections import deque
from typing import Optional

from ..graph import Graph


def is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency()
    for u, v in g.edges:
        small, large = (adj[u], adj[v]) if len(adj[u]) <= len(adj[v]) else (adj[v], adj[u])
        if any(w in large for w in small):
            return False
    return True


def bipartition(g: Graph) -> Optional[tuple[str, ...]]:
    """Sides ``"A"``/``"B"`` from a BFS 2-colouring, or None for odd cycles."""
    adj = g.adjacency()
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return tuple("AB"[c] for c in colour)


def satisfies_class(g: Graph, class_label: Optional[str] = None) -> bool:
    """True when ``g`` belongs to ``class_label`` (default: its own label)."""
    label = class_label or g.class_label
    if label == "general":
        return True
    if label == "triangle-free":
        return is_triangle_free(g)
    if label == "bipartite":
        if g.sides is not None:
            return all(g.sides[u] != g.sides[v] for u, v in g.edges)
        return bipartition(g) is not None
    raise ValueError(f"unknown graph class {label!r}")
