"""Component structure of the union of a maximal and a maximum matching."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import UNMATCHED, Edge, Matching, make_edge


@dataclass(frozen=True)
class AugmentingPath:
    """Vertices ``a, u1, v1, ..., b`` of an odd path whose ends are M0-free."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def base_edges(self) -> list[Edge]:
        vs = self.vertices
        return [make_edge(vs[j], vs[j + 1]) for j in range(1, len(vs) - 1, 2)]


@dataclass
class AugDecomposition:
    """Counts over the components of ``M0 + M*`` after canonicalizing ``M*``.

    ``k`` counts shared edges, ``k_i[i]`` the i-augmenting paths, and
    ``nonaug_other`` the shapes that were rewritten to shared edges during
    canonicalization (``"even-path"``, ``"cycle"``). ``alpha`` satisfies
    ``|M0| = (1/2 + alpha)|M*|`` exactly.
    """

    k: int
    k_i: dict[int, int]
    nonaug_other: dict[str, int]
    alpha: Fraction
    size_m0: int
    size_mstar: int
    canonical: Matching
    paths: list[AugmentingPath] = field(default_factory=list)

    @property
    def k3(self) -> int:
        return self.k_i.get(3, 0)

    def recomputed_sizes(self) -> tuple[int, int]:
        """(|M0|, |M*|) rebuilt from the component counts alone."""
        m0 = self.k + sum((i - 1) // 2 * c for i, c in self.k_i.items())
        ms = self.k + sum((i + 1) // 2 * c for i, c in self.k_i.items())
        return m0, ms

    def three_augmentable(self) -> dict[Edge, tuple[int, int, int, int]]:
        """Each 3-augmentable M0 edge mapped to its path ``(a, u, v, b)``."""
        out = {}
        for p in self.paths:
            if p.length == 3:
                a, u, v, b = p.vertices
                out[make_edge(u, v)] = (a, u, v, b)
        return out


def _extend(s: int, m0: list, ms: list, base_first: bool) -> tuple[list[int], bool]:
    """Vertices reached from ``s`` by alternating edges, starting with a base
    edge if ``base_first``; the flag reports a return to ``s``."""
    out = []
    cur, use_base = s, base_first
    while True:
        nxt = (m0 if use_base else ms)[cur]
        if nxt == UNMATCHED:
            return out, False
        if nxt == s:
            return out, True
        out.append(nxt)
        cur, use_base = nxt, not use_base


def decompose_union(M0: Matching, Mstar: Matching) -> AugDecomposition:
    """Classify the components of ``M0 + M*``.

    Non-augmenting components are canonicalized first: their ``M*`` edges are
    replaced by their ``M0`` edges. An even path or cycle holds as many edges
    of each, so ``M*`` stays maximum and the component becomes shared edges.
    """
    n = M0.n
    if Mstar.n != n:
        raise ValueError("matchings live on different vertex sets")
    m0, ms = M0.mate, Mstar.mate
    seen = bytearray(n)
    canon = Matching(n)
    k = 0
    k_i: Counter = Counter()
    other: Counter = Counter()
    paths: list[AugmentingPath] = []

    for s in range(n):
        if seen[s] or (m0[s] == UNMATCHED and ms[s] == UNMATCHED):
            continue
        if m0[s] == ms[s]:
            seen[s] = seen[m0[s]] = 1
            canon.add(s, m0[s])
            k += 1
            continue
        fwd, closed = _extend(s, m0, ms, True)
        if closed:
            seq = [s] + fwd
            edges = list(zip(seq, seq[1:] + seq[:1]))
        else:
            bwd, _ = _extend(s, m0, ms, False)
            seq = bwd[::-1] + [s] + fwd
            edges = list(zip(seq, seq[1:]))
        for v in seq:
            seen[v] = 1
        base_edges = [e for e in edges if m0[e[0]] == e[1]]
        opt_edges = [e for e in edges if ms[e[0]] == e[1]]
        if not closed and len(opt_edges) == len(base_edges) + 1:
            if m0[seq[0]] != UNMATCHED:
                seq.reverse()
            paths.append(AugmentingPath(tuple(seq)))
            k_i[len(edges)] += 1
            keep = opt_edges
        elif len(opt_edges) == len(base_edges):
            other["cycle" if closed else "even-path"] += 1
            k += len(base_edges)
            keep = base_edges
        else:
            # only possible when Mstar is not maximum; left untouched
            other["base-augmenting-path"] += 1
            keep = opt_edges
        for u, v in keep:
            canon.add(u, v)

    size_ms = len(canon)
    alpha = Fraction(len(M0), size_ms) - Fraction(1, 2) if size_ms else Fraction(0)
    return AugDecomposition(
        k=k,
        k_i=dict(sorted(k_i.items())),
        nonaug_other=dict(other),
        alpha=alpha,
        size_m0=len(M0),
        size_mstar=size_ms,
        canonical=canon,
        paths=paths,
    )


def augmentable_bounds_hold(d: AugDecomposition, size_mstar: int | None = None) -> bool:
    """Check ``k3 >= (1/2 - 3a)|M*|`` and ``|M0| - k3 <= 4a|M*|`` exactly."""
    ms = d.size_mstar if size_mstar is None else size_mstar
    if ms == 0:
        return d.size_m0 == 0
    a = Fraction(d.size_m0, ms) - Fraction(1, 2)
    return d.k3 >= (Fraction(1, 2) - 3 * a) * ms and d.size_m0 - d.k3 <= 4 * a * ms


# name used by the published interface
lemma1_check = augmentable_bounds_hold
