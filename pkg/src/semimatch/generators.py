"""Seeded instance factories: random graphs per class, prescribed union
structures, the hand-built tight examples, and stream orderings."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .graph import Edge, Graph, GraphError, LabelMap, make_edge
from .stream import StreamSource, open_source

ORDER_KINDS = ("as-given", "random", "m0-first")

# above this many vertices, edges are drawn as random pairs instead of by
# testing every pair
_DENSE_LIMIT = 2000


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_instance(n: int, density: float, class_label: str = "general", seed=0) -> Graph:
    """A random graph on ``n`` vertices whose class holds by construction.

    ``density`` is the probability of each admissible pair. Bipartite graphs
    draw sides uniformly and only cross pairs are admissible. Triangle-free
    graphs visit the pairs in random order and drop any pair that would close
    a triangle.
    """
    if n < 1:
        raise GraphError("n must be at least 1")
    if not 0 < density <= 1:
        raise GraphError("density must lie in (0, 1]")
    rng = _rng(seed)
    sides = None
    if class_label == "bipartite":
        side_of = rng.integers(0, 2, size=n)
        sides = tuple("AB"[s] for s in side_of.tolist())
    pairs = _sample_pairs(n, density, rng)
    if class_label == "bipartite":
        pairs = [p for p in pairs if sides[p[0]] != sides[p[1]]]
    elif class_label == "triangle-free":
        adj: list[set[int]] = [set() for _ in range(n)]
        kept = []
        for u, v in pairs:
            if adj[u].isdisjoint(adj[v]):
                adj[u].add(v)
                adj[v].add(u)
                kept.append((u, v))
        pairs = kept
    elif class_label != "general":
        raise GraphError(f"unknown graph class {class_label!r}")
    return Graph(n, tuple(make_edge(u, v) for u, v in pairs), class_label, sides)


def _sample_pairs(n: int, density: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Distinct unordered pairs, each present with probability ``density``,
    in random order."""
    total = n * (n - 1) // 2
    if total == 0:
        return []
    if n <= _DENSE_LIMIT:
        iu, ju = np.triu_indices(n, k=1)
        keep = rng.random(total) < density
        idx = np.flatnonzero(keep)
        rng.shuffle(idx)
        return list(zip(iu[idx].tolist(), ju[idx].tolist()))
    m = int(rng.binomial(total, density))
    chosen: set[tuple[int, int]] = set()
    out = []
    while len(out) < m:
        batch = rng.integers(0, n, size=(2 * (m - len(out)) + 8, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            e = (u, v) if u < v else (v, u)
            if e not in chosen:
                chosen.add(e)
                out.append(e)
                if len(out) == m:
                    break
    return out


def _path_layout(k: int, k_i: dict, rng: np.random.Generator):
    """Vertex sequences for k single edges and the requested odd paths, on
    shuffled ids. Returns (n, shared, paths)."""
    for i, c in k_i.items():
        if i < 3 or i % 2 == 0:
            raise GraphError(f"path lengths must be odd and at least 3, got {i}")
        if c < 0:
            raise GraphError("path counts must be non-negative")
    if k < 0:
        raise GraphError("k must be non-negative")
    n = 2 * k + sum((i + 1) * c for i, c in k_i.items())
    ids = rng.permutation(n).tolist()
    pos = 0
    shared = []
    for _ in range(k):
        shared.append((ids[pos], ids[pos + 1]))
        pos += 2
    paths = []
    for i, c in sorted(k_i.items()):
        for _ in range(c):
            paths.append(ids[pos:pos + i + 1])
            pos += i + 1
    return n, shared, paths


def path_union_instance(k: int, k_i: dict, seed=0) -> tuple[Graph, list[Edge]]:
    """Disjoint shared edges and odd alternating paths.

    Every path ``p0 p1 ... pi`` has base edges ``p1p2, p3p4, ...`` and
    optimal edges ``p0p1, p2p3, ...``. The returned ordering lists all base
    edges (and the shared edges) first, so a greedy first pass takes exactly
    them. The graph's own edge order equals the ordering.
    """
    rng = _rng(seed)
    n, shared, paths = _path_layout(k, dict(k_i), rng)
    base = [make_edge(u, v) for u, v in shared]
    rest = []
    sides = ["A"] * n
    for p in paths:
        for j in range(len(p) - 1):
            (base if j % 2 else rest).append(make_edge(p[j], p[j + 1]))
        for j, v in enumerate(p):
            sides[v] = "AB"[j % 2]
    for u, v in shared:
        sides[u], sides[v] = "A", "B"
    base = [base[j] for j in rng.permutation(len(base)).tolist()]
    rest = [rest[j] for j in rng.permutation(len(rest)).tolist()]
    ordering = base + rest
    return Graph(n, tuple(ordering), "bipartite", tuple(sides)), ordering


def planted_instance(size: int, class_label: str, seed=0, noise: float = 1.0,
                     lengths: Sequence[int] = (3, 3, 3, 5, 7),
                     noise_first: bool = False) -> tuple[Graph, list[Edge]]:
    """Random path union of about ``size`` vertices plus noise edges.

    Each noise edge touches a base-matched vertex, so the planted base
    matching stays maximal, and respects ``class_label``. About
    ``noise * size`` noise edges are attempted. The ordering puts the base
    matching first and shuffles the rest, or with ``noise_first`` streams
    all noise before the path edges so that it competes for support slots.
    """
    rng = _rng(seed)
    k_i: dict[int, int] = {}
    k = 0
    used = 0
    while used < size:
        if rng.random() < 0.15:
            k += 1
            used += 2
        else:
            i = int(rng.choice(lengths))
            k_i[i] = k_i.get(i, 0) + 1
            used += i + 1
    n, shared, paths = _path_layout(k, k_i, rng)
    base = [make_edge(u, v) for u, v in shared]
    rest = []
    colour = [0] * n
    for p in paths:
        for j in range(len(p) - 1):
            (base if j % 2 else rest).append(make_edge(p[j], p[j + 1]))
        for j, v in enumerate(p):
            colour[v] = j % 2
    for u, v in shared:
        colour[u], colour[v] = 0, 1
    matched = sorted({w for e in base for w in e})
    present = set(base) | set(rest)
    noisy: list[Edge] = []
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in present:
        adj[u].add(v)
        adj[v].add(u)
    attempts = int(noise * size)
    if matched:
        ends = rng.choice(matched, size=attempts).tolist()
        others = rng.integers(0, n, size=attempts).tolist()
        for u, v in zip(ends, others):
            if u == v:
                continue
            e = make_edge(u, v)
            if e in present:
                continue
            if class_label == "bipartite" and colour[u] == colour[v]:
                continue
            if class_label == "triangle-free" and not adj[u].isdisjoint(adj[v]):
                continue
            present.add(e)
            noisy.append(e)
            adj[u].add(v)
            adj[v].add(u)
    base = [base[j] for j in rng.permutation(len(base)).tolist()]
    if noise_first:
        noisy = [noisy[j] for j in rng.permutation(len(noisy)).tolist()]
        rest = [rest[j] for j in rng.permutation(len(rest)).tolist()]
        ordering = base + noisy + rest
    else:
        rest += noisy
        ordering = base + [rest[j] for j in rng.permutation(len(rest)).tolist()]
    sides = tuple("AB"[c] for c in colour) if class_label == "bipartite" else None
    return Graph(n, tuple(ordering), class_label, sides), ordering


# ---------------------------------------------------------------- orderings

@dataclass(frozen=True)
class OrderingSpec:
    kind: str = "as-given"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.kind == "as-given" else f"{self.kind}:{self.seed}"

    @classmethod
    def parse(cls, text: str) -> "OrderingSpec":
        """``as-given``, ``random:<seed>`` or ``m0-first:<seed>``."""
        m = re.fullmatch(r"(as-given|random|m0-first)(?::(-?\d+))?", text.strip())
        if not m:
            raise ValueError(f"bad ordering {text!r}; expected as-given, random:<seed> or m0-first:<seed>")
        kind, seed = m.group(1), m.group(2)
        if kind != "as-given" and seed is None:
            raise ValueError(f"ordering {kind!r} needs a seed, e.g. {kind}:7")
        return cls(kind, int(seed or 0))


def small_maximal_matching(edges: Sequence[Edge], n: int, seed=0) -> list[Edge]:
    """A maximal matching biased toward few edges.

    Edges whose endpoints have many neighbours are tried first (ties broken
    by ``seed``), which on a path picks the inner edges.
    """
    deg = np.zeros(n, dtype=np.int64)
    distinct = list(dict.fromkeys(edges))
    for u, v in distinct:
        deg[u] += 1
        deg[v] += 1
    rng = _rng(seed)
    tiebreak = rng.random(len(distinct))
    keyed = sorted(range(len(distinct)),
                   key=lambda j: (-(deg[distinct[j].u] + deg[distinct[j].v]), tiebreak[j]))
    covered = bytearray(n)
    out = []
    for j in keyed:
        u, v = distinct[j]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = 1
            out.append(distinct[j])
    return out


def ordered_edges(g: Graph, spec: Union[OrderingSpec, str]) -> list[Edge]:
    if isinstance(spec, str):
        spec = OrderingSpec.parse(spec)
    edges = list(g.edges)
    if spec.kind == "as-given":
        return edges
    rng = _rng(spec.seed)
    if spec.kind == "random":
        return [edges[j] for j in rng.permutation(len(edges)).tolist()]
    first = small_maximal_matching(edges, g.n, spec.seed)
    pending = set(first)
    rest = []
    for e in edges:
        if e in pending:
            pending.discard(e)  # later duplicates stay in the tail
        else:
            rest.append(e)
    rest = [rest[j] for j in rng.permutation(len(rest)).tolist()]
    return first + rest


def apply_ordering(g: Graph, spec: Union[OrderingSpec, str] = "as-given") -> StreamSource:
    """A stream over ``g`` whose arrival order follows ``spec``."""
    if isinstance(spec, str):
        spec = OrderingSpec.parse(spec)
    src = open_source(g.with_edges(ordered_edges(g, spec)))
    src.provenance = str(spec)
    return src


# ------------------------------------------------------------ tight examples

@dataclass(frozen=True)
class TightInstance:
    """A graph, its arrival order and the outcome it is built to force.

    ``labels`` maps the construction's vertex names to ids. ``support`` is the
    support edge set the instance is designed around (empty when not
    applicable) and ``params`` extra keyword arguments for the target.
    """

    name: str
    graph: Graph
    ordering: tuple[Edge, ...]
    expected_M: int
    expected_Mstar: int
    target_algorithm: str
    labels: dict = field(default_factory=dict)
    base: tuple[Edge, ...] = ()
    support: tuple[Edge, ...] = ()
    params: dict = field(default_factory=dict)

    def source(self) -> StreamSource:
        src = open_source(self.graph.with_edges(self.ordering))
        src.provenance = f"tight:{self.name}"
        return src


def _named(pairs, lab: LabelMap) -> list[Edge]:
    return [make_edge(lab(a), lab(b)) for a, b in pairs]


def _three_pass_bipartite_example(extra: bool) -> tuple[Graph, list[Edge], LabelMap, list[Edge]]:
    # Vertices a1..a3 on side A with base partners b1..b3; free vertices
    # beta1, beta2 (side B) and alpha1, alpha2 (side A). Optimum pairs:
    # beta2-a1, b1-alpha2, beta1-a3, b3-a2, b2-alpha1.
    lab = LabelMap()
    for name in ("a1", "a2", "a3", "b1", "b2", "b3", "beta1", "beta2", "alpha1", "alpha2"):
        lab(name)
    base = [("a1", "b1"), ("a2", "b2"), ("a3", "b3")]
    forcing = [("a3", "beta2")] + ([("b2", "alpha2")] if extra else [])
    optimum = [("beta2", "a1"), ("b1", "alpha2"), ("beta1", "a3"), ("b3", "a2"), ("b2", "alpha1")]
    ordering = _named(base + forcing + optimum, lab)
    sides = tuple("A" if name[0] == "a" else "B" for name in lab.names())
    label = "bipartite" if not extra else "triangle-free"
    g = Graph(lab.n, tuple(ordering), label, sides)
    return g, ordering, lab, _named(base, lab)


def _hub_example(k: int):
    """Base edges u_i v_i (i = 1..2k+1), optimum edges a_i u_i and v_i b_i.

    Three free vertices a1, b2 and b_{2k+1} act as hubs with k support edges
    each. Base edges 3..2k are covered on both sides by two different hubs
    (first hub on the u side), following a repeating pair pattern; the remaining
    sides v1, u2, u_{2k+1} take a leftover hub slot when one is allowed
    without closing a triangle, else their own optimum edge. Any
    augmentation through support edges needs two hubs, so at most one is
    realizable.
    """
    if k < 1:
        raise GraphError("esfandiari(k) needs k >= 1")
    r = 2 * k + 1
    double = list(range(3, r))
    if 2 * len(double) > 3 * k:
        raise GraphError(
            f"esfandiari({k}): {len(double)} doubly covered edges need more than 3k hub slots")
    lab = LabelMap()
    for i in range(1, r + 1):
        lab(f"u{i}")
        lab(f"v{i}")
    for i in range(1, r + 1):
        lab(f"a{i}")
        lab(f"b{i}")
    hubs = {"Ha": "a1", "Hb": "b2", "Hc": f"b{r}"}
    left = {h: k for h in hubs}
    support: list[tuple[str, str]] = []
    # the first four pairs give the k = 3 layout; later ones rotate so
    # that no hub exceeds k slots for k <= 4
    pattern = [("Ha", "Hb"), ("Ha", "Hb"), ("Ha", "Hc"), ("Hb", "Hc")]
    rotation = [("Ha", "Hc"), ("Hb", "Hc"), ("Ha", "Hb")]
    for j, i in enumerate(double):
        first, second = pattern[j] if j < 4 else rotation[(j - 4) % 3]
        if left[first] == 0 or left[second] == 0:
            first, second = sorted(sorted(hubs, key=lambda h: -left[h])[:2])
            if left[second] == 0 or left[first] == 0:
                raise GraphError(f"esfandiari({k}): hub slots exhausted")
        support.append((hubs[first], f"u{i}"))
        support.append((hubs[second], f"v{i}"))
        left[first] -= 1
        left[second] -= 1
    # single sides and the hubs that may cover them without a triangle
    singles = [("v1", ("Hc", "Hb")), ("u2", ("Ha", "Hc")), (f"u{r}", ("Ha", "Hb"))]
    for side, allowed in singles:
        hub = next((h for h in allowed if left[h] > 0), None)
        if hub is not None:
            support.append((hubs[hub], side))
            left[hub] -= 1
        else:
            idx = side[1:]
            partner = f"a{idx}" if side[0] == "u" else f"b{idx}"
            support.append((partner, side))
    base = [(f"u{i}", f"v{i}") for i in range(1, r + 1)]
    optimum = [(f"a{i}", f"u{i}") for i in range(1, r + 1)] + [(f"v{i}", f"b{i}") for i in range(1, r + 1)]
    support_edges = _named(support, lab)
    base_edges = _named(base, lab)
    chosen = set(support_edges)
    rest = [e for e in _named(optimum, lab) if e not in chosen]
    ordering = base_edges + support_edges + rest
    g = Graph(lab.n, tuple(ordering), "triangle-free")
    return g, ordering, lab, base_edges, support_edges


def realizable_augmentations(base: Sequence[Edge], support: Sequence[Edge], n: int) -> int:
    """Most vertex-disjoint 3-augmentations of ``base`` using only ``support``
    edges, by exhaustive search."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in support:
        nbrs[u].append(v)
        nbrs[v].append(u)
    options = []
    for u, v in base:
        paths = [(a, b) for a in nbrs[u] for b in nbrs[v] if a != b]
        if paths:
            options.append(paths)
    best = 0

    def search(j: int, used: set, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if j == len(options) or count + len(options) - j <= best:
            return
        for a, b in options[j]:
            if a not in used and b not in used:
                used.add(a)
                used.add(b)
                search(j + 1, used, count + 1)
                used.discard(a)
                used.discard(b)
        search(j + 1, used, count)

    search(0, set(), 0)
    return best


def tight_instance(which) -> TightInstance:
    """``"alg1"``, ``"alg4"`` or ``("esfandiari", k)`` (also ``"esfandiari:k"``).

    alg1: base edges first, then a3-beta2 so that the second pass pairs a3
    with beta2 and the third pass finds no edge from a free A vertex to b3;
    nothing is augmented.
    alg4: the same graph plus b2-alpha2, streamed right after a3-beta2; both
    enter the second-pass matching, neither closes a path, and the pointed-to
    vertices b3 and a2 have no free neighbours.
    esfandiari(k): base, then support, then the remaining optimum edges. A
    (k, V(M0), free)-semi-matching then keeps exactly the support edges, as
    every later edge meets a saturated hub or an already covered base vertex.
    """
    if isinstance(which, str) and which.startswith("esfandiari"):
        m = re.fullmatch(r"esfandiari[:(]?\s*(\d+)\)?", which)
        if not m:
            raise ValueError(f"unknown tight instance {which!r}")
        which = ("esfandiari", int(m.group(1)))
    if which in ("alg1", "alg4"):
        g, ordering, lab, base = _three_pass_bipartite_example(which == "alg4")
        target = "three-pass-bipartite" if which == "alg1" else "three-pass-triangle-free"
        return TightInstance(which, g, tuple(ordering), 3, 5, target, dict(lab.ids), tuple(base))
    if isinstance(which, tuple) and len(which) == 2 and which[0] == "esfandiari":
        k = int(which[1])
        g, ordering, lab, base, support = _hub_example(k)
        gained = realizable_augmentations(base, support, g.n)
        return TightInstance(
            f"esfandiari:{k}", g, tuple(ordering), len(base) + gained, 2 * len(base),
            "two-pass-simple", dict(lab.ids), tuple(base), tuple(support), {"lam": k},
        )
    raise ValueError(f"unknown tight instance {which!r}")


def write_instance(g: Graph, path: Union[str, os.PathLike], comment: Optional[str] = None) -> None:
    """Serialize ``g`` (edges in stream order) to the text graph format."""
    from .harness.io import write_graph_file

    write_graph_file(g, path, comment)
