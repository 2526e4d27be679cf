"""Three-pass algorithms for bipartite, triangle-free and general graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..graph import UNMATCHED, Edge, GraphError, Matching
from ..stream import StreamSource, replay
from ._checks import InvariantViolation, check_grew, check_matching
from .greedy import greedy_pass
from .improve import PassRecord, improve_matching
from .two_pass import _maybe_record


def three_pass_bipartite(source: StreamSource, checked: bool = False) -> Matching:
    """Maximal M0; maximal M_A from A(M0) to free B; maximal M_B from free A to
    the M0-partners of A(M_A); then augment along every b''-a'-b-a path."""
    if source.sides is None:
        raise GraphError("three-pass-bipartite needs the A/B sides of every vertex")
    sides = source.sides
    n = source.n
    meter = source.meter
    M0, _ = greedy_pass(replay(source), n, meter)
    base = M0.mate

    MA = Matching(n)
    ma = MA.mate
    ops = 0
    for p, q in replay(source):
        ops += 1
        a, b = (p, q) if sides[p] == "A" else (q, p)
        if base[a] != UNMATCHED and base[b] == UNMATCHED and ma[a] == UNMATCHED and ma[b] == UNMATCHED:
            MA.add(a, b)

    MB = Matching(n)
    mb = MB.mate
    for p, q in replay(source):
        ops += 1
        a, b = (p, q) if sides[p] == "A" else (q, p)
        if base[a] != UNMATCHED or base[b] == UNMATCHED:
            continue
        if ma[base[b]] == UNMATCHED:
            continue
        if mb[a] == UNMATCHED and mb[b] == UNMATCHED:
            MB.add(a, b)

    M = M0.copy()
    for b, a in MB.edges():
        if sides[b] != "B":
            a, b = b, a
        a_prime = base[b]
        b_far = ma[a_prime]
        M.augment3((a_prime, b), (b_far, a_prime), (b, a))
        ops += 1
        if checked:
            check_matching(M, "three-pass-bipartite")
    meter.ops(ops)
    meter.store(len(M0) + len(MA) + len(MB))
    if checked:
        check_grew(len(M0), M, "three-pass-bipartite")
        if len(M) != len(M0) + len(MB):
            raise InvariantViolation("bipartite output size differs from |M0| + |M_B|")
    return M


@dataclass
class AugmentationPlan:
    """Pointers for the third pass of the triangle-free algorithm.

    For each pointing vertex ``x``, ``pointer[x]`` is the free vertex ``v`` with ``vw`` in the
    trimmed second-pass matching and ``wx`` in ``M0``. ``marks`` only grows;
    ``x`` and ``pointer[x]`` are always marked together.
    """

    pointer: dict[int, int] = field(default_factory=dict)
    pointer_inv: dict[int, int] = field(default_factory=dict)
    marks: set[int] = field(default_factory=set)

    @property
    def pointing(self) -> set[int]:
        return set(self.pointer)

    def mark(self, v: Optional[int]) -> None:
        if v is not None:
            self.marks.add(v)

    def check_pairs(self, xs) -> None:
        for x in xs:
            if (x in self.marks) != (self.pointer[x] in self.marks):
                raise InvariantViolation(f"{x} and pointer({x}) = {self.pointer[x]} disagree on marking")


def three_pass_triangle_free(source: StreamSource, checked: bool = False) -> Matching:
    """Maximal M0; maximal M1 between free and matched vertices; trimmed M1'
    without 3-augmenting paths; marked greedy M2 from pointing vertices to free vertices.
    Returns the larger of M0 + (M1 paths) and M0 + (M1' with M2); ties go to
    the former."""
    n = source.n
    meter = source.meter
    M0, _ = greedy_pass(replay(source), n, meter)
    base = M0.mate

    M1 = Matching(n)
    m1 = M1.mate
    arrival: dict[Edge, int] = {}
    ops = 0
    for t, (p, q) in enumerate(replay(source)):
        ops += 1
        if (base[p] == UNMATCHED) == (base[q] == UNMATCHED):
            continue
        if m1[p] == UNMATCHED and m1[q] == UNMATCHED:
            M1.add(p, q)
            arrival[Edge(p, q)] = t

    # M3: every M0 edge with M1 edges at both ends; these paths are disjoint
    M3 = M0.copy()
    dropped: set[Edge] = set()
    for w, x in M0.edges():
        ops += 1
        p, q = m1[w], m1[x]
        if p == UNMATCHED or q == UNMATCHED:
            continue
        ew, ex = Edge(*sorted((p, w))), Edge(*sorted((q, x)))
        M3.augment3((w, x), ew, ex)
        dropped.add(max(ew, ex, key=arrival.__getitem__))

    plan = AugmentationPlan()
    for e in M1.edges():
        if e in dropped:
            continue
        v, w = (e.u, e.v) if base[e.u] == UNMATCHED else (e.v, e.u)
        x = base[w]
        plan.pointer[x] = v
        plan.pointer_inv[v] = x

    pointer, pointer_inv, marks = plan.pointer, plan.pointer_inv, plan.marks
    M2: list[Edge] = []
    for p, q in replay(source):
        ops += 1
        if p in pointer and base[q] == UNMATCHED:
            x, y = p, q
        elif q in pointer and base[p] == UNMATCHED:
            x, y = q, p
        else:
            continue
        if x in marks or y in marks or y == pointer[x]:
            # y == pointer[x] only happens on inputs with triangles
            continue
        M2.append(Edge(x, y))
        plan.mark(pointer[x])
        plan.mark(x)
        plan.mark(y)
        plan.mark(pointer_inv.get(y))
        if checked:
            plan.check_pairs([x] + ([pointer_inv[y]] if y in pointer_inv else []))

    M3_prime = M0.copy()
    for x, y in M2:
        w = base[x]
        M3_prime.augment3((w, x), (pointer[x], w), (x, y))
    meter.ops(ops)
    meter.store(len(M0) + len(M1) + len(M2))
    M = M3 if len(M3) >= len(M3_prime) else M3_prime
    if checked:
        for cand in (M3, M3_prime):
            check_matching(cand, "three-pass-triangle-free")
        check_grew(len(M0), M, "three-pass-triangle-free")
    return M


def three_pass_general(
    source: StreamSource,
    checked: bool = False,
    records: Optional[list[PassRecord]] = None,
) -> Matching:
    """Maximal matching, then Improve-Matching with caps (4, 2) and then (5, 2)."""
    meter = source.meter
    M, _ = greedy_pass(replay(source), source.n, meter)
    for lam_u, lam_m in ((4, 2), (5, 2)):
        before = len(M)
        record = _maybe_record(records, M, lam_u, lam_m, False)
        M = improve_matching(replay(source), M, lam_u, lam_m,
                             meter=meter, checked=checked, record=record)
        if checked:
            check_grew(before, M, "three-pass-general")
    return M
