"""Single-pass improvement of a maximal matching by immediate 3-augmentations.

A machine holds the base matching ``M0``, a growing support set ``S`` and the
ignore sets. Each arriving edge with one endpoint outside ``V(M0)`` either
closes a 3-augmenting path through an ``S`` edge, right away, or is kept in
``S`` when the degree caps allow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from ..graph import UNMATCHED, Edge, Matching
from ..stream import Meter
from ._checks import InvariantViolation, check_matching
from .support import IN_I, IgnoreSets, SupportSet

# event kinds recorded in a trace
IGNORED = "ignored"
BOTH_MATCHED = "both-matched"
AUGMENTED = "augmented"
ADDED = "added"
REJECTED = "rejected"


class Event(NamedTuple):
    """One arrival as seen by a machine.

    ``x``/``y`` are the unmatched/matched endpoints when the edge crosses
    ``V(M0)``, otherwise the raw endpoints. Degrees are taken before the
    arrival is processed. For augmentations ``v`` is ``y``'s base partner and
    ``b`` the support neighbour used.
    """

    t: int
    kind: str
    x: int
    y: int
    deg_x: int
    deg_y: int
    v: int = -1
    b: int = -1


@dataclass
class PassRecord:
    """Everything the offline charging diagnostic needs about one pass."""

    M0: Matching
    lambda_u: int
    lambda_m: int
    strict: bool
    events: list[Event] = field(default_factory=list)
    support: Optional[SupportSet] = None
    result: Optional[Matching] = None


class ImproveMachine:
    """Improve-Matching as a per-edge state machine.

    With ``strict`` set, an augmentation is allowed only while the arriving
    unmatched endpoint has fewer than ``lambda_u`` support edges.

    ``checked`` asserts the support invariants after every insertion. They
    hold for ``lambda_m >= 2`` on any input and for ``lambda_m == 1`` on
    triangle-free inputs; with ``lambda_m == 1`` and a triangle, both ends of a
    base edge may keep the same free neighbour and the check fires even
    though the output is still a valid matching.
    """

    def __init__(
        self,
        M0: Matching,
        lambda_u: int,
        lambda_m: int,
        strict: bool = False,
        checked: bool = False,
        record: Optional[PassRecord] = None,
    ):
        if lambda_m < 1 or lambda_u <= lambda_m:
            raise ValueError(f"need lambda_U > lambda_M >= 1, got ({lambda_u}, {lambda_m})")
        self.M0 = M0
        self.base = M0.mate
        self.lambda_u = lambda_u
        self.lambda_m = lambda_m
        self.strict = strict
        self.checked = checked
        self.M = M0.copy()
        self.support = SupportSet(M0.n, lambda_u, lambda_m, [w != UNMATCHED for w in M0.mate])
        self.ignore = IgnoreSets(M0.n)
        self.augmentations: list[tuple[Edge, Edge, Edge]] = []
        self.ops = 0
        self.t = 0
        self.record = record
        if record is not None:
            record.support = self.support

    def feed(self, p: int, q: int) -> None:
        t = self.t
        self.t += 1
        self.ops += 1
        flags = self.ignore.flags
        nbrs = self.support.nbrs
        record = self.record
        if flags[p] or flags[q]:
            if record is not None:
                record.events.append(Event(t, IGNORED, p, q, len(nbrs[p]), len(nbrs[q])))
            return
        base = self.base
        if base[p] != UNMATCHED:
            if base[q] != UNMATCHED:
                if record is not None:
                    record.events.append(
                        Event(t, BOTH_MATCHED, p, q, len(nbrs[p]), len(nbrs[q])))
                return
            x, y = q, p
        elif base[q] != UNMATCHED:
            x, y = p, q
        else:
            raise InvariantViolation(
                f"edge ({p}, {q}) has both endpoints outside V(M0); M0 is not maximal")
        v = base[y]
        nx = nbrs[x]
        ny = nbrs[y]
        deg_x = len(nx)
        deg_y = len(ny)
        b = -1
        if not self.strict or deg_x < self.lambda_u:
            b = self.support_partner(v, x)
        if b >= 0:
            self._augment(x, y, v, b)
            if record is not None:
                record.events.append(Event(t, AUGMENTED, x, y, deg_x, deg_y, v, b))
            return
        if deg_x < self.lambda_u and deg_y < self.lambda_m and y not in nx:
            self.support.add(x, y)
            kind = ADDED
            if self.checked:
                self._check_caps(x, y, v)
        else:
            kind = REJECTED
        if record is not None:
            record.events.append(Event(t, kind, x, y, deg_x, deg_y))

    def support_partner(self, v: int, x: int) -> int:
        """Earliest support neighbour of ``v`` other than ``x``, or -1.

        Skipping ``x`` is what keeps a triangle ``x-y-v-x`` from being taken
        for an augmenting path.
        """
        for w in self.support.nbrs[v]:
            self.ops += 1
            if w == x:
                continue
            if self.ignore.flags[w] & IN_I:
                raise InvariantViolation(f"support neighbour {w} of {v} already augmented")
            return w
        return -1

    def _augment(self, x: int, y: int, v: int, b: int) -> None:
        before = len(self.M)
        self.M.augment3((y, v), (x, y), (v, b))
        self.augmentations.append((Edge(*sorted((y, v))), Edge(*sorted((x, y))), Edge(*sorted((v, b)))))
        ign = self.ignore
        base = self.base
        nbrs = self.support.nbrs
        for w in (x, y, v, b):
            ign.add_i(w)
        for w in nbrs[x]:
            ign.add_ib(w)
            ign.add_ib(base[w])
        for w in nbrs[b]:
            ign.add_ib(w)
            ign.add_ib(base[w])
        self.ops += 4 + len(nbrs[x]) + len(nbrs[b])
        if self.checked:
            check_matching(self.M, "improve-matching")
            if len(self.M) != before + 1:
                raise InvariantViolation("augmentation did not grow the matching by one")

    def _check_caps(self, x: int, y: int, v: int) -> None:
        nbrs = self.support.nbrs
        if len(nbrs[x]) > self.lambda_u:
            raise InvariantViolation(f"deg_S({x}) exceeds lambda_U")
        if len(nbrs[y]) > self.lambda_m:
            raise InvariantViolation(f"deg_S({y}) exceeds lambda_M")
        if len(nbrs[y]) + len(nbrs[v]) > self.lambda_m:
            raise InvariantViolation(
                f"deg_S({y}) + deg_S({v}) = {len(nbrs[y]) + len(nbrs[v])} exceeds lambda_M")
        if len(self.support) > self.lambda_m * len(self.M0):
            raise InvariantViolation("|S| exceeds lambda_M * |M0|")

    def stored_edges(self) -> int:
        """Edges held beyond the shared base matching: support edges and the
        two new matching edges of every augmentation. Ignore sets are vertex
        flags and are not counted."""
        return 2 * len(self.augmentations) + len(self.support)

    def finish(self, meter: Optional[Meter] = None) -> Matching:
        if meter is not None:
            meter.ops(self.ops)
            self.ops = 0
        if self.checked:
            check_matching(self.M, "improve-matching")
            self.support.check_caps(self.M0)
        if self.record is not None:
            self.record.result = self.M
        return self.M


def improve_matching(
    stream: Iterable[Sequence[int]],
    M0: Matching,
    lambda_u: int,
    lambda_m: int,
    strict: bool = False,
    *,
    meter: Optional[Meter] = None,
    checked: bool = False,
    record: Optional[PassRecord] = None,
) -> Matching:
    """Run one Improve-Matching pass over ``stream`` starting from maximal ``M0``.

    Returns a new matching at least as large as ``M0``; ``M0`` is untouched.
    """
    machine = ImproveMachine(M0, lambda_u, lambda_m, strict, checked, record)
    feed = machine.feed
    for p, q in stream:
        feed(p, q)
    M = machine.finish(meter)
    if meter is not None:
        meter.store(len(M0) + machine.stored_edges())
    return M


def new_record(M0: Matching, lambda_u: int, lambda_m: int, strict: bool) -> PassRecord:
    return PassRecord(M0.copy(), lambda_u, lambda_m, strict)
