"""Post-hoc good / partially good / bad classification of a recorded pass.

Reads a :class:`PassRecord` and a maximum matching, never the live machine.
Every 3-augmentable base edge ``uv`` on the path ``a-u-v-b`` (oriented so
that ``au`` arrives first) is

* good when the pass augmented it,
* bad when ``a`` was saturated at ``au``'s arrival or ``b`` at ``vb``'s,
* partially good otherwise, and then charged to one good edge.

Charge targets are tried in a fixed order: the good edge that matched ``a``
before ``au`` arrived; the one that matched a support neighbour of ``u``
before ``vb`` arrived; the one that matched ``b`` before ``vb`` arrived.
Two fallbacks (a matched support neighbour of ``v``, then one of ``u`` at
any time) cover the ignore-set cases. Anything left is reported as
unchargeable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..algorithms.improve import AUGMENTED, Event, PassRecord
from ..graph import Edge, Matching, make_edge
from .decomposition import AugDecomposition, decompose_union


@dataclass
class ChargeReport:
    lambda_u: int
    lambda_m: int
    strict: bool
    size_m0: int
    support_size: int
    good: list[Edge] = field(default_factory=list)
    partially_good: list[Edge] = field(default_factory=list)
    bad: list[Edge] = field(default_factory=list)
    charges: Counter = field(default_factory=Counter)
    charge_case: Counter = field(default_factory=Counter)
    unchargeable: list[Edge] = field(default_factory=list)

    @property
    def bad_limit(self) -> Fraction:
        return Fraction(self.lambda_m * self.size_m0, self.lambda_u)

    @property
    def charge_limit(self) -> int:
        return 2 * self.lambda_u - (2 if self.strict else 1)

    @property
    def max_charges(self) -> int:
        return max(self.charges.values(), default=0)

    @property
    def bad_ok(self) -> bool:
        return len(self.bad) <= self.bad_limit

    @property
    def charges_ok(self) -> bool:
        return self.max_charges <= self.charge_limit and not self.unchargeable

    @property
    def ok(self) -> bool:
        return self.bad_ok and self.charges_ok

    def problems(self) -> list[str]:
        out = []
        if not self.bad_ok:
            out.append(f"{len(self.bad)} bad edges exceed {self.bad_limit}")
        if self.max_charges > self.charge_limit:
            worst = max(self.charges, key=self.charges.__getitem__)
            out.append(f"good edge {tuple(worst)} charged {self.max_charges} > {self.charge_limit}")
        if self.unchargeable:
            out.append(f"{len(self.unchargeable)} partially good edges found no charge target")
        return out


def _degree_at(ev: Event, w: int) -> int:
    return ev.deg_x if ev.x == w else ev.deg_y


def classify_pass(record: PassRecord, optimum: Matching,
                  decomposition: Optional[AugDecomposition] = None) -> ChargeReport:
    """Classify the 3-augmentable edges of ``record.M0`` against ``optimum``."""
    if record.support is None or record.result is None:
        raise ValueError("record is incomplete; the pass has not finished")
    d = decomposition or decompose_union(record.M0, optimum)
    lam_u = record.lambda_u
    nbrs = record.support.nbrs
    rep = ChargeReport(lam_u, record.lambda_m, record.strict, len(record.M0), len(record.support))

    first: dict[Edge, Event] = {}
    matched_at: dict[int, int] = {}
    matched_by: dict[int, Edge] = {}
    augmented: set[Edge] = set()
    for ev in record.events:
        e = make_edge(ev.x, ev.y)
        if e not in first:
            first[e] = ev
        if ev.kind == AUGMENTED:
            good = make_edge(ev.y, ev.v)
            augmented.add(good)
            for w in (ev.x, ev.b):
                matched_at[w] = ev.t
                matched_by[w] = good

    never = float("inf")
    for uv, (a, u, v, b) in d.three_augmentable().items():
        ea, eb = first[make_edge(a, u)], first[make_edge(v, b)]
        if eb.t < ea.t:
            a, u, v, b = b, v, u, a
            ea, eb = eb, ea
        if uv in augmented:
            rep.good.append(uv)
            continue
        if _degree_at(ea, a) >= lam_u or _degree_at(eb, b) >= lam_u:
            rep.bad.append(uv)
            continue
        rep.partially_good.append(uv)
        target, case = None, None
        if matched_at.get(a, never) < ea.t:
            target, case = matched_by[a], "a-matched"
        if target is None:
            w = next((w for w in nbrs[u] if matched_at.get(w, never) < eb.t), None)
            if w is not None:
                target, case = matched_by[w], "u-neighbour-matched"
        if target is None and matched_at.get(b, never) < eb.t:
            target, case = matched_by[b], "b-matched"
        if target is None:
            w = next((w for w in nbrs[v] if w in matched_at), None)
            if w is not None:
                target, case = matched_by[w], "v-neighbour-matched"
        if target is None:
            w = next((w for w in nbrs[u] if w in matched_at), None)
            if w is not None:
                target, case = matched_by[w], "u-neighbour-later"
        if target is None:
            rep.unchargeable.append(uv)
        else:
            rep.charges[target] += 1
            rep.charge_case[case] += 1
    return rep
