"""Two-pass algorithms: semi-matching support, immediate augmentation, strict gate."""

from __future__ import annotations

from typing import Optional

from ..graph import UNMATCHED, Matching
from ..stream import StreamSource, replay
from ._checks import check_grew, check_matching
from .greedy import greedy_pass
from .improve import ImproveMachine, PassRecord, improve_matching, new_record
from .support import greedy_augment, semi_matching

SIMPLE_LAMBDA = 3


def is_triangle_free_label(label: str) -> bool:
    return label in ("triangle-free", "bipartite")


def improve_params(class_label: str) -> tuple[int, int]:
    """(lambda_U, lambda_M) for the two-pass improvement on a declared class."""
    return (2, 1) if is_triangle_free_label(class_label) else (4, 2)


def two_pass_simple(source: StreamSource, checked: bool = False, lam: int = SIMPLE_LAMBDA) -> Matching:
    """Maximal matching, then a (3, V(M0), V - V(M0)) semi-matching, then greedy augmentation.

    Intended for triangle-free inputs; on general graphs a support triangle is
    simply skipped.
    """
    meter = source.meter
    M0, order = greedy_pass(replay(source), source.n, meter)
    matched = [v for v, w in enumerate(M0.mate) if w != UNMATCHED]
    free = [v for v, w in enumerate(M0.mate) if w == UNMATCHED]
    S = semi_matching(replay(source), lam, matched, free, source.n, meter)
    M = greedy_augment(M0, S, order, meter)
    meter.store(len(M0) + len(S) + (len(M) - len(M0)) * 2)
    if checked:
        check_matching(M, "two-pass-simple")
        check_grew(len(M0), M, "two-pass-simple")
    return M


def two_pass_improved(
    source: StreamSource,
    checked: bool = False,
    records: Optional[list[PassRecord]] = None,
) -> Matching:
    """Maximal matching, then one Improve-Matching pass with class-dependent caps."""
    meter = source.meter
    M0, _ = greedy_pass(replay(source), source.n, meter)
    lam_u, lam_m = improve_params(source.class_label)
    record = _maybe_record(records, M0, lam_u, lam_m, False)
    M = improve_matching(replay(source), M0, lam_u, lam_m, False,
                         meter=meter, checked=checked, record=record)
    if checked:
        check_grew(len(M0), M, "two-pass-improved")
    return M


def two_pass_further(
    source: StreamSource,
    checked: bool = False,
    records: Optional[list[PassRecord]] = None,
) -> Matching:
    """Maximal matching, then strict-gate Improve-Matching.

    On triangle-free inputs two strict machines, caps (2, 1) and (3, 1), read
    the same second pass and the larger result wins (ties go to (2, 1)).
    General inputs use a single strict machine with caps (4, 2).
    """
    meter = source.meter
    M0, _ = greedy_pass(replay(source), source.n, meter)
    params = [(2, 1), (3, 1)] if is_triangle_free_label(source.class_label) else [(4, 2)]
    machines = [
        ImproveMachine(M0, lu, lm, True, checked, _maybe_record(records, M0, lu, lm, True))
        for lu, lm in params
    ]
    feeds = [m.feed for m in machines]
    for p, q in replay(source):
        for feed in feeds:
            feed(p, q)
    results = [m.finish(meter) for m in machines]
    meter.store(len(M0) + sum(m.stored_edges() for m in machines))
    best = max(results, key=len)
    if checked:
        check_grew(len(M0), best, "two-pass-further")
    return best


def _maybe_record(records, M0, lam_u, lam_m, strict) -> Optional[PassRecord]:
    if records is None:
        return None
    rec = new_record(M0, lam_u, lam_m, strict)
    records.append(rec)
    return rec
