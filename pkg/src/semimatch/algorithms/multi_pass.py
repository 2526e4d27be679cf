"""Multi-pass improvement with a growing unmatched-side cap."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from ..graph import Matching
from ..stream import StreamSource, replay
from ._checks import check_grew
from .greedy import greedy_pass
from .improve import PassRecord, improve_matching
from .two_pass import _maybe_record, is_triangle_free_label

Number = Union[int, float, Fraction, str]


def as_fraction(epsilon: Number) -> Fraction:
    """Exact value of ``epsilon``; floats are read as the nearest simple fraction."""
    if isinstance(epsilon, float):
        return Fraction(epsilon).limit_denominator(10**9)
    return Fraction(epsilon)


def pass_budget(epsilon: Number, triangle_free: bool) -> int:
    """ceil(2/(3 eps)) for triangle-free inputs, ceil(4/(3 eps)) otherwise; at least 2."""
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    p = math.ceil((2 if triangle_free else 4) / (3 * eps))
    return max(p, 2)


def pass_caps(p: int, triangle_free: bool) -> list[tuple[int, int]]:
    """(lambda_U, lambda_M) for passes 2..p."""
    if triangle_free:
        return [(i, 1) for i in range(2, p + 1)]
    return [(i + 1, 2) for i in range(2, p + 1)]


def multi_pass(
    source: StreamSource,
    epsilon: Number,
    checked: bool = False,
    records: Optional[list[PassRecord]] = None,
) -> Matching:
    """Greedy first pass, then Improve-Matching once per remaining pass.

    The i-th pass uses caps (i, 1) on triangle-free inputs and (i + 1, 2)
    otherwise; the pass count is :func:`pass_budget`.
    """
    tf = is_triangle_free_label(source.class_label)
    p = pass_budget(epsilon, tf)
    meter = source.meter
    M, _ = greedy_pass(replay(source), source.n, meter)
    for lam_u, lam_m in pass_caps(p, tf):
        before = len(M)
        record = _maybe_record(records, M, lam_u, lam_m, False)
        M = improve_matching(replay(source), M, lam_u, lam_m,
                             meter=meter, checked=checked, record=record)
        if checked:
            check_grew(before, M, "multi-pass")
    return M
