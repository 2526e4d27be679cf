"""Exact per-pass advantage schedule of the multi-pass algorithm."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..algorithms.multi_pass import as_fraction, pass_budget, pass_caps

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


@dataclass(frozen=True)
class GuaranteeSchedule:
    """``alphas[i-1]`` is the proven advantage after ``i`` passes."""

    epsilon: Fraction
    class_label: str
    p: int
    alphas: tuple[Fraction, ...]

    @property
    def final_ratio(self) -> Fraction:
        return HALF + self.alphas[-1]

    def lower_bound(self, i: int) -> Fraction:
        coeff = 2 if self.class_label in ("triangle-free", "bipartite") else 4
        return SIXTH - Fraction(coeff, 3 * i)

    def bound_holds(self) -> bool:
        return all(a >= self.lower_bound(i) for i, a in enumerate(self.alphas, start=1))


def improvement(alpha: Fraction, lambda_u: int, lambda_m: int) -> Fraction:
    """Advantage after one improvement pass from a maximal matching with
    advantage ``alpha``, caps ``(lambda_u, lambda_m)``."""
    lu2 = lambda_u * lambda_u
    return (Fraction(lambda_u - lambda_m, 4 * lu2)
            + (1 - Fraction(3 * lambda_u + lambda_m, 2 * lu2)) * alpha)


def recurrence_step(i: int, prev: Fraction, triangle_free: bool) -> Fraction:
    """The closed recurrence for pass ``i`` written out per class."""
    if triangle_free:
        return Fraction(i - 1, 4 * i * i) + (1 - Fraction(3 * i + 1, 2 * i * i)) * prev
    j = i + 1
    return Fraction(i - 1, 4 * j * j) + (1 - Fraction(3 * j + 2, 2 * j * j)) * prev


def alpha_schedule(epsilon: Union[float, Fraction, str], class_label: str,
                   p: int | None = None) -> GuaranteeSchedule:
    """Advantages alpha_1..alpha_p for the pass count implied by ``epsilon``.

    ``p`` overrides the pass count (used to tabulate long schedules).
    """
    eps = as_fraction(epsilon)
    tf = class_label in ("triangle-free", "bipartite")
    if p is None:
        p = pass_budget(eps, tf)
    alphas = [Fraction(0)]
    for i in range(2, p + 1):
        alphas.append(recurrence_step(i, alphas[-1], tf))
    return GuaranteeSchedule(eps, class_label, p, tuple(alphas))


def schedule_from_caps(p: int, triangle_free: bool) -> list[Fraction]:
    """Same schedule, driven by the per-pass caps the algorithm actually uses."""
    alphas = [Fraction(0)]
    for lu, lm in pass_caps(p, triangle_free):
        alphas.append(improvement(alphas[-1], lu, lm))
    return alphas
