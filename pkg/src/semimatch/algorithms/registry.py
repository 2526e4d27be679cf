"""Algorithm labels, their pass counts and their proven approximation ratios."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from .greedy import greedy
from .multi_pass import as_fraction, multi_pass, pass_budget
from .three_pass import three_pass_bipartite, three_pass_general, three_pass_triangle_free
from .two_pass import is_triangle_free_label, two_pass_further, two_pass_improved, two_pass_simple

ALGORITHMS: dict[str, Callable] = {
    "greedy": greedy,
    "two-pass-simple": two_pass_simple,
    "two-pass-improved": two_pass_improved,
    "two-pass-further": two_pass_further,
    "three-pass-bipartite": three_pass_bipartite,
    "three-pass-triangle-free": three_pass_triangle_free,
    "three-pass-general": three_pass_general,
    "multi-pass": multi_pass,
}

# algorithms that accept a list collecting one record per Improve-Matching pass
RECORDING = {"two-pass-improved", "two-pass-further", "three-pass-general", "multi-pass"}

# classes on which an algorithm can run at all
REQUIRES = {
    "three-pass-bipartite": ("bipartite",),
    "three-pass-triangle-free": ("bipartite", "triangle-free"),
}

FIXED_PASSES = {
    "greedy": 1,
    "two-pass-simple": 2,
    "two-pass-improved": 2,
    "two-pass-further": 2,
    "three-pass-bipartite": 3,
    "three-pass-triangle-free": 3,
    "three-pass-general": 3,
}


def expected_passes(algorithm: str, class_label: str, epsilon=None) -> int:
    if algorithm == "multi-pass":
        return pass_budget(epsilon, is_triangle_free_label(class_label))
    return FIXED_PASSES[algorithm]


def guarantee(algorithm: str, class_label: str, epsilon=None) -> Optional[Fraction]:
    """Proven worst-case |M|/|M*| for ``algorithm`` on the declared class, or None."""
    tf = is_triangle_free_label(class_label)
    half = Fraction(1, 2)
    if algorithm == "greedy":
        return half
    if algorithm == "two-pass-simple":
        return half + Fraction(1, 20) if tf else None
    if algorithm == "two-pass-improved":
        return half + (Fraction(1, 16) if tf else Fraction(1, 32))
    if algorithm == "two-pass-further":
        return half + (1 / Fraction("12.86") if tf else Fraction(1, 28))
    if algorithm == "three-pass-bipartite":
        return half + Fraction(1, 10) if class_label == "bipartite" else None
    if algorithm == "three-pass-triangle-free":
        return half + Fraction(1, 10) if tf else None
    if algorithm == "three-pass-general":
        return half + Fraction(81, 1600)
    if algorithm == "multi-pass":
        return half + Fraction(1, 6) - as_fraction(epsilon)
    raise KeyError(f"unknown algorithm {algorithm!r}")


def run_algorithm(algorithm: str, source, epsilon=None, checked: bool = False, records=None):
    """Dispatch by label, forwarding only the options the algorithm takes."""
    try:
        fn = ALGORITHMS[algorithm]
    except KeyError:
        raise KeyError(f"unknown algorithm {algorithm!r}") from None
    kw = {"checked": checked}
    if algorithm in RECORDING and records is not None:
        kw["records"] = records
    if algorithm == "multi-pass":
        if epsilon is None:
            raise ValueError("multi-pass needs epsilon")
        return fn(source, epsilon, **kw)
    return fn(source, **kw)
