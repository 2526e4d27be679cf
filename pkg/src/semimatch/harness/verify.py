"""Invariant suites behind ``semimatch verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from ..algorithms.registry import ALGORITHMS
from ..generators import random_instance, tight_instance
from ..graph import Graph
from ..oracle import alpha_schedule, exhaustive_max_matching, max_matching, satisfies_class
from .sweep import CATEGORIES, sweep

LEVELS = {
    # trials per class for the sweep, random graphs for oracle certification
    "fast": {"sweep": 150, "oracle": 200, "alpha": 200},
    "full": {"sweep": 10_000, "oracle": 1000, "alpha": 200},
}


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


@dataclass
class VerifySummary:
    level: str
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def render(self) -> str:
        lines = [f"verify ({self.level})"]
        for s in self.suites:
            lines.append(f"  [{'PASS' if s.passed else 'FAIL'}] {s.name} ({s.seconds:.1f}s): {s.detail}")
        lines.append("all suites passed" if self.passed else "FAILURES present")
        return "\n".join(lines)


def small_random_graphs(count: int, seed: int = 0, max_edges: int = 24):
    """Random graphs of every class with at most ``max_edges`` edges."""
    rng = np.random.default_rng(seed)
    classes = ("general", "triangle-free", "bipartite")
    for j in range(count):
        n = int(rng.integers(2, 13))
        g = random_instance(n, float(rng.uniform(0.1, 0.9)), classes[j % 3], int(rng.integers(2**31)))
        if g.m > max_edges:
            g = Graph(g.n, g.edges[:max_edges], g.class_label, g.sides)
        yield g


def oracle_certification(count: int, seed: int = 0) -> tuple[int, int]:
    """(mismatches, graphs checked) between blossom/Hopcroft-Karp and exhaustion."""
    bad = 0
    for g in small_random_graphs(count, seed):
        fast = max_matching(g)
        if not fast.is_valid() or any(e not in set(g.edges) for e in fast.edges()):
            bad += 1
            continue
        if len(fast) != len(exhaustive_max_matching(g)):
            bad += 1
        if g.class_label == "bipartite" and len(max_matching(g, "blossom")) != len(fast):
            bad += 1
    return bad, count


def alpha_bounds(limit: int) -> list[str]:
    problems = []
    for cls in ("triangle-free", "general"):
        sched = alpha_schedule(Fraction(1, 10), cls, p=limit)
        for i, a in enumerate(sched.alphas, start=1):
            if a < sched.lower_bound(i):
                problems.append(f"{cls}: alpha_{i} below bound")
            if i > 1 and a < sched.alphas[i - 2]:
                problems.append(f"{cls}: alpha_{i} decreases")
            if a >= Fraction(1, 6):
                problems.append(f"{cls}: alpha_{i} reaches 1/6")
    if alpha_schedule(Fraction(1, 10), "triangle-free", p=2).alphas[-1] != Fraction(1, 16):
        problems.append("alpha_2 != 1/16")
    return problems


def tight_reproduction() -> list[str]:
    problems = []
    for which in ("alg1", "alg4", ("esfandiari", 1), ("esfandiari", 2), ("esfandiari", 3), ("esfandiari", 4)):
        ti = tight_instance(which)
        M = ALGORITHMS[ti.target_algorithm](ti.source(), checked=True, **ti.params)
        opt = len(max_matching(ti.graph))
        if len(M) != ti.expected_M or opt != ti.expected_Mstar:
            problems.append(f"{ti.name}: got {len(M)}/{opt}, want {ti.expected_M}/{ti.expected_Mstar}")
        if not satisfies_class(ti.graph):
            problems.append(f"{ti.name}: not {ti.graph.class_label}")
    return problems


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> SuiteResult:
    start = time.perf_counter()
    ok, detail = fn()
    return SuiteResult(name, ok, detail, time.perf_counter() - start)


def verify(level: str = "fast", seed: int = 0) -> VerifySummary:
    """Run the invariant suites at ``level`` (``fast`` or ``full``)."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    cfg = LEVELS[level]
    out = VerifySummary(level)

    def oracle():
        bad, n = oracle_certification(cfg["oracle"], seed)
        return bad == 0, f"{bad} mismatches over {n} graphs"

    def alphas():
        problems = alpha_bounds(cfg["alpha"])
        return not problems, "; ".join(problems[:3]) or f"bounds hold for i <= {cfg['alpha']}"

    def tight():
        problems = tight_reproduction()
        return not problems, "; ".join(problems) or "all tight instances reproduced"

    out.suites.append(_timed("oracle self-certification", oracle))
    out.suites.append(_timed("alpha recurrence bounds", alphas))
    out.suites.append(_timed("tight instances", tight))

    start = time.perf_counter()
    summary = sweep(cfg["sweep"], seed=seed)
    share = (time.perf_counter() - start) / 7
    groups = {
        "matching validity and support caps": ("invariant",),
        "guarantee sweep": ("guarantee",),
        "pass and storage accounting": ("passes", "storage"),
        "union bookkeeping and augmentable bounds": ("identity", "augmentable"),
        "bad-edge bound": ("bad-edges",),
        "charges per good edge": ("charges",),
        "charges per good edge, strict gate": ("charges-strict",),
    }
    for name, cats in groups.items():
        bad = summary.count(*cats)
        examples = [e for c in cats for e in summary.examples.get(c, [])][:2]
        detail = f"{bad} failures over {summary.trials} trials"
        if examples:
            detail += "; e.g. " + " | ".join(examples)
        out.suites.append(SuiteResult(name, bad == 0, detail, share))
    assert set(c for cats in groups.values() for c in cats) == set(CATEGORIES)
    return out
