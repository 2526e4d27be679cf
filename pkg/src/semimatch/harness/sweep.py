"""Seeded small-instance sweeps with every runtime and offline check enabled.

Each trial builds one graph with its arrival order, computes the optimum
once, runs every algorithm that applies to the class in checked mode with
pass records, and collects failures by category:

``guarantee``  ratio below the proven bound
``invariant``  a checked-mode assertion fired
``passes``     pass count differs from the formula
``storage``    peak stored edges above 3n
``identity``   union bookkeeping does not reproduce both matching sizes
``augmentable`` 3-augmentable edge bounds
``bad-edges``  too many bad edges
``charges``    a good edge charged too often, or a partially good edge with
               no charge target
``charges-strict``  the same for strict-gate passes
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from ..algorithms import InvariantViolation
from ..algorithms.multi_pass import pass_budget
from ..algorithms.registry import RECORDING, expected_passes, guarantee, run_algorithm
from ..algorithms.two_pass import is_triangle_free_label
from ..generators import OrderingSpec, ordered_edges, planted_instance, random_instance
from ..graph import AugmentationError, Graph, Matching
from ..oracle import classify_pass, decompose_union, augmentable_bounds_hold, max_matching
from ..stream import collect_metrics, open_source

SWEEP_EPSILONS = (Fraction(1, 6), Fraction(1, 10), Fraction(1, 20))
MAX_N = 40
CATEGORIES = ("guarantee", "invariant", "passes", "storage", "identity", "augmentable", "bad-edges",
              "charges", "charges-strict")

SWEEP_ALGORITHMS = {
    "bipartite": ("greedy", "two-pass-simple", "two-pass-improved", "two-pass-further",
                  "three-pass-bipartite", "three-pass-triangle-free", "three-pass-general",
                  "multi-pass"),
    "triangle-free": ("greedy", "two-pass-simple", "two-pass-improved", "two-pass-further",
                      "three-pass-triangle-free", "three-pass-general", "multi-pass"),
    "general": ("greedy", "two-pass-improved", "two-pass-further", "three-pass-general",
                "multi-pass"),
}


def sweep_instance(class_label: str, t: int, seed: int = 0) -> tuple[Graph, str]:
    """Trial ``t`` of a sweep: a graph (edges in arrival order) and a label.

    Cycles through five families: random graphs in random order, random
    graphs with a small maximal matching streamed first, planted path unions
    with shuffled noise, random graphs in generation order, and planted path
    unions of 3-paths whose noise arrives before the path edges.
    """
    rng = np.random.default_rng([seed, t, GRAPH_CLASS_IDS[class_label]])
    s = int(rng.integers(2**31))
    family = t % 5
    if family in (2, 4):
        size = int(rng.integers(6, 33))
        adversarial = family == 4
        g, _ = planted_instance(size, class_label, s, noise=float(rng.uniform(0.3, 3.0)),
                                lengths=(3,) if adversarial else (3, 3, 3, 5, 7),
                                noise_first=adversarial)
        return g, f"planted(size={size}, seed={s}{', noise first' if adversarial else ''})"
    n = int(rng.integers(2, MAX_N + 1))
    density = float(rng.uniform(0.05, 0.6))
    g = random_instance(n, density, class_label, s)
    if family == 0:
        order = OrderingSpec("random", s)
    elif family == 1:
        order = OrderingSpec("m0-first", s)
    else:
        order = OrderingSpec("as-given")
    return g.with_edges(ordered_edges(g, order)), f"random(n={n}, p={density:.3f}, seed={s}, {order})"


GRAPH_CLASS_IDS = {"bipartite": 0, "triangle-free": 1, "general": 2}


@dataclass
class TrialOutcome:
    class_label: str
    label: str
    n: int
    m: int
    optimum: int
    ratios: dict[str, Fraction] = field(default_factory=dict)
    failures: list[tuple[str, str]] = field(default_factory=list)
    max_charges: dict[str, int] = field(default_factory=dict)

    def fail(self, category: str, message: str) -> None:
        self.failures.append((category, message))

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_union(out: TrialOutcome, M0: Matching, opt: Matching, where: str):
    d = decompose_union(M0, opt)
    if d.recomputed_sizes() != (len(M0), len(opt)) or d.size_mstar != len(opt):
        out.fail("identity", f"{where}: union counts {d.recomputed_sizes()} vs {(len(M0), len(opt))}")
    if not augmentable_bounds_hold(d):
        out.fail("augmentable", f"{where}: k3={d.k3}, |M0|={len(M0)}, |M*|={len(opt)}")
    return d


def check_trial(g: Graph, label: str = "", algorithms: Optional[Sequence[str]] = None,
                epsilons: Sequence[Fraction] = SWEEP_EPSILONS) -> TrialOutcome:
    """Run the full battery of checks on one instance (edges in arrival order)."""
    cls = g.class_label
    opt = max_matching(g)
    out = TrialOutcome(cls, label, g.n, g.m, len(opt))
    src = open_source(g)
    tf = is_triangle_free_label(cls)
    eps_run = min(epsilons) if epsilons else Fraction(1, 10)
    for alg in algorithms or SWEEP_ALGORITHMS[cls]:
        records: Optional[list] = [] if alg in RECORDING else None
        eps = eps_run if alg == "multi-pass" else None
        src.reset_metrics()
        try:
            M = run_algorithm(alg, src, eps, checked=True, records=records)
        except (InvariantViolation, AugmentationError) as exc:
            out.fail("invariant", f"{alg}: {exc}")
            continue
        metrics = collect_metrics(src)
        if metrics.passes != expected_passes(alg, cls, eps):
            out.fail("passes", f"{alg}: {metrics.passes} passes")
        if metrics.peak_stored_edges > 3 * g.n:
            out.fail("storage", f"{alg}: peak {metrics.peak_stored_edges} > 3n")
        results = [(alg, M, eps)]
        if alg == "multi-pass":
            results = []
            for e in epsilons:
                p = pass_budget(e, tf)
                results.append((f"multi-pass[{e}]", records[p - 2].result, e))
        for name, R, e in results:
            ratio = Fraction(len(R), len(opt)) if len(opt) else Fraction(1)
            out.ratios[name] = ratio
            bound = guarantee(alg, cls, e)
            if bound is not None and ratio < bound:
                out.fail("guarantee", f"{name}: {len(R)}/{len(opt)} < {bound}")
        if alg == "greedy":
            _check_union(out, M, opt, "greedy")
        for j, rec in enumerate(records or ()):
            where = f"{alg} pass {j + 2} caps ({rec.lambda_u}, {rec.lambda_m})"
            d = _check_union(out, rec.M0, opt, where) if j else decompose_union(rec.M0, opt)
            rep = classify_pass(rec, opt, d)
            if not rep.bad_ok:
                out.fail("bad-edges", f"{where}: {len(rep.bad)} bad > {rep.bad_limit}")
            if not rep.charges_ok:
                out.fail("charges-strict" if rec.strict else "charges",
                         f"{where}: " + "; ".join(rep.problems()))
            key = f"{alg}({rec.lambda_u},{rec.lambda_m}{',strict' if rec.strict else ''})"
            out.max_charges[key] = max(out.max_charges.get(key, 0), rep.max_charges)
    return out


@dataclass
class SweepSummary:
    trials: int = 0
    per_class: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)
    examples: dict[str, list[str]] = field(default_factory=dict)
    min_ratio: dict[tuple[str, str], Fraction] = field(default_factory=dict)
    max_charges: dict[tuple[str, str], int] = field(default_factory=dict)

    def add(self, o: TrialOutcome) -> None:
        self.trials += 1
        self.per_class[o.class_label] += 1
        for cat, msg in o.failures:
            self.failures[cat] += 1
            ex = self.examples.setdefault(cat, [])
            if len(ex) < 5:
                ex.append(f"{o.class_label} {o.label}: {msg}")
        for name, r in o.ratios.items():
            key = (name, o.class_label)
            if key not in self.min_ratio or r < self.min_ratio[key]:
                self.min_ratio[key] = r
        for name, c in o.max_charges.items():
            key = (name, o.class_label)
            self.max_charges[key] = max(self.max_charges.get(key, 0), c)

    def count(self, *categories: str) -> int:
        return sum(self.failures[c] for c in categories)


def sweep(trials: int, classes: Iterable[str] = ("bipartite", "triangle-free", "general"),
          seed: int = 0, summary: Optional[SweepSummary] = None) -> SweepSummary:
    """``trials`` instances per class through :func:`check_trial`."""
    summary = summary or SweepSummary()
    for cls in classes:
        for t in range(trials):
            g, label = sweep_instance(cls, t, seed)
            summary.add(check_trial(g, label))
    return summary
