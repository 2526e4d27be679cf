"""Single runs and seeded experiment matrices."""

from __future__ import annotations

import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..algorithms.multi_pass import as_fraction
from ..algorithms.registry import ALGORITHMS, REQUIRES, expected_passes, guarantee, run_algorithm
from ..generators import OrderingSpec, apply_ordering, random_instance
from ..graph import GRAPH_CLASSES, GraphError
from ..oracle import exhaustive_max_matching, max_matching, satisfies_class
from ..stream import StreamSource, collect_metrics
from .report import RunReport


class IncompatibleClass(GraphError):
    """The algorithm cannot run on the declared class of the input."""


class TrialError(RuntimeError):
    """A run inside an experiment failed; the message names the trial."""


def check_compatible(algorithm: str, source: StreamSource) -> None:
    if algorithm not in ALGORITHMS:
        raise KeyError(f"unknown algorithm {algorithm!r}; choose from {sorted(ALGORITHMS)}")
    allowed = REQUIRES.get(algorithm)
    if allowed and source.class_label not in allowed:
        raise IncompatibleClass(
            f"{algorithm} needs class {' or '.join(allowed)}, input is {source.class_label}")
    if algorithm == "three-pass-bipartite" and source.sides is None:
        raise IncompatibleClass("three-pass-bipartite needs the side of every vertex")


def run(
    algorithm: str,
    source: StreamSource,
    epsilon=None,
    oracle: bool = True,
    exhaustive: bool = False,
    checked: bool = False,
    seed: Optional[int] = None,
    params: Optional[dict] = None,
) -> RunReport:
    """Run ``algorithm`` on ``source`` and compare with the exact optimum.

    With ``oracle`` off the optimum, ratio and violation check against the
    ratio are skipped. ``exhaustive`` certifies the optimum by exhaustive
    search, which refuses large inputs.
    """
    check_compatible(algorithm, source)
    if algorithm == "multi-pass" and epsilon is None:
        raise ValueError("multi-pass needs --epsilon")
    eps = as_fraction(epsilon) if epsilon is not None else None
    g = source.graph()
    if oracle and not satisfies_class(g):
        raise IncompatibleClass(f"input is declared {source.class_label} but is not")
    source.reset_metrics()
    if params:
        M = ALGORITHMS[algorithm](source, checked=checked, **params)
    else:
        M = run_algorithm(algorithm, source, eps, checked=checked)
    metrics = collect_metrics(source)
    want_passes = expected_passes(algorithm, source.class_label, eps)
    # a proven ratio only covers the algorithm's own parameters
    bound = None if params else guarantee(algorithm, source.class_label, eps)
    optimum = ratio = None
    violation = metrics.passes != want_passes
    if oracle:
        opt = exhaustive_max_matching(g) if exhaustive else max_matching(g)
        optimum = len(opt)
        exact = Fraction(len(M), optimum) if optimum else Fraction(1)
        ratio = float(exact)
        if bound is not None and exact < bound:
            violation = True
    return RunReport(
        algorithm=algorithm,
        class_label=source.class_label,
        n=source.n,
        m=source.m,
        matching_size=len(M),
        passes=metrics.passes,
        expected_passes=want_passes,
        peak_stored_edges=metrics.peak_stored_edges,
        update_ops=metrics.update_ops,
        ordering=source.provenance,
        seed=seed,
        epsilon=str(eps) if eps is not None else None,
        optimum=optimum,
        ratio=ratio,
        guarantee=float(bound) if bound is not None else None,
        guarantee_exact=str(bound) if bound is not None else None,
        violation=violation,
        source=source.digest()[:16],
    )


@dataclass
class ExperimentConfig:
    trials: int = 100
    classes: Sequence[str] = GRAPH_CLASSES
    algorithms: Sequence[str] = tuple(ALGORITHMS)
    sizes: Sequence[int] = (10, 20, 40)
    densities: Sequence[float] = (0.1, 0.2, 0.4)
    seed: int = 0
    epsilon: Optional[float] = 0.1
    checked: bool = False
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)


@dataclass
class Aggregate:
    algorithm: str
    class_label: str
    trials: int
    min_ratio: float
    mean_ratio: float
    max_ratio: float
    guarantee: Optional[float]
    violations: int

    @property
    def advantage(self) -> float:
        return self.min_ratio - 0.5


@dataclass
class ExperimentResult:
    reports: list[RunReport]
    table: list[Aggregate]

    @property
    def violations(self) -> int:
        return sum(r.violation for r in self.reports)

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.reports)


def applicable(algorithm: str, class_label: str) -> bool:
    allowed = REQUIRES.get(algorithm)
    return not allowed or class_label in allowed


def _trial(args) -> list[RunReport]:
    cfg, t, class_label = args
    n = cfg.sizes[t % len(cfg.sizes)]
    density = cfg.densities[(t // len(cfg.sizes)) % len(cfg.densities)]
    seed = cfg.seed * 1_000_003 + t
    g = random_instance(n, density, class_label, seed)
    out = []
    for alg in cfg.algorithms:
        if not applicable(alg, class_label):
            continue
        src = apply_ordering(g, OrderingSpec("random", seed))
        try:
            out.append(run(alg, src, cfg.epsilon if alg == "multi-pass" else None,
                           checked=cfg.checked, seed=seed))
        except Exception as exc:
            raise TrialError(
                f"trial {t} ({class_label}, n={n}, density={density}, seed={seed}, {alg}): {exc}"
            ) from exc
    return out


def experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Run every (trial, class, algorithm) combination and aggregate ratios."""
    jobs = [(cfg, t, c) for t in range(cfg.trials) for c in cfg.classes]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            chunks = list(pool.map(_trial, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        chunks = [_trial(j) for j in jobs]
    reports = [r for chunk in chunks for r in chunk]
    return ExperimentResult(reports, aggregate(reports))


def aggregate(reports: Sequence[RunReport]) -> list[Aggregate]:
    groups: dict[tuple[str, str], list[RunReport]] = {}
    for r in reports:
        groups.setdefault((r.algorithm, r.class_label), []).append(r)
    out = []
    for (alg, cls), rs in sorted(groups.items()):
        ratios = [r.ratio for r in rs if r.ratio is not None]
        out.append(Aggregate(
            alg, cls, len(rs),
            min(ratios, default=float("nan")),
            statistics.fmean(ratios) if ratios else float("nan"),
            max(ratios, default=float("nan")),
            rs[0].guarantee,
            sum(r.violation for r in rs),
        ))
    return out


def render_table(table: Sequence[Aggregate]) -> str:
    head = ("algorithm", "class", "trials", "min", "mean", "max", "advantage", "guarantee", "violations")
    rows = [head]
    for a in table:
        rows.append((
            a.algorithm, a.class_label, str(a.trials),
            f"{a.min_ratio:.4f}", f"{a.mean_ratio:.4f}", f"{a.max_ratio:.4f}",
            f"{a.advantage:+.4f}",
            "-" if a.guarantee is None else f"{a.guarantee:.4f}",
            str(a.violations) if not a.violations else f"{a.violations} FAILURE",
        ))
    widths = [max(len(r[j]) for r in rows) for j in range(len(head))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)
