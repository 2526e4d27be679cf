"""The nine acceptance criteria, one test each (criterion 6 in two parts).

Each test records a one-line PASS/FAIL verdict, printed in the terminal
summary and, when run as a script, on stdout.
"""

import math
import time
from fractions import Fraction

import pytest

from semimatch import open_source
from semimatch.algorithms import ALGORITHMS, greedy_maximal_matching, two_pass_improved
from semimatch.algorithms.registry import FIXED_PASSES, REQUIRES, run_algorithm
from semimatch.generators import random_instance, realizable_augmentations, tight_instance
from semimatch.harness.sweep import SWEEP_ALGORITHMS, SWEEP_EPSILONS, sweep
from semimatch.harness.verify import oracle_certification
from semimatch.oracle import alpha_schedule, max_matching, satisfies_class, schedule_from_caps
from semimatch.stream import collect_metrics

from conftest import ACCEPTANCE_LINES

CLASSES = ("bipartite", "triangle-free", "general")
SWEEP_TRIALS = 10_000
SWEEP_SEED = 0


def record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[k] = line
    print(line)


@pytest.fixture(scope="module")
def swept():
    start = time.perf_counter()
    summary = sweep(SWEEP_TRIALS, CLASSES, seed=SWEEP_SEED)
    return summary, time.perf_counter() - start


def test_criterion_1_tight_examples():
    results = []
    for which in ("alg1", "alg4"):
        ti = tight_instance(which)
        M = ALGORITHMS[ti.target_algorithm](ti.source(), checked=True)
        opt = max_matching(ti.graph)
        results.append((which, len(M), len(opt), Fraction(len(M), len(opt))))
    ok = all(r[1:] == (3, 5, Fraction(3, 5)) for r in results)
    record(1, ok, "; ".join(f"{w}: {m}/{o} = {r}" for w, m, o, r in results))
    assert ok


def test_criterion_2_guarantee_sweep(swept):
    summary, seconds = swept
    per_class = dict(summary.per_class)
    bad = summary.failures["guarantee"]
    worst = sorted(summary.min_ratio.items(), key=lambda kv: kv[1])[:3]
    ok = bad == 0 and all(per_class.get(c, 0) >= SWEEP_TRIALS for c in CLASSES)
    record(2, ok, f"{summary.trials} trials {per_class}, {bad} violations, lowest ratios "
                  + ", ".join(f"{a}/{c}={float(r):.4f}" for (a, c), r in worst)
                  + f" ({seconds:.0f}s)")
    assert ok, summary.examples.get("guarantee")
    # every algorithm applicable to each class was exercised
    for cls in CLASSES:
        for alg in SWEEP_ALGORITHMS[cls]:
            names = [alg] if alg != "multi-pass" else [f"multi-pass[{e}]" for e in SWEEP_EPSILONS]
            for name in names:
                assert (name, cls) in summary.min_ratio


def test_criterion_3_pass_accounting(swept):
    summary, _ = swept
    rows = []
    g_tf = random_instance(24, 0.2, "triangle-free", 1)
    g_gen = random_instance(24, 0.2, "general", 1)
    for text in ("0.2", "0.1", "0.05", "0.02"):
        eps = Fraction(text)
        for g, coeff in ((g_tf, 2), (g_gen, 4)):
            src = open_source(g)
            run_algorithm("multi-pass", src, float(text))
            want = math.ceil(Fraction(coeff) / (3 * eps))
            rows.append((text, g.class_label, collect_metrics(src).passes, want))
    fixed = []
    for alg, want in FIXED_PASSES.items():
        g = g_gen if not REQUIRES.get(alg) else random_instance(24, 0.2, "bipartite", 1)
        src = open_source(g)
        run_algorithm(alg, src)
        fixed.append((alg, collect_metrics(src).passes, want))
    spot = {(r[0], r[1]): r[2] for r in rows}
    ok = (all(r[2] == r[3] for r in rows) and all(f[1] == f[2] for f in fixed)
          and spot[("0.1", "triangle-free")] == 7 and spot[("0.1", "general")] == 14
          and summary.failures["passes"] == 0)
    record(3, ok, "multi-pass " + ", ".join(f"eps={e} {c}: {p}" for e, c, p, _ in rows)
           + "; fixed-pass algorithms 1/2/3 as declared; sweep pass mismatches "
           + str(summary.failures["passes"]))
    assert ok


def test_criterion_4_recurrence():
    s_tf = alpha_schedule(Fraction(1, 10), "triangle-free", p=200)
    s_gen = alpha_schedule(Fraction(1, 10), "general", p=200)
    alpha2 = s_tf.alphas[1]
    routes = list(s_tf.alphas) == schedule_from_caps(200, True) and \
        list(s_gen.alphas) == schedule_from_caps(200, False)
    ok = alpha2 == Fraction(1, 16) and s_tf.bound_holds() and s_gen.bound_holds() and routes
    record(4, ok, f"alpha_2 = {alpha2}; bounds hold for i <= 200 in both classes (exact rationals); "
                  f"recurrence and per-pass caps agree: {routes}")
    assert ok


def test_criterion_5_runtime_invariants(swept):
    summary, _ = swept
    bad = summary.count("invariant", "storage")
    record(5, bad == 0, f"{summary.trials} checked trials, {summary.failures['invariant']} invariant "
                        f"failures, {summary.failures['storage']} storage failures")
    assert bad == 0, summary.examples.get("invariant")


def test_criterion_6_diagnostics_non_strict(swept):
    summary, _ = swept
    bad = summary.count("identity", "augmentable", "bad-edges", "charges")
    detail = (f"augmentable-edge bounds {summary.failures['augmentable']}, union identity "
              f"{summary.failures['identity']}, bad-edge bound {summary.failures['bad-edges']}, "
              f"charges (non-strict) {summary.failures['charges']} failures")
    # the strict half is reported by the next test
    ACCEPTANCE_LINES[6] = f"criterion 6: {'PASS' if bad == 0 else 'FAIL'}  {detail}"
    assert bad == 0


@pytest.mark.xfail(strict=True, reason="strict-gate charge bound 2*lambda_U-2 does not hold; "
                                       "see the strict counterexample in test_oracle")
def test_criterion_6_diagnostics_strict(swept):
    summary, _ = swept
    bad = summary.failures["charges-strict"]
    worst = {k: v for k, v in summary.max_charges.items() if "strict" in k[0]}
    base = ACCEPTANCE_LINES.get(6, "criterion 6:")
    ok = bad == 0 and "FAIL" not in base
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES[6] = (base.replace("PASS", verdict, 1)
                           + f"; strict-gate charges {bad} failures, max charges per good edge "
                           + ", ".join(f"{a}/{c}={m}" for (a, c), m in sorted(worst.items())))
    print(ACCEPTANCE_LINES[6])
    assert ok, summary.examples.get("charges-strict")


def test_criterion_7_oracle_certification():
    bad, count = oracle_certification(1000, seed=7)
    record(7, bad == 0, f"{bad} mismatches between exact methods and exhaustive search over {count} graphs")
    assert bad == 0


def test_criterion_8_resource_scaling(swept):
    summary, _ = swept
    ratios = {}
    for n in (100, 1000, 10_000):
        g = random_instance(n, 8 / (n - 1), "general", n)
        src = open_source(g)
        two_pass_improved(src)
        metrics = collect_metrics(src)
        ratios[n] = metrics.ops_per_edge_pass
        assert metrics.peak_stored_edges <= 3 * n
    spread = max(ratios.values()) / min(ratios.values())
    storage = summary.failures["storage"]
    ok = spread < 2 and storage == 0
    record(8, ok, "ops per edge-pass " + ", ".join(f"n={n}: {r:.3f}" for n, r in ratios.items())
                  + f" (spread {spread:.2f}x); peak stored edges above 3n in {storage} sweep trials")
    assert ok


def test_criterion_9_hub_instance():
    ti = tight_instance("esfandiari:3")
    tf = satisfies_class(ti.graph, "triangle-free")
    M0 = greedy_maximal_matching(ti.ordering, ti.graph.n)
    realizable = realizable_augmentations(ti.base, ti.support, ti.graph.n)
    ok = tf and len(M0) == 7 and set(M0.edges()) == set(ti.base) and realizable <= 1
    record(9, ok, f"triangle-free={tf}, matched edges {len(M0)}, realizable 3-augmentations "
                  f"from the support structure {realizable}")
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
