"""Command-line entry point.

    semimatch run --algorithm two-pass-improved --input graph.txt --order random:7
    semimatch experiment --trials 100 --seed 1 --format table
    semimatch verify --level fast
    semimatch generate --kind tight:alg1 > alg1.txt

Exit codes: 0 success, 1 guarantee or invariant violation, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .algorithms.registry import ALGORITHMS
from .generators import (
    OrderingSpec,
    apply_ordering,
    path_union_instance,
    random_instance,
    tight_instance,
)
from .graph import GRAPH_CLASSES, GraphError
from .harness.io import format_graph, parse_graph_file
from .harness.report import render_report
from .harness.runner import ExperimentConfig, TrialError, experiment, render_table, run
from .harness.verify import LEVELS, verify
from .oracle import OracleLimitError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _ordering(text: str) -> OrderingSpec:
    try:
        return OrderingSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(kind, choices=None):
    def parse(text: str):
        items = [kind(t) for t in text.split(",") if t]
        if choices:
            for t in items:
                if t not in choices:
                    raise argparse.ArgumentTypeError(f"{t!r} not in {sorted(choices)}")
        return items
    return parse


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semimatch", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run one algorithm on a graph file")
    r.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS))
    r.add_argument("--input", required=True, help="graph file (see README for the format)")
    r.add_argument("--order", type=_ordering, default=OrderingSpec(), help="as-given | random:<seed> | m0-first:<seed>")
    r.add_argument("--epsilon", type=float, help="accuracy for multi-pass")
    r.add_argument("--no-oracle", action="store_true", help="skip the exact optimum (large inputs)")
    r.add_argument("--exhaustive", action="store_true", help="certify the optimum by exhaustive search")
    r.add_argument("--checked", action="store_true", help="assert runtime invariants")
    r.add_argument("--seed", type=int, help="recorded in the report")
    r.add_argument("--format", choices=("json", "table"), default="json")

    e = sub.add_parser("experiment", help="seeded random trial matrix")
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--classes", type=_csv(str, GRAPH_CLASSES), default=list(GRAPH_CLASSES))
    e.add_argument("--algorithms", type=_csv(str, ALGORITHMS), default=list(ALGORITHMS))
    e.add_argument("--sizes", type=_csv(int), default=[10, 20, 40])
    e.add_argument("--epsilon", type=float, default=0.1)
    e.add_argument("--checked", action="store_true")
    e.add_argument("--workers", type=int, default=None)
    e.add_argument("--format", choices=("json", "table"), default="table")
    e.add_argument("--output", help="also write JSON lines here")

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--level", choices=sorted(LEVELS), default="fast")
    v.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("generate", help="write an instance in the graph file format")
    g.add_argument("--kind", required=True,
                   help="random | path-union | tight:alg1 | tight:alg4 | tight:esfandiari:<k>")
    g.add_argument("--n", type=int, default=20)
    g.add_argument("--density", type=float, default=0.2)
    g.add_argument("--class", dest="class_label", choices=GRAPH_CLASSES, default="general")
    g.add_argument("--paths", type=_csv(int), default=[3], help="path lengths for path-union, e.g. 3,3,5")
    g.add_argument("--shared", type=int, default=0, help="shared edges for path-union")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--order", type=_ordering, default=OrderingSpec())
    return ap


def cmd_run(args) -> int:
    g = parse_graph_file(args.input)
    src = apply_ordering(g, args.order)
    report = run(args.algorithm, src, args.epsilon, oracle=not args.no_oracle,
                 exhaustive=args.exhaustive, checked=args.checked, seed=args.seed)
    print(report.to_json() if args.format == "json" else render_report(report))
    return EXIT_VIOLATION if report.violation else EXIT_OK


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        trials=args.trials, classes=args.classes, algorithms=args.algorithms,
        sizes=args.sizes, seed=args.seed, epsilon=args.epsilon, checked=args.checked,
    )
    if args.workers is not None:
        cfg.workers = args.workers
    result = experiment(cfg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(result.jsonl())
    if args.format == "json":
        sys.stdout.write(result.jsonl())
    else:
        print(render_table(result.table))
    return EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_verify(args) -> int:
    summary = verify(args.level, args.seed)
    print(summary.render())
    return EXIT_OK if summary.passed else EXIT_VIOLATION


def cmd_generate(args) -> int:
    kind = args.kind
    comment = None
    if kind == "random":
        g = random_instance(args.n, args.density, args.class_label, args.seed)
        comment = f"random n={args.n} density={args.density} class={args.class_label} seed={args.seed}"
    elif kind == "path-union":
        k_i: dict[int, int] = {}
        for i in args.paths:
            k_i[i] = k_i.get(i, 0) + 1
        g, _ = path_union_instance(args.shared, k_i, args.seed)
        comment = f"path union shared={args.shared} paths={args.paths} seed={args.seed}; base edges first"
    elif kind.startswith("tight:"):
        ti = tight_instance(kind.split(":", 1)[1])
        g = ti.graph.with_edges(ti.ordering)
        comment = (f"tight instance {ti.name}: {ti.target_algorithm} returns {ti.expected_M}, "
                   f"optimum {ti.expected_Mstar}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    src = apply_ordering(g, args.order)
    sys.stdout.write(format_graph(g, src.edge_list(), comment))
    return EXIT_OK


COMMANDS = {"run": cmd_run, "experiment": cmd_experiment, "verify": cmd_verify, "generate": cmd_generate}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GraphError, OracleLimitError, ValueError, KeyError, OSError) as exc:
        print(f"semimatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TrialError as exc:
        print(f"semimatch: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
