"""Command-line interface: analyze, verify, table.

Exit codes: 0 success, 1 at least one check failed, 2 usage or I/O error.
The element cap honors STARCOMM_MAX_ORDER; the --max-order flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .backend import backend_name
from .checks import FAIL, SuiteConfig, ALL_CHECKS, measure_conciseness, run_suite, summarize
from .corpus import CorpusConfig, DEFAULT_CORPUS_MAX_ORDER, builtin, load_group
from .errors import GroupError
from .group import resolve_element_cap
from .star import DELTA, GAMMA, star_set, star_subgroup


def _resolve_max_order(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("STARCOMM_MAX_ORDER")
    if env:
        return int(env)
    return DEFAULT_CORPUS_MAX_ORDER


def _load_single_group(args):
    if args.group:
        return load_group(args.group, cap=resolve_element_cap(None))
    return builtin(args.builtin, cap=resolve_element_cap(None))


def _corpus_config(args, suite: tuple[str, ...] | None = None) -> CorpusConfig:
    return CorpusConfig(
        directory=args.corpus,
        max_order=_resolve_max_order(args.max_order),
        seed=getattr(args, "seed", 0),
        k_max=getattr(args, "k_max", 3),
        suite=suite,
    )


def _cmd_analyze(args) -> int:
    g = _load_single_group(args)
    variant = GAMMA if args.variant == "gamma" else DELTA
    start = 1 if variant == GAMMA else 0
    if args.json:
        levels = []
        for k in range(start, args.k + 1):
            values = star_set(g, variant, k)
            subgroup = star_subgroup(g, variant, k)
            levels.append(
                {
                    "k": k,
                    "m": values.size,
                    "subgroup_order": subgroup.order,
                    "commutators": [list(p.images) for p in values.elements()],
                    "commutators_cycles": [p.cycle_string() for p in values.elements()],
                }
            )
        payload = {
            "group_id": g.group_id,
            "order": g.order,
            "variant": args.variant,
            "levels": levels,
        }
        sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    else:
        print(f"group {g.group_id}  order {g.order}  variant {args.variant}")
        for k in range(start, args.k + 1):
            values = star_set(g, variant, k)
            subgroup = star_subgroup(g, variant, k)
            print(f"k={k} m={values.size} subgroup_order={subgroup.order}")
    return 0


def _cmd_verify(args) -> int:
    from .report import emit, reports_to_csv, reports_to_json

    if args.suite == "all":
        check_ids = None
    else:
        check_ids = tuple(c.strip() for c in args.suite.split(",") if c.strip())
    corpus = _corpus_config(args, suite=check_ids)
    reports = run_suite(
        corpus.groups(), corpus.suite, SuiteConfig(seed=corpus.seed, k_max=corpus.k_max)
    )
    text = reports_to_csv(reports) if args.format == "csv" else reports_to_json(reports)
    emit(text, args.out)
    tally = summarize(reports)
    for check_id in sorted(tally):
        t = tally[check_id]
        total = sum(t.values())
        hit = total - t["skipped"]
        print(
            f"{check_id}: pass={t['pass']} fail={t['fail']} skipped={t['skipped']} "
            f"hypothesis-hit-rate={hit}/{total}",
            file=sys.stderr,
        )
    failures = sum(1 for r in reports if r.status == FAIL)
    if failures:
        print(f"{failures} check instance(s) FAILED", file=sys.stderr)
        return 1
    return 0


def _cmd_table(args) -> int:
    from .report import emit, table_to_csv

    corpus = _corpus_config(args)
    variant = GAMMA if args.variant == "gamma" else DELTA
    rows = []
    for g in corpus.groups():
        for row in measure_conciseness(g, variant, corpus.k_max):
            rows.append((g.group_id, g.order, row))
    emit(table_to_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starcomm",
        description=(
            "Coprime commutator sets of small finite groups: analysis, "
            f"verification suites, and measurement tables (kernels: {backend_name()})."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="star set sizes and subgroup orders per level")
    src = analyze.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="path to a JSON group file")
    src.add_argument("--builtin", help="builtin spec, e.g. symmetric:4 or cyclic:2*cyclic:3")
    analyze.add_argument("--variant", choices=["gamma", "delta"], required=True)
    analyze.add_argument("--k", type=int, required=True, help="highest level to compute")
    analyze.add_argument("--json", action="store_true", help="emit JSON with the value sets")
    analyze.set_defaults(func=_cmd_analyze)

    verify = sub.add_parser("verify", help="run verification suites over a corpus")
    verify.add_argument(
        "--suite",
        default="all",
        help="'all' or comma-separated check ids: " + ", ".join(ALL_CHECKS),
    )
    corpus_src = verify.add_mutually_exclusive_group(required=True)
    corpus_src.add_argument("--corpus", help="directory of JSON group files")
    corpus_src.add_argument(
        "--builtin-corpus", action="store_true", help="use the built-in corpus"
    )
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-order", type=int, default=None)
    verify.add_argument("--k-max", type=int, default=3)
    verify.add_argument("--format", choices=["csv", "json"], default="csv")
    verify.add_argument("--out", default=None, help="output path (default stdout)")
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="emit the conciseness measurement table")
    table.add_argument("--variant", choices=["gamma", "delta"], required=True)
    table.add_argument("--k-max", type=int, required=True)
    corpus_src = table.add_mutually_exclusive_group(required=True)
    corpus_src.add_argument("--corpus", help="directory of JSON group files")
    corpus_src.add_argument(
        "--builtin-corpus", action="store_true", help="use the built-in corpus"
    )
    table.add_argument("--max-order", type=int, default=None)
    table.add_argument("--format", choices=["csv"], default="csv")
    table.add_argument("--out", default=None)
    table.set_defaults(func=_cmd_table)
    return parser


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GroupError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
