"""Command-line interface: ``kstest2d test`` and ``kstest2d bench``.

Exit status is 0 on success, 2 for unreadable or invalid data and 3 for
bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .bench import BENCH_TESTS, run_bench
from .ff2d import TestOutcome, ff_test
from .samples import SampleError, load_csv

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def report_fields(outcome: TestOutcome) -> dict:
    """Report values as display strings, shared by text and JSON output."""
    fields = {
        "statistic": _fmt(outcome.statistic.d, 6),
        "d1": _fmt(outcome.statistic.d1, 6),
        "d2": _fmt(outcome.statistic.d2, 6),
        "p_value": _fmt(outcome.p_value, 7),
        "method": outcome.method,
        "n1": outcome.n1,
        "n2": outcome.n2,
        "r1": _fmt(outcome.r1, 6),
        "r2": _fmt(outcome.r2, 6),
        "runtime_seconds": _fmt(outcome.runtime_seconds, 4),
    }
    if outcome.method == "bootstrap":
        fields["seed"] = outcome.seed
        fields["n_bootstrap"] = outcome.n_bootstrap
    return fields


def format_json(outcome: TestOutcome) -> str:
    out = {}
    for key, value in report_fields(outcome).items():
        out[key] = float(value) if key in _NUMERIC else value
    return json.dumps(out)


_NUMERIC = {"statistic", "d1", "d2", "p_value", "r1", "r2", "runtime_seconds"}


def format_text(outcome: TestOutcome, name1: str, name2: str) -> str:
    f = report_fields(outcome)
    lines = [
        "      2-D Two-sample Kolmogorov-Smirnov Test",
        "",
        " Fasano-Franceschini Test (1987)",
        f" Data:  {name1} and {name2}",
        f" D-stat = {f['statistic']} (D1 = {f['d1']}, D2 = {f['d2']}), p-value = {f['p_value']}",
        f" Method: {f['method']}"
        + (f" (n_bootstrap = {f['n_bootstrap']}, seed = {f['seed']})" if "seed" in f else ""),
        f" n1 = {f['n1']}, n2 = {f['n2']}, r1 = {f['r1']}, r2 = {f['r2']}",
        f" Run Time (s) = {f['runtime_seconds']}",
    ]
    if outcome.degenerate_r:
        lines.append(
            " Note: a coordinate has zero variance, r was set to 0; "
            "prefer --method bootstrap"
        )
    return "\n".join(lines)


def cmd_test(args) -> int:
    if args.n_bootstrap is not None and args.method == "analytic":
        print("warning: --n-bootstrap is ignored with --method analytic", file=sys.stderr)
    n_boot = 1000 if args.n_bootstrap is None else args.n_bootstrap
    if n_boot < 1 or args.threads < 1 or args.seed < 0:
        print("error: --n-bootstrap and --threads must be >= 1, --seed >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            s1 = load_csv(args.s1, has_header=args.header)
            s2 = load_csv(args.s2, has_header=args.header)
            if len(s1) < 2 or len(s2) < 2:
                raise SampleError("each sample needs at least 2 points")
            outcome = ff_test(
                s1, s2, method=args.method, n_bootstrap=n_boot,
                seed=args.seed, workers=args.threads,
            )
    except SampleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.format == "json":
        print(format_json(outcome))
    else:
        print(format_text(outcome, args.s1, args.s2))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_bench(args) -> int:
    tests = [t.strip() for t in args.tests.split(",") if t.strip()]
    unknown = [t for t in tests if t not in BENCH_TESTS]
    if unknown:
        print(f"error: unknown test(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    if args.replicates < 1 or args.threads < 1 or args.n_bootstrap < 1 or min(args.sizes) < 2:
        print("error: counts must be >= 1 and sizes >= 2", file=sys.stderr)
        return EXIT_USAGE
    report = run_bench(
        tests, args.sizes, replicates=args.replicates, n_bootstrap=args.n_bootstrap,
        workers=args.threads, seed=args.seed,
    )
    sys.stdout.write(report.to_csv())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kstest2d", description="Two-sample 2-D Kolmogorov-Smirnov test")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("test", help="compare two CSV samples")
    t.add_argument("--s1", required=True, help="CSV file for the first sample")
    t.add_argument("--s2", required=True, help="CSV file for the second sample")
    t.add_argument("--method", choices=("analytic", "bootstrap"), default="analytic")
    t.add_argument("--n-bootstrap", type=int, default=None, help="default 1000")
    t.add_argument("--seed", type=int, default=42)
    t.add_argument("--threads", type=int, default=1)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.add_argument("--header", action="store_true", help="skip a header row")
    t.set_defaults(func=cmd_test)

    b = sub.add_parser("bench", help="time the tests over sample sizes, CSV to stdout")
    b.add_argument("--sizes", type=_int_list, default=[10, 100, 1000])
    b.add_argument("--tests", default="ff,peacock")
    b.add_argument("--replicates", type=int, default=10)
    b.add_argument("--n-bootstrap", type=int, default=100)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
