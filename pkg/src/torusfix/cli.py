"""
Command line entry point.

    torusfix count dc --n 5
    torusfix seq e-target --max 4 --format csv
    torusfix verify sjostrand --n 3
    torusfix conjecture sp --max 4

Exit status: 0 when every completed check passes, 1 on any failure,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .cache import CACHE_ENV, ResultCache, cache_lookup_store
from .errors import DomainError
from .report import RENDERERS, Deadline, FAIL
from .suites import COUNTERS, SEQUENCES, VERIFIERS, conjecture_sp, count_report, seq_report

DEFAULT_BUDGET = 300.0


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(RENDERERS), default="table")
    common.add_argument("--cache-dir", default=None,
                        help=f"result cache directory (default: ${CACHE_ENV}, else none)")
    common.add_argument("--budget-seconds", type=float, default=DEFAULT_BUDGET)
    common.add_argument("--timing", action="store_true", help="include elapsed time in the output")

    parser = argparse.ArgumentParser(
        prog="torusfix",
        description="Exact counts and verification suites for Dellac configurations "
                    "and Bruhat intervals below tau_n.",
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="{count,seq,verify,conjecture}")

    p = groups.add_parser("count", parents=[common], help="count one family")
    p.add_argument("target", choices=list(COUNTERS))
    p.add_argument("--n", type=_positive, required=True)

    p = groups.add_parser("seq", parents=[common], help="integer sequences from the polynomial recursions")
    p.add_argument("target", choices=list(SEQUENCES))
    p.add_argument("--max", type=_positive, required=True)

    p = groups.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("target", choices=list(VERIFIERS))
    p.add_argument("--n", type=_positive, required=True)

    p = groups.add_parser("conjecture", parents=[common], help="check a conjecture")
    p.add_argument("target", choices=["sp"])
    p.add_argument("--max", type=_positive, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.group in ("count", "verify") and args.n < 1:
        parser.error("--n must be at least 1")
    if args.group == "conjecture" and args.max < 1:
        parser.error("--max must be at least 1")
    if args.group == "seq" and args.max < SEQUENCES[args.target][0]:
        parser.error(f"--max must be at least {SEQUENCES[args.target][0]}")
    if args.budget_seconds <= 0:
        parser.error("--budget-seconds must be positive")

    deadline = Deadline(args.budget_seconds)
    command = f"{args.group} {args.target}"
    if args.group == "count":
        params, kind = {"n": args.n}, "count"
        factory = lambda: count_report(args.target, args.n, deadline)  # noqa: E731
    elif args.group == "seq":
        params, kind = {"max": args.max}, "seq"
        factory = lambda: seq_report(args.target, args.max, deadline)  # noqa: E731
    elif args.group == "verify":
        params, kind = {"n": args.n}, "verify"
        factory = lambda: VERIFIERS[args.target](args.n, deadline)  # noqa: E731
    else:
        params, kind = {"max": args.max}, "verify"
        factory = lambda: conjecture_sp(args.max, deadline)  # noqa: E731

    cache = ResultCache(args.cache_dir or os.environ.get(CACHE_ENV) or None)
    try:
        report, hit = cache_lookup_store(cache, factory, command, params, kind)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"torusfix: error: {exc}", file=sys.stderr)
        return 2
    if hit:
        print(f"cache hit: {command} {params}", file=sys.stderr)

    print(RENDERERS[args.format](report, elapsed=args.timing))
    return 1 if report.status == FAIL else 0


if __name__ == "__main__":
    sys.exit(main())
