"""Command line front end.

Subcommands: sets, membership, classify, flanked, flankers, oracle, hl-scan.
Results go to stdout (or --output FILE); progress notes go to stderr. Exit
codes: 0 success, 1 usage or malformed-input error, 2 computation failure
(factoring budget exhausted, cap exceeded), 3 cross-check failure (oracle
MISMATCH, broken pair-scan mechanism). No environment variables are read.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .arith import DEFAULT_FACTOR_BUDGET, is_prime
from .congruence import (
    DEFAULT_ORACLE_CAP,
    CongruenceInstance,
    brute_force_exceptional_set,
    satisfies_congruence,
)
from .errors import (
    BadShape,
    CapExceeded,
    FactorizationTimeout,
    MechanismViolation,
    NotCoprime,
    NotPrime,
)
from .exceptional import DEFAULT_FAST_PATH_CAP, exceptional_set, membership_2p
from .flanking import (
    FlankingVariant,
    classify_flanking,
    flanked_values_scan,
    flanker_candidates,
    hl_pair_scan,
)
from .report import render_flanked, render_hl, render_sets


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse's default of 2 is reserved for
    # computation failures here)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="flanksets", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "latex"), default="csv",
                        help="table output format (default csv)")
    common.add_argument("--output", "-o", metavar="FILE", default=None,
                        help="write the table to FILE instead of stdout")
    common.add_argument("--fast-path-cap", type=_nonnegative, default=DEFAULT_FAST_PATH_CAP,
                        help=f"largest index the structural route accepts (default {DEFAULT_FAST_PATH_CAP})")
    common.add_argument("--oracle-cap", type=_nonnegative, default=DEFAULT_ORACLE_CAP,
                        help=f"largest index the brute-force route accepts (default {DEFAULT_ORACLE_CAP})")
    common.add_argument("--factor-budget", type=_positive, default=DEFAULT_FACTOR_BUDGET,
                        help=f"rho iteration budget per factorization (default {DEFAULT_FACTOR_BUDGET})")
    common.add_argument("--workers", type=_positive, default=os.cpu_count() or 1,
                        help="processes for partitionable scans (default: available cores)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sets", parents=[common], help="enumerate the sets for k = 0..max-k")
    p.add_argument("--max-k", type=_nonnegative, default=35)

    p = sub.add_parser("membership", parents=[common], help="is n a member at index k?")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--k", type=_nonnegative, required=True)

    p = sub.add_parser("classify", parents=[common], help="flanking trichotomy for a prime p == 3 (mod 4)")
    p.add_argument("--p", type=_nonnegative, required=True)

    p = sub.add_parser("flanked", parents=[common], help="scan primes p <= max-p for the flanked class")
    p.add_argument("--max-p", type=_nonnegative, default=10000)

    p = sub.add_parser("flankers", parents=[common], help="complete flanker candidates at a distance")
    p.add_argument("--distance", type=_positive, required=True)
    p.add_argument("--include-trivial", action="store_true",
                   help="also list the mechanical flanker p1 = 3 (i.e. 6; 4 has no p1 form)")

    p = sub.add_parser("oracle", parents=[common], help="cross-check fast path against brute force at one k")
    p.add_argument("--k", type=_nonnegative, required=True)

    p = sub.add_parser("hl-scan", parents=[common], help="prime pairs 8n+5, 16n+11 with mechanism check")
    p.add_argument("--max-n", type=_nonnegative, required=True)

    return parser


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_sets(args) -> int:
    sets = [
        exceptional_set(k, cap=args.fast_path_cap, budget=args.factor_budget)
        for k in range(args.max_k + 1)
    ]
    _emit(render_sets(sets, args.format), args)
    return 0


def _cmd_membership(args) -> int:
    n, k = args.n, args.k
    if n < 3:
        raise ValueError(f"membership is defined for n >= 3, got {n}")
    if n == 4:
        line = "true n=4 (member at every index)"
    elif is_prime(n):
        line = f"false n={n} (prime; members are composite)"
    elif n % 2 == 0 and n >= 6 and n // 2 % 2 and is_prime(n // 2):
        p = n // 2
        r = (p - 1) // 2
        member = membership_2p(p, k)
        if p % 4 == 3:
            residue = pow(2, k + 1, r)
            line = f"{str(member).lower()} n={n} p={p} r={r} residue={residue} target={r - 1}"
        else:
            line = f"false n={n} p={p} (p == 1 mod 4)"
    else:
        member = satisfies_congruence(CongruenceInstance(n, k))
        line = f"{str(member).lower()} n={n} (direct congruence evaluation)"
    _emit(line + "\n", args)
    return 0


def _cmd_classify(args) -> int:
    fc = classify_flanking(args.p, budget=args.factor_budget)
    r = (args.p - 1) // 2
    if fc.pattern is None:
        line = f"{fc.variant.value} p={args.p} r={r}"
    else:
        pat = fc.pattern
        line = (
            f"{fc.variant.value} p={args.p} r={r} "
            f"t0={pat.t0} k_min={pat.k_min} period={pat.period}"
        )
    _emit(line + "\n", args)
    return 0


def _cmd_flanked(args) -> int:
    rows = flanked_values_scan(args.max_p, budget=args.factor_budget)
    _emit(render_flanked(rows, args.format), args)
    return 0


def _cmd_flankers(args) -> int:
    candidates = flanker_candidates(args.distance, budget=args.factor_budget)
    if not args.include_trivial:
        candidates = [c for c in candidates if c.p1 != 3]
    if args.format == "csv":
        lines = ["p1,r1,distance"]
        lines += [f"{c.p1},{c.r1},{c.distance}" for c in candidates]
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        text = json.dumps(
            [{"p1": c.p1, "r1": c.r1, "distance": c.distance} for c in candidates],
            indent=2,
        ) + "\n"
    else:
        rows = [f"{c.p1} & {c.r1} & {c.distance} \\\\" for c in candidates]
        text = "\n".join(rows) + ("\n" if rows else "")
    _emit(text, args)
    return 0


def _cmd_oracle(args) -> int:
    bound = 2 ** (args.k + 3) + 6
    print(f"oracle scan: k={args.k}, n in [4, {bound}]", file=sys.stderr)
    slow = brute_force_exceptional_set(args.k, cap=args.oracle_cap, workers=args.workers)
    fast = list(
        exceptional_set(args.k, cap=args.fast_path_cap, budget=args.factor_budget).members
    )
    if slow == fast:
        _emit(f"MATCH k={args.k} members={';'.join(map(str, fast))}\n", args)
        return 0
    fast_only = sorted(set(fast) - set(slow))
    slow_only = sorted(set(slow) - set(fast))
    _emit(
        f"MISMATCH k={args.k} "
        f"fast_only={';'.join(map(str, fast_only))} "
        f"oracle_only={';'.join(map(str, slow_only))}\n",
        args,
    )
    return 3


def _cmd_hl_scan(args) -> int:
    rows = hl_pair_scan(args.max_n, budget=args.factor_budget)
    _emit(render_hl(rows, args.format), args)
    return 0


_HANDLERS = {
    "sets": _cmd_sets,
    "membership": _cmd_membership,
    "classify": _cmd_classify,
    "flanked": _cmd_flanked,
    "flankers": _cmd_flankers,
    "oracle": _cmd_oracle,
    "hl-scan": _cmd_hl_scan,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (FactorizationTimeout, CapExceeded) as exc:
        print(f"flanksets: computation failed: {exc}", file=sys.stderr)
        return 2
    except MechanismViolation as exc:
        print(f"flanksets: cross-check failed: {exc}", file=sys.stderr)
        return 3
    except (NotPrime, NotCoprime, BadShape, ValueError) as exc:
        print(f"flanksets: error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
