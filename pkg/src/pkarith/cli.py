"""Command-line interface: analyze, roots, scan, core-theorem, lift.

Exit codes: 0 success, 1 not applicable (e.g. no cubic roots exist),
2 usage, 3 modulus overflow, 4 I/O failure.
"""

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import report
from ._version import __version__
from .errors import ModulusOverflow, NoCubicRoots
from .kernel import BACKEND
from .primes import is_prime, odd_primes_in
from .residues import MODULUS_BOUND, PrimePowerModulus
from .subgroups import verify_core_theorem
from .triplets import scan_prime_list

EXIT_OK = 0
EXIT_NOT_APPLICABLE = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_IO = 4

CACHE_ENV_VAR = "PKARITH_CACHE"


class UsageError(Exception):
    """Invalid command-line input; maps to exit code 2."""


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="text for humans, structured for a JSON document",
    )
    sub.add_argument(
        "--signed",
        action="store_true",
        help="render residues as balanced signed values",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pkarith",
        description="Arithmetic mod p^k: units-group structure, cubic roots, "
        "FLT root pairs, and the core triplet scan.",
    )
    parser.add_argument(
        "--version", action="version", version=f"pkarith {__version__} ({BACKEND})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full structure report for one modulus")
    analyze.add_argument("p", type=int, help="odd prime")
    analyze.add_argument("k", type=int, nargs="?", default=2, help="precision, default 2")
    _add_common(analyze)

    roots = sub.add_parser("roots", help="FLT root pairs at the given precision")
    roots.add_argument("p", type=int, help="odd prime")
    roots.add_argument("k", type=int, nargs="?", default=2, help="precision, default 2")
    _add_common(roots)

    scan = sub.add_parser("scan", help="scan a prime range for proper core triplets")
    scan.add_argument("p_min", type=int)
    scan.add_argument("p_max", type=int)
    scan.add_argument("k", type=int, nargs="?", default=2, help="precision, default 2")
    scan.add_argument("--jobs", type=int, default=1, help="concurrent worker processes")
    scan.add_argument(
        "--cache",
        type=Path,
        default=None,
        help=f"JSONL cache path (default: ${CACHE_ENV_VAR})",
    )
    scan.add_argument("--force", action="store_true", help="recompute cached primes")
    _add_common(scan)

    theorem = sub.add_parser("core-theorem", help="verify core subgroup zero sums")
    theorem.add_argument("p", type=int, help="odd prime")
    theorem.add_argument("k", type=int, nargs="?", default=2, help="precision, default 2")
    _add_common(theorem)

    lift = sub.add_parser("lift", help="lift the cubic roots of 1 to higher precision")
    lift.add_argument("p", type=int, help="odd prime, must be 1 mod 6")
    lift.add_argument("from_k", type=int, help="starting precision")
    lift.add_argument("to_k", type=int, help="target precision")
    _add_common(lift)

    return parser


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise UsageError(f"p must be an odd prime >= 3, got {p}")


def _require_precision(k: int, minimum: int = 1) -> None:
    if k < minimum:
        raise UsageError(f"k must be >= {minimum}, got {k}")


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    _require_odd_prime(args.p)
    _require_precision(args.k)
    rep = report.build_analysis(args.p, args.k)
    if args.format == "text":
        _emit(report.analysis_to_text(rep, args.signed))
    else:
        params = {"p": args.p, "k": args.k, "signed": args.signed}
        _emit(report.envelope("analyze", params, report.analysis_to_dict(rep)))
    return EXIT_OK


def _cmd_roots(args) -> int:
    _require_odd_prime(args.p)
    _require_precision(args.k)
    rep = report.build_roots(args.p, args.k)
    if args.format == "text":
        _emit(report.roots_to_text(rep, args.signed))
    else:
        params = {"p": args.p, "k": args.k, "signed": args.signed}
        _emit(report.envelope("roots", params, report.roots_to_dict(rep)))
    return EXIT_OK


def _cmd_core_theorem(args) -> int:
    _require_odd_prime(args.p)
    _require_precision(args.k)
    rep = verify_core_theorem(PrimePowerModulus(args.p, args.k))
    if args.format == "text":
        _emit(report.core_theorem_to_text(rep))
    else:
        params = {"p": args.p, "k": args.k}
        _emit(report.envelope("core-theorem", params, report.core_theorem_to_dict(rep)))
    return EXIT_OK


def _cmd_lift(args) -> int:
    _require_odd_prime(args.p)
    _require_precision(args.from_k)
    if args.to_k < args.from_k:
        raise UsageError(f"to_k {args.to_k} is below from_k {args.from_k}")
    rep = report.build_lift(args.p, args.from_k, args.to_k)
    if args.format == "text":
        _emit(report.lift_to_text(rep, args.signed))
    else:
        params = {"p": args.p, "from_k": args.from_k, "to_k": args.to_k}
        _emit(report.envelope("lift", params, report.lift_to_dict(rep)))
    return EXIT_OK


def _cache_path(args) -> Optional[Path]:
    if args.cache is not None:
        return args.cache
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def _cmd_scan(args) -> int:
    if not 3 <= args.p_min <= args.p_max:
        raise UsageError(f"need 3 <= p_min <= p_max, got [{args.p_min}, {args.p_max}]")
    _require_precision(args.k, minimum=2)
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    # bound-check the raw endpoint before any prime enumeration
    if args.p_max**args.k >= MODULUS_BOUND:
        raise ModulusOverflow(f"{args.p_max}^{args.k} exceeds the 2^63 modulus bound")
    primes = list(odd_primes_in(args.p_min, args.p_max))
    cache_path = _cache_path(args)
    cached = report.load_scan_cache(cache_path) if cache_path else {}
    if args.force:
        to_run = primes
    else:
        to_run = [p for p in primes if (p, args.k) not in cached]
    new_records = scan_prime_list(to_run, args.k, jobs=args.jobs)
    if cache_path is not None and new_records:
        report.append_scan_cache(cache_path, new_records)
    merged = {record.p: record for record in cached.values() if record.k == args.k}
    merged.update({record.p: record for record in new_records})
    records = [merged[p] for p in primes]
    if args.format == "text":
        _emit(report.scan_to_text(records, args.k, args.signed))
    else:
        params = {
            "p_min": args.p_min,
            "p_max": args.p_max,
            "k": args.k,
            "jobs": args.jobs,
        }
        _emit(report.envelope("scan", params, report.scan_to_dict(records)))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "roots": _cmd_roots,
    "scan": _cmd_scan,
    "core-theorem": _cmd_core_theorem,
    "lift": _cmd_lift,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoCubicRoots as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except ModulusOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except json.JSONDecodeError as exc:
        print(f"error: corrupt cache file: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
