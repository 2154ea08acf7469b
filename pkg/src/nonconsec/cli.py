"""
Command-line front end.

    nonconsec count --pattern 321 --n 7 --method recurrence
    nonconsec enumerate "E(4,1)"
    nonconsec verify --pattern 132 --max-n 9
    nonconsec bijection decompose132 --perm 10,9,5,7,6,8,2,4,3,1
    nonconsec series GF132-closed --terms 9

Exit status: 0 success, 1 verification mismatch or internal inconsistency,
2 usage error, 3 input outside the domain of the operation.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from nonconsec import __version__, bijections, counting, series
from nonconsec.errors import InconsistencyError, InvalidInputError, OracleCeilingError
from nonconsec.oracle import DEFAULT_CEILING, ClassLabel, iter_class
from nonconsec.perm_core import format_perm, parse_perm
from nonconsec.verify import METHODS, PATTERNS, count_by_method, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

BIJECTIONS = ("swap21", "b-to-d", "d-to-b", "split321", "unsplit321", "decompose132", "compose132")
SERIES = ("catalan", "D321", "A321", "GF132-composed", "GF132-closed")


def dumps(record: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list_arg(text: str) -> tuple[int, ...]:
    text = "".join(text.split())
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _label_arg(text: str) -> ClassLabel:
    try:
        return ClassLabel.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON record instead of plain text")
    common.add_argument("--oracle-ceiling", type=_nonneg, metavar="N", default=argparse.SUPPRESS,
                        help=f"largest n the exhaustive oracle may enumerate (default {DEFAULT_CEILING})")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress stdout; rely on the exit status")
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS,
                        help="also write the JSON record to FILE")

    parser = argparse.ArgumentParser(
        prog="nonconsec", parents=[common],
        description="Count, enumerate and biject permutations avoiding nonconsecutive 21, 321 or 132.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count avoiders of size n")
    p.add_argument("--pattern", required=True, choices=sorted(PATTERNS))
    p.add_argument("--n", required=True, type=_nonneg)
    p.add_argument("--method", default="formula", choices=METHODS)

    p = sub.add_parser("enumerate", parents=[common], help="list a class such as A(5), B(4), E(10,2)")
    p.add_argument("label", type=_label_arg, metavar="CLASS")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", parents=[common], help="cross-check every method for n <= max-n")
    p.add_argument("--pattern", required=True, choices=sorted(PATTERNS))
    p.add_argument("--max-n", required=True, type=_nonneg)

    p = sub.add_parser("bijection", parents=[common], help="apply one of the structural bijections")
    p.add_argument("name", choices=BIJECTIONS)
    p.add_argument("--perm", type=_perm_arg, help="input permutation, e.g. 10,9,5,7,6,8,2,4,3,1")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--set", type=_int_list_arg, dest="positions", help="positions, e.g. 4,8")
    p.add_argument("--sigma", type=_perm_arg)
    p.add_argument("--tau", type=_perm_arg)
    p.add_argument("--roundtrip", action="store_true", help="apply the inverse and confirm identity")

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument("which", choices=SERIES)
    p.add_argument("--terms", required=True, type=_positive)
    return parser


def _record(command: str, params: dict, result, methods: list[str]) -> dict:
    return {
        "command": command,
        "params": params,
        "result": result,
        "methods": methods,
        "version": __version__,
    }


def cmd_count(args, ceiling: int) -> tuple[dict, str, int]:
    if args.pattern == "321" and args.method == "formula":
        raise _UsageError("pattern 321 has no closed formula; use --method recurrence, gf or oracle")
    value = count_by_method(args.pattern, args.n, args.method, ceiling)
    record = _record("count", {"pattern": args.pattern, "n": args.n, "method": args.method},
                     {"count": str(value)}, [args.method])
    return record, f"{value}\n", EXIT_OK


def cmd_enumerate(args, ceiling: int) -> tuple[dict, str, int]:
    perms = [format_perm(p) for p in iter_class(args.label, ceiling)]
    record = _record("enumerate", {"class": str(args.label)},
                     {"count": str(len(perms)), "permutations": perms}, ["oracle"])
    if args.format == "json":
        args.json = True
    return record, "".join(f"{p}\n" for p in perms), EXIT_OK


def cmd_verify(args, ceiling: int) -> tuple[dict, str, int]:
    report = verify(args.pattern, args.max_n, ceiling)
    checks = [c.as_dict() for c in report.checks]
    record = _record("verify", {"pattern": args.pattern, "max_n": args.max_n},
                     {"all_pass": report.all_pass, "checks": checks},
                     sorted({m for c in report.checks for m in c.values}))
    lines = []
    for c in report.checks:
        shown = ", ".join(f"{k}={v}" for k, v in c.values.items())
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  n={c.n:<3d} {c.identity}: {shown}")
    failed = sum(not c.passed for c in report.checks)
    lines.append(f"{len(report.checks) - failed}/{len(report.checks)} checks passed")
    return record, "\n".join(lines) + "\n", EXIT_OK if report.all_pass else EXIT_MISMATCH


class _UsageError(Exception):
    pass


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('positions', 'set')}" for n in names if getattr(args, n) is None]
    if missing:
        raise _UsageError(f"bijection {args.name} requires {', '.join(missing)}")


def cmd_bijection(args, ceiling: int) -> tuple[dict, str, int]:
    name = args.name
    params: dict = {"name": name}
    result: dict = {}
    roundtrip_ok = None

    if name == "swap21":
        if args.perm is not None:
            params["perm"] = format_perm(args.perm)
            s = bijections.perm_to_scattered(args.perm)
            result["set"] = list(s.elements)
            if args.roundtrip:
                roundtrip_ok = bijections.scattered_to_perm(len(args.perm), s) == args.perm
            text = f"{format_perm(s.elements)}\n"
        else:
            _need(args, "n", "positions")
            params.update(n=args.n, set=list(args.positions))
            p = bijections.scattered_to_perm(args.n, args.positions)
            result["perm"] = format_perm(p)
            if args.roundtrip:
                roundtrip_ok = bijections.perm_to_scattered(p).elements == tuple(sorted(args.positions))
            text = f"{format_perm(p)}\n"
    elif name in ("b-to-d", "d-to-b", "split321", "decompose132"):
        _need(args, "perm")
        params["perm"] = format_perm(args.perm)
        if name == "b-to-d":
            q = bijections.b_to_d(args.perm)
            result["perm"] = format_perm(q)
            roundtrip_ok = bijections.d_to_b(q) == args.perm if args.roundtrip else None
            text = f"{format_perm(q)}\n"
        elif name == "d-to-b":
            q = bijections.d_to_b(args.perm)
            result["perm"] = format_perm(q)
            roundtrip_ok = bijections.b_to_d(q) == args.perm if args.roundtrip else None
            text = f"{format_perm(q)}\n"
        elif name == "split321":
            pair = bijections.split_321(args.perm)
            result.update(sigma=format_perm(pair.sigma), tau=format_perm(pair.tau), k=len(pair.sigma))
            if args.roundtrip:
                roundtrip_ok = bijections.unsplit_321(pair.sigma, pair.tau) == args.perm
            text = f"sigma: {format_perm(pair.sigma)}\ntau: {format_perm(pair.tau)}\n"
        else:
            s, q = bijections.decompose_132(args.perm)
            result.update(positions=list(s.elements), remainder=format_perm(q))
            if args.roundtrip:
                roundtrip_ok = bijections.compose_132(len(args.perm), s, q) == args.perm
            text = f"positions: {format_perm(s.elements)}\nremainder: {format_perm(q)}\n"
    elif name == "unsplit321":
        _need(args, "sigma", "tau")
        params.update(sigma=format_perm(args.sigma), tau=format_perm(args.tau))
        p = bijections.unsplit_321(args.sigma, args.tau)
        result["perm"] = format_perm(p)
        if args.roundtrip:
            pair = bijections.split_321(p)
            roundtrip_ok = (pair.sigma, pair.tau) == (args.sigma, args.tau)
        text = f"{format_perm(p)}\n"
    else:
        _need(args, "n", "positions", "perm")
        params.update(n=args.n, set=list(args.positions), perm=format_perm(args.perm))
        p = bijections.compose_132(args.n, args.positions, args.perm)
        result["perm"] = format_perm(p)
        if args.roundtrip:
            s, q = bijections.decompose_132(p)
            roundtrip_ok = s.elements == tuple(sorted(args.positions)) and q == args.perm
        text = f"{format_perm(p)}\n"

    if roundtrip_ok is not None:
        params["roundtrip"] = True
        result["roundtrip"] = roundtrip_ok
        text += f"roundtrip: {'ok' if roundtrip_ok else 'FAILED'}\n"
    record = _record("bijection", params, result, [name])
    return record, text, EXIT_OK if roundtrip_ok in (None, True) else EXIT_MISMATCH


def series_coefficients(which: str, terms: int) -> list[int]:
    """The first `terms` coefficients of the named generating function."""
    if which == "catalan":
        return [counting.catalan(m) for m in range(terms)]
    if which == "D321":
        return series.gf_d_coefficients(terms)
    if which == "A321":
        return series.gf_321_coefficients(terms)
    method = "composition" if which == "GF132-composed" else "closed_form"
    return series.gf_132_coefficients(terms - 1, method)


def cmd_series(args, ceiling: int) -> tuple[dict, str, int]:
    coeffs = series_coefficients(args.which, args.terms)
    first = 1 if args.which in ("D321", "A321") else 0
    record = _record("series", {"which": args.which, "terms": args.terms},
                     {"first_index": first, "coefficients": [str(c) for c in coeffs]},
                     ["series"])
    return record, " ".join(str(c) for c in coeffs) + "\n", EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "bijection": cmd_bijection,
    "series": cmd_series,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    out = getattr(args, "out", None)
    ceiling = getattr(args, "oracle_ceiling", DEFAULT_CEILING)

    try:
        record, text, status = COMMANDS[args.command](args, ceiling)
    except _UsageError as exc:
        parser.error(str(exc))
    except (InvalidInputError, OracleCeilingError) as exc:
        print(f"nonconsec: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InconsistencyError as exc:
        print(f"nonconsec: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    as_json = as_json or getattr(args, "json", False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(dumps(record))
    if not quiet:
        sys.stdout.write(dumps(record) if as_json else text)
    return status


if __name__ == "__main__":
    sys.exit(main())
