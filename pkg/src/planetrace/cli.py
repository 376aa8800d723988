"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 identity mismatch, 3 internal
invariant breach.  ``--json`` wraps every result in a fixed envelope::

    {"command": ..., "parameters": {...}, "result": ..., "exact": true}

Big integers are written as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import identities, oracle
from .asymptotics import EstimateRangeError, wright_pp
from .polycore import InexactDivisionError, IntPoly, NonUnitError, OrderMismatchError, format_poly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON envelope")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no output; exit status only")

    parser = _Parser(prog="planetrace", description="Exact plane-partition series and identity checks.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("p", parents=[common], help="number of partitions p(n)")
    p.add_argument("n", type=_nonneg)
    p = sub.add_parser("pp", parents=[common], help="number of plane partitions pp(n)")
    p.add_argument("n", type=_nonneg)
    for name in ("gpoly", "hpoly"):
        p = sub.add_parser(name, parents=[common], help=f"the polynomial {name[0]}_n(x)")
        p.add_argument("n", type=_nonneg)

    p = sub.add_parser("trace-table", parents=[common], help="c[i][j]: plane partitions of i with trace j")
    p.add_argument("--imax", type=_nonneg, required=True)
    p.add_argument("--jmax", type=_nonneg, required=True)

    p = sub.add_parser("verify", parents=[common], help="expand both sides of an identity and compare")
    p.add_argument("identity", choices=sorted(identities.VERIFIERS))
    p.add_argument("--adeg", type=_nonneg, required=True, help="a-degree A")
    p.add_argument("--xdeg", type=_nonneg, required=True, help="x truncation order N")

    p = sub.add_parser("oracle", parents=[common], help="brute-force enumeration")
    p.add_argument("what", choices=["pp", "traces"])
    p.add_argument("n", type=_nonneg)

    p = sub.add_parser("asymptotic", parents=[common], help="Wright's estimate for pp(n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--exact", action="store_true", help="also compute pp(n) and the ratio")
    return parser


def _coeff_strings(poly: IntPoly) -> list[str]:
    return [str(c) for c in poly.coeffs]


def _dispatch(args) -> tuple[dict, object, str, bool, int]:
    """Return (parameters, json result, text, exact, status)."""
    cmd = args.command
    if cmd in ("p", "pp"):
        series = identities.euler_partition_series(args.n) if cmd == "p" else identities.macmahon_series(args.n)
        v = series[args.n]
        return {"n": args.n}, str(v), str(v), True, EXIT_OK
    if cmd in ("gpoly", "hpoly"):
        table = identities.g_polynomials(args.n) if cmd == "gpoly" else identities.h_polynomials(args.n)
        poly = table[args.n]
        return {"n": args.n}, {"coefficients": _coeff_strings(poly)}, format_poly(poly), True, EXIT_OK
    if cmd == "trace-table":
        t = identities.trace_table(args.imax, args.jmax)
        text = "\n".join(" ".join(str(v) for v in row) for row in t.c)
        return (
            {"imax": args.imax, "jmax": args.jmax},
            [[str(v) for v in row] for row in t.c],
            text,
            True,
            EXIT_OK,
        )
    if cmd == "verify":
        report = identities.VERIFIERS[args.identity](args.adeg, args.xdeg)
        params = {"identity": args.identity, "adeg": args.adeg, "xdeg": args.xdeg}
        status = EXIT_OK if report.passed else EXIT_MISMATCH
        return params, report.as_dict(), str(report), True, status
    if cmd == "oracle":
        params = {"what": args.what, "n": args.n}
        if args.what == "pp":
            v = oracle.count_plane_partitions(args.n)
            return params, str(v), str(v), True, EXIT_OK
        hist = oracle.trace_histogram(args.n)
        text = "\n".join(f"{j} {c}" for j, c in hist.items())
        return params, {str(j): str(c) for j, c in hist.items()}, text, True, EXIT_OK
    if cmd == "asymptotic":
        exact = identities.macmahon_series(args.n)[args.n] if args.exact else None
        est = wright_pp(args.n, exact)
        result = {"n": args.n, "estimate": est.estimate}
        text = f"n={args.n} estimate={est.estimate:.12g}"
        if exact is not None:
            result["exact"] = str(exact)
            result["ratio"] = est.ratio
            text += f" exact={exact} ratio={est.ratio:.12g}"
        return {"n": args.n, "exact": args.exact}, result, text, False, EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)

    try:
        params, result, text, exact, status = _dispatch(args)
    except (identities.TruncationError, EstimateRangeError, UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except identities.IdentityViolation as exc:
        print(f"mismatch: {exc}", file=stderr)
        return EXIT_MISMATCH
    except (InexactDivisionError, NonUnitError, OrderMismatchError) as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL

    if quiet:
        return status
    if as_json:
        envelope = {"command": args.command, "parameters": params, "result": result, "exact": exact}
        print(json.dumps(envelope), file=stdout)
    else:
        print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
