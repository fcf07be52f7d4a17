"""Command-line interface.

Subcommands: entry, gram, verify, expand-log, bilinear.  Data goes to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 usage or input
error, 2 verification failure, 3 numerical failure (non-convergence or
a non-finite value reaching a serializer).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import analysis, exactmoments, oracles
from .errors import ConvergenceError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_NUMERICAL = 3

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


class _NumericalError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; remap to the exit-code
    # contract (1) by raising instead.
    def error(self, message):
        raise _UsageError(message)


def _format_value(value) -> str:
    """Exact values as "p/q" with explicit denominator, floats as repr."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def _json_cell(value):
    if isinstance(value, Fraction):
        return _format_value(value)
    value = float(value)
    if not math.isfinite(value):
        raise _NumericalError(f"non-finite value {value!r} cannot be serialized")
    return value


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise _UsageError(f"cannot write {out_path}: {exc}") from exc


def render_gram_json(gram) -> str:
    """Canonical JSON form of a Gram matrix; reused by the round-trip test."""
    rows = [[_json_cell(v) for v in row] for row in gram.entries]
    return _dump_json({"size": gram.order, "mode": gram.mode, "entries": rows})


def _cmd_entry(args) -> int:
    value = exactmoments.entry(args.n, args.m, max_order=args.max_order_cap)
    if not args.exact:
        value = float(value)
    if args.format == "json":
        mode = "exact" if args.exact else "float"
        sys.stdout.write(
            _dump_json({"n": args.n, "m": args.m, "mode": mode, "value": _json_cell(value)})
        )
    else:
        sys.stdout.write(_format_value(value) + "\n")
    return EXIT_OK


def _cmd_gram(args) -> int:
    if args.exact:
        gram = exactmoments.gram_exact(args.size, max_order=args.max_order_cap)
    else:
        gram = exactmoments.gram_float(args.size, max_order=args.max_order_cap)
    if args.format == "json":
        text = render_gram_json(gram)
    elif args.format == "csv":
        text = "".join(
            ",".join(_format_value(v) for v in row) + "\n" for row in gram.entries
        )
    else:
        width = max(len(_format_value(v)) for row in gram.entries for v in row)
        text = "".join(
            "  ".join(_format_value(v).rjust(width) for v in row) + "\n"
            for row in gram.entries
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.oracle == "quad":
        kwargs["panels"] = oracles.dyadic_panels(args.panels)
        kwargs["rule"] = oracles.gauss_legendre_rule(args.quad_degree)
    report = oracles.verify_range(
        args.max_order, args.oracle, max_order_cap=args.max_order_cap, **kwargs
    )
    if args.format == "json":
        payload = {
            "mode": report.mode,
            "max_order": report.max_order,
            "pairs": report.num_pairs,
            "passed": report.num_passed,
            "ok": report.passed,
            "failures": [[c.n, c.m] for c in report.failures],
        }
        if report.mode == "quad":
            payload["worst_abs"] = _json_cell(report.worst_abs)
            payload["worst_rel"] = _json_cell(report.worst_rel)
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        for c in report.checks:
            status = "pass" if c.passed else "fail"
            if report.mode == "quad":
                sys.stdout.write(
                    f"{c.n},{c.m},{status},{c.abs_err!r},{c.rel_err!r}\n"
                )
            else:
                sys.stdout.write(f"{c.n},{c.m},{status}\n")
    else:
        if report.mode == "exact":
            sys.stdout.write(f"{report.num_passed}/{report.num_pairs} pairs exact\n")
        else:
            sys.stdout.write(
                f"{report.num_passed}/{report.num_pairs} pairs within tolerance "
                f"(rel {oracles.QUAD_REL_TOL:g}, abs {oracles.QUAD_ABS_TOL:g}); "
                f"worst abs {report.worst_abs:.3e}, worst rel {report.worst_rel:.3e}\n"
            )
        for c in report.failures:
            sys.stdout.write(f"FAIL ({c.n},{c.m})\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_expand_log(args) -> int:
    report = analysis.expansion_l2_error(args.order)
    coeffs = [float(c) for c in report.coefficients]
    if args.format == "json":
        sys.stdout.write(
            _dump_json(
                {
                    "order": report.order,
                    "coefficients": [_json_cell(c) for c in coeffs],
                    "l2_error": _json_cell(report.l2_error),
                }
            )
        )
    elif args.format == "csv":
        for n, c in enumerate(coeffs):
            sys.stdout.write(f"{n},{c!r}\n")
        sys.stdout.write(f"l2_error,{report.l2_error!r}\n")
    else:
        sys.stdout.write(
            "coefficients: " + ", ".join(repr(c) for c in coeffs) + "\n"
        )
        sys.stdout.write(f"l2_error: {report.l2_error!r}\n")
    return EXIT_OK


def _read_coeff_file(path):
    """Parse a coefficient file: one value per line, '#' comments ignored.

    Returns (values, is_exact).  Fraction lines ("p/q") and bare integers
    are exact; decimal lines make the file floating.  A file mixing
    fractions with decimals is rejected.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    values = []
    saw_fraction = saw_decimal = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if "/" in line:
                values.append(Fraction(line))
                saw_fraction = True
            elif line.lstrip("+-").isdigit():
                values.append(Fraction(int(line)))
            else:
                as_float = float(line)
                if not math.isfinite(as_float):
                    raise ValueError("not a finite decimal")
                values.append(as_float)
                saw_decimal = True
        except (ValueError, ZeroDivisionError) as exc:
            raise _UsageError(f"{path}:{lineno}: unparseable value {line!r}") from exc
    if not values:
        raise _UsageError(f"{path}: no coefficient values found")
    if saw_fraction and saw_decimal:
        raise _UsageError(f"{path}: mixes fraction and decimal lines")
    return values, not saw_decimal


def _cmd_bilinear(args) -> int:
    a, a_exact = _read_coeff_file(args.a_file)
    b, b_exact = _read_coeff_file(args.b_file)
    size = args.gram_size
    if size is None:
        size = max(len(a), len(b)) - 1
    exact = a_exact and b_exact
    if exact:
        gram = exactmoments.gram_exact(size, max_order=args.max_order_cap)
    else:
        gram = exactmoments.gram_float(size, max_order=args.max_order_cap)
        a = [float(v) for v in a]
        b = [float(v) for v in b]
    value = analysis.bilinear_log_form(a, b, gram)
    if args.format == "json":
        sys.stdout.write(_dump_json({"mode": gram.mode, "value": _json_cell(value)}))
    else:
        sys.stdout.write(_format_value(value) + "\n")
    return EXIT_OK


def _order_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"order must be nonnegative: {value}")
    return value


def _positive_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _add_common(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("plain", "csv", "json"),
        default="plain",
        help="output format (default: plain)",
    )
    parser.add_argument(
        "--max-order-cap",
        type=_order_arg,
        default=None,
        metavar="N",
        help="override the default order ceiling",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="loglegram",
        description=(
            "Log-weighted Gram matrix of shifted Legendre polynomials: "
            "N[n,m] = integral of P_n(2x-1) P_m(2x-1) log(x) over [0,1]."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("entry", help="print a single matrix entry N[n,m]")
    p.add_argument("n", type=_order_arg)
    p.add_argument("m", type=_order_arg)
    p.add_argument("--exact", action="store_true", help="print the reduced fraction")
    _add_common(p)
    p.set_defaults(func=_cmd_entry)

    p = sub.add_parser("gram", help="print or write the full (size+1)x(size+1) matrix")
    p.add_argument("size", type=_order_arg)
    p.add_argument("--exact", action="store_true", help="exact rational entries")
    p.add_argument("--out", default=None, metavar="PATH", help="write to a file")
    _add_common(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("verify", help="check the closed forms against an oracle")
    p.add_argument("--max-order", type=_order_arg, default=20)
    p.add_argument("--oracle", choices=("exact", "quad"), default="exact")
    p.add_argument(
        "--panels",
        type=_positive_arg,
        default=oracles.DEFAULT_NUM_PANELS,
        help="dyadic panel count for the quad oracle",
    )
    p.add_argument(
        "--quad-degree",
        type=_positive_arg,
        default=oracles.DEFAULT_QUAD_DEGREE,
        help="Gauss-Legendre nodes per panel for the quad oracle",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("expand-log", help="shifted Legendre expansion of log(x)")
    p.add_argument("order", type=_order_arg)
    _add_common(p)
    p.set_defaults(func=_cmd_expand_log)

    p = sub.add_parser("bilinear", help="evaluate a' N b from coefficient files")
    p.add_argument("a_file")
    p.add_argument("b_file")
    p.add_argument(
        "--gram-size",
        type=_order_arg,
        default=None,
        help="matrix order (default: inferred from the files)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_bilinear)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (_NumericalError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
