"""Command line front end.

Subcommands:

  solve       integral points of a conic, or its degenerate line pair
  invariants  the derived quantities k, i, delta_q, m
  oracle      bounded brute-force search, independent of the solver
  theorem1    closed-form family for monic unit-k conics with invariant 2^n
  sumform     l^2*x^2 - m^2*y^2 + j = 0 through its closed forms

Exit codes: 0 success; 1 invalid input; 2 parse error; 3 solver/oracle
mismatch under --check; 4 oracle search on a degenerate conic without
--bound.  All integers in JSON documents are decimal strings so arbitrary
magnitudes survive any JSON parser.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .conic import Conic, Invariants, invariants_of, validate
from .errors import ConicError
from .oracle import SearchBound, brute_force, solution_bound
from .solver import (
    FiniteSolutions,
    ParamLine,
    power_of_two_conic,
    power_of_two_points,
    solve,
    solve_difference_of_squares,
)

_FIELDS = ("alpha", "beta", "gamma", "delta", "epsilon", "j")
_INT_RE = re.compile(r"(0|-?[1-9][0-9]*)\Z")


def _int_arg(text: str) -> int:
    if not _INT_RE.match(text):
        raise argparse.ArgumentTypeError(f"not a canonical decimal integer: {text!r}")
    return int(text)


def _positive_int(text: str) -> int:
    value = _int_arg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _conic_from_args(args: argparse.Namespace) -> tuple[Conic, Invariants]:
    parser = args.parser
    if args.input is not None:
        if args.coefficients:
            parser.error("give six coefficients or --input, not both")
        try:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            parser.error(f"cannot read {args.input}: {exc}")
        except json.JSONDecodeError as exc:
            parser.error(f"invalid JSON in {args.input}: {exc}")
        if not isinstance(doc, dict) or set(doc) != set(_FIELDS):
            parser.error(
                "conic document needs exactly the keys "
                "alpha, beta, gamma, delta, epsilon, j"
            )
        values = []
        for field in _FIELDS:
            raw = doc[field]
            if not isinstance(raw, str) or not _INT_RE.match(raw):
                parser.error(
                    f"field {field!r} must be a canonical decimal integer string"
                )
            values.append(int(raw))
    else:
        if len(args.coefficients) != 6:
            parser.error("expected six coefficients: alpha beta gamma delta epsilon j")
        values = args.coefficients
    return validate(*values)


# ---------------------------------------------------------------------------
# output documents

def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _inv_block(inv: Invariants) -> dict:
    return {
        "k": str(inv.k),
        "i": str(inv.big_i),
        "delta_q": str(inv.delta_q),
        "m": str(inv.m),
    }


def _point_doc(p) -> list[str]:
    return [str(p.x), str(p.y)]


def _conic_doc(conic: Conic) -> dict:
    return {field: str(getattr(conic, field)) for field in _FIELDS}


def _line_doc(line: ParamLine) -> dict:
    doc = {
        "a": str(line.a),
        "b": str(line.b),
        "c": str(line.c),
        "solvable": line.solvable,
        "dir": [str(line.direction[0]), str(line.direction[1])],
    }
    if line.solvable:
        doc["base"] = [str(line.base.x), str(line.base.y)]
    return doc


def _line_text(line: ParamLine) -> str:
    head = f"{line.a}*x + {line.b}*y = {line.c}"
    if line.solvable:
        return (
            f"{head} solvable: base=({line.base.x},{line.base.y}) "
            f"dir=({line.direction[0]},{line.direction[1]})"
        )
    return f"{head} no integer solutions"


def _points_text(points) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in points)


def _emit(args: argparse.Namespace, doc: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(_dump(doc))
    else:
        sys.stdout.write(text)


def _emit_invalid(args: argparse.Namespace, exc: Exception) -> int:
    code = getattr(exc, "code", "invalid-input")
    if args.format == "json":
        doc = {"kind": "invalid", "error": {"code": code, "message": str(exc)}}
        sys.stdout.write(_dump(doc))
    else:
        print(f"error: {code}: {exc}", file=sys.stderr)
    return 1


# ---------------------------------------------------------------------------
# oracle box helpers for --check

def _floor_div(p: int, q: int) -> int:
    return p // q


def _ceil_div(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    return -(-p // q)


def _t_range(c0: int, d: int, lim: int) -> tuple[int, int]:
    """Integer t with |c0 + t*d| <= lim, as an inclusive interval (d != 0)."""
    if d > 0:
        return _ceil_div(-lim - c0, d), _floor_div(lim - c0, d)
    return _ceil_div(lim - c0, d), _floor_div(-lim - c0, d)


def _line_box_points(lines, bound: SearchBound) -> list:
    points = set()
    for line in lines:
        if not line.solvable:
            continue
        x0, y0 = line.base
        lo: int | None = None
        hi: int | None = None
        empty = False
        for c0, d, lim in ((x0, line.direction[0], bound.bx), (y0, line.direction[1], bound.by)):
            if d == 0:
                if abs(c0) > lim:
                    empty = True
                    break
                continue
            t_lo, t_hi = _t_range(c0, d, lim)
            lo = t_lo if lo is None else max(lo, t_lo)
            hi = t_hi if hi is None else min(hi, t_hi)
        if empty or lo is None:
            continue
        for t in range(lo, hi + 1):
            points.add(line.point_at(t))
    return sorted(points)


def _run_check(args, conic: Conic, inv: Invariants, result) -> int:
    if args.bound is not None:
        bound = SearchBound(bx=args.bound, by=args.bound)
    elif inv.big_i != 0:
        bound = solution_bound(conic, inv)
    else:
        print(
            "error: --check on a degenerate conic needs --bound",
            file=sys.stderr,
        )
        return 4
    oracle_points = brute_force(conic, bound)
    if isinstance(result, FiniteSolutions):
        expected = [
            p
            for p in result.points
            if abs(p.x) <= bound.bx and abs(p.y) <= bound.by
        ]
    else:
        expected = _line_box_points(result.lines, bound)
    if oracle_points != expected:
        print(
            f"error: solver and oracle disagree within box "
            f"(bx={bound.bx}, by={bound.by})",
            file=sys.stderr,
        )
        return 3
    return 0


# ---------------------------------------------------------------------------
# subcommands

def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        conic, inv = _conic_from_args(args)
        result = solve(conic, reduce=not args.no_reduce, divisor_cap=args.divisor_cap)
    except ConicError as exc:
        return _emit_invalid(args, exc)
    if isinstance(result, FiniteSolutions):
        doc = {
            "kind": "finite",
            "points": [_point_doc(p) for p in result.points],
            "invariants": _inv_block(inv),
        }
        text = _points_text(result.points)
    else:
        doc = {
            "kind": "lines",
            "lines": [_line_doc(line) for line in result.lines],
            "invariants": _inv_block(inv),
        }
        text = "".join(_line_text(line) + "\n" for line in result.lines)
    _emit(args, doc, text)
    if args.check:
        return _run_check(args, conic, inv, result)
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    try:
        _, inv = _conic_from_args(args)
    except ConicError as exc:
        return _emit_invalid(args, exc)
    doc = {"invariants": _inv_block(inv)}
    text = f"k = {inv.k}\ni = {inv.big_i}\ndelta_q = {inv.delta_q}\nm = {inv.m}\n"
    _emit(args, doc, text)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        conic, inv = _conic_from_args(args)
    except ConicError as exc:
        return _emit_invalid(args, exc)
    if args.bound is not None:
        bound = SearchBound(bx=args.bound, by=args.bound)
    elif inv.big_i != 0:
        bound = solution_bound(conic, inv)
    else:
        print(
            "error: degenerate conic (invariant 0) has no finite search box; "
            "give --bound",
            file=sys.stderr,
        )
        return 4
    points = brute_force(conic, bound)
    doc = {
        "kind": "finite",
        "points": [_point_doc(p) for p in points],
        "invariants": _inv_block(inv),
    }
    _emit(args, doc, _points_text(points))
    return 0


def _cmd_theorem1(args: argparse.Namespace) -> int:
    try:
        conic = power_of_two_conic(args.beta, args.delta, args.epsilon, args.n)
        points = power_of_two_points(args.beta, args.delta, args.epsilon, args.n)
    except (ConicError, ValueError) as exc:
        return _emit_invalid(args, exc)
    inv = invariants_of(conic)
    doc = {
        "kind": "finite",
        "conic": _conic_doc(conic),
        "points": [_point_doc(p) for p in points],
        "invariants": _inv_block(inv),
    }
    text = (
        f"conic: {conic.alpha} {conic.beta} {conic.gamma} "
        f"{conic.delta} {conic.epsilon} {conic.j}\n" + _points_text(points)
    )
    _emit(args, doc, text)
    return 0


def _cmd_sumform(args: argparse.Namespace) -> int:
    try:
        result = solve_difference_of_squares(
            args.l, args.m, args.j, divisor_cap=args.divisor_cap
        )
        _, inv = validate(args.l * args.l, 0, -args.m * args.m, 0, 0, args.j)
    except (ConicError, ValueError) as exc:
        return _emit_invalid(args, exc)
    doc = {
        "kind": "finite",
        "points": [_point_doc(p) for p in result.points],
        "invariants": _inv_block(inv),
    }
    if result.obstruction is not None:
        doc["obstruction"] = result.obstruction
    _emit(args, doc, _points_text(result.points))
    if result.obstruction is not None and args.format == "text":
        print("no integer solutions: -j = 2 (mod 4)", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------

def _add_conic_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "coefficients",
        nargs="*",
        type=_int_arg,
        metavar="coefficient",
        help="the six coefficients alpha beta gamma delta epsilon j",
    )
    sub.add_argument(
        "--input",
        metavar="FILE",
        help="read the conic from a JSON document with keys alpha..j "
        "(decimal strings) instead of positional coefficients",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicpoints",
        description="Exact integral points on conics whose quadratic part "
        "splits into two rational lines.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_solve = sub.add_parser(
        "solve", help="all integral points, or the degenerate line pair"
    )
    _add_conic_arguments(p_solve)
    p_solve.add_argument(
        "--no-reduce",
        action="store_true",
        help="enumerate divisors of the full right-hand side instead of the "
        "content-reduced one (same answer, more work)",
    )
    p_solve.add_argument(
        "--check",
        action="store_true",
        help="re-derive the answer with the brute-force oracle; exit 3 on mismatch",
    )
    p_solve.add_argument(
        "--bound",
        type=_positive_int,
        help="override the derived search box for --check (required when the "
        "invariant is zero)",
    )
    p_solve.set_defaults(handler=_cmd_solve, parser=p_solve)

    p_inv = sub.add_parser("invariants", help="print k, i, delta_q, m")
    _add_conic_arguments(p_inv)
    p_inv.set_defaults(handler=_cmd_invariants, parser=p_inv)

    p_oracle = sub.add_parser(
        "oracle", help="brute-force search within a box, independent of the solver"
    )
    _add_conic_arguments(p_oracle)
    p_oracle.add_argument(
        "--bound",
        type=_positive_int,
        help="half-width of the square search box (defaults to the derived bound)",
    )
    p_oracle.set_defaults(handler=_cmd_oracle, parser=p_oracle)

    p_t1 = sub.add_parser(
        "theorem1",
        help="closed-form point family for monic unit-k conics with invariant 2^n",
    )
    for name in ("beta", "delta", "epsilon", "n"):
        p_t1.add_argument(name, type=_int_arg)
    p_t1.set_defaults(handler=_cmd_theorem1, parser=p_t1)

    p_sum = sub.add_parser(
        "sumform", help="solve l^2*x^2 - m^2*y^2 + j = 0 via closed forms"
    )
    for name in ("l", "m", "j"):
        p_sum.add_argument(name, type=_int_arg)
    p_sum.set_defaults(handler=_cmd_sumform, parser=p_sum)

    for p in (p_solve, p_inv, p_oracle, p_t1, p_sum):
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default: text)",
        )

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap_text = os.environ.get("CONIC_DIVISOR_CAP")
    if cap_text is not None and cap_text != "":
        if not _INT_RE.match(cap_text) or int(cap_text) < 1:
            parser.error(
                f"CONIC_DIVISOR_CAP must be a positive integer, got {cap_text!r}"
            )
        args.divisor_cap = int(cap_text)
    else:
        args.divisor_cap = None
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
