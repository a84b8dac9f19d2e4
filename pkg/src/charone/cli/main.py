"""The ``charone`` command.

Exit status: 0 on success, 2 on user error (bad syntax, bad input files, bad
options), 3 when ``zeta check --assert`` finds the discrepancy above tolerance.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from ..correspondences import DeformedCorrespondence, compose, make_correspondence
from ..errors import CharoneError
from ..points import Supernatural, points_isomorphic, subgroup_contains
from ..polygon import NewtonPolygon, gamma
from ..slopes import Slope, parse_slope
from ..square import Staircase, sq_congruent
from ..svg import render
from .expr import evaluate, parse

EXIT_OK, EXIT_USER, EXIT_NUMERIC = 0, 2, 3


class UserError(Exception):
    pass


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(text if text is not None else json.dumps(obj))


def _value_text(v) -> str:
    if isinstance(v, Staircase):
        if v.is_zero:
            return "0"
        return " + ".join(f"q^{a}(x)q^{b}" for a, b in v.corners)
    if isinstance(v, NewtonPolygon):
        return "gamma: extremes " + " ".join(f"({a},{b})" for a, b in v.extremes) if not v.is_zero else "0"
    return str(v)


def _load_staircase(arg: str) -> Staircase:
    """A JSON file, inline JSON or an expression evaluating to a staircase."""
    text = arg
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UserError(f"cannot read {arg}: {exc}") from None
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UserError(f"invalid JSON in {arg}: {exc}") from None
        if "corners" in obj:
            return Staircase.from_json(obj)
        if "extremes" in obj:
            return NewtonPolygon.from_json(obj).staircase()
        raise UserError(f"{arg}: expected a staircase {{\"corners\": ...}}")
    value = evaluate(parse(text))
    if isinstance(value, NewtonPolygon):
        return value.staircase()
    if not isinstance(value, Staircase):
        raise UserError(f"{arg!r} does not evaluate to a staircase")
    return value


def _load_supernatural(arg: str) -> Supernatural:
    if arg == "base":
        return Supernatural.base()
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as exc:
            raise UserError(f"cannot read {arg}: {exc}") from None
    try:
        return Supernatural.from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UserError(f"invalid JSON for a supernatural number: {exc}") from None


def _slope(arg: str) -> Slope:
    try:
        return parse_slope(arg)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UserError(str(exc)) from None


def _write_svg(path: str | None, staircase=None, polygon=None, title: str = "") -> None:
    if path:
        Path(path).write_text(render(staircase, polygon, title), encoding="utf-8")


def cmd_eval(args) -> int:
    value = evaluate(parse(args.expr))
    _emit(value.to_json(), args.json, _value_text(value))
    if isinstance(value, Staircase):
        _write_svg(args.svg, value, gamma(value) if args.hull else None, args.expr)
    elif isinstance(value, NewtonPolygon):
        _write_svg(args.svg, value.staircase(), value, args.expr)
    elif args.svg:
        raise UserError("--svg needs a staircase or polygon value")
    return EXIT_OK


def cmd_reduce(args) -> int:
    x = _load_staircase(args.staircase)
    g = gamma(x)
    _emit(g.to_json(), args.json, _value_text(g))
    _write_svg(args.svg, x, g)
    return EXIT_OK


def cmd_congruent(args) -> int:
    x, y = _load_staircase(args.first), _load_staircase(args.second)
    slope = _slope(args.slope)
    result = sq_congruent(x, y, slope)
    _emit({"congruent": result, "slope": slope.to_json()}, args.json, "true" if result else "false")
    return EXIT_OK


def _fraction_text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def cmd_compose(args) -> int:
    lhs, rhs = _slope(args.lhs), _slope(args.rhs)
    result = compose(make_correspondence(lhs), make_correspondence(rhs))
    out = {"result": result.kind, "slope": str(result.slope), "slope_json": result.slope.to_json()}
    if isinstance(result, DeformedCorrespondence):
        out["eps_slope"] = _fraction_text(result.left.eps)
        out["right_eps_slope"] = _fraction_text(result.right.eps)
    print(json.dumps(out, separators=(",", ":")))
    return EXIT_OK


def cmd_points(args) -> int:
    if args.points_cmd == "iso":
        a, b = _load_supernatural(args.a), _load_supernatural(args.b)
        result = points_isomorphic(a, b)
        _emit({"isomorphic": result}, args.json, "true" if result else "false")
    else:
        a = _load_supernatural(args.a)
        try:
            x = Fraction(args.q)
        except (ValueError, ZeroDivisionError):
            raise UserError(f"not a rational number: {args.q!r}") from None
        result = subgroup_contains(a, x)
        _emit({"member": result}, args.json, "true" if result else "false")
    return EXIT_OK


def cmd_zeta(args) -> int:
    from ..zeta import Bump, CountingConfig, ZeroTable, explicit_formula_check

    started = time.perf_counter()
    zeros = ZeroTable.load(args.zeros) if args.zeros else ZeroTable.shipped()
    g = Bump(args.u0, args.width)
    cfg = CountingConfig(zero_count=args.K, step=args.step, p_max=args.pmax, u_max=args.umax)
    report = explicit_formula_check(g, cfg, zeros)
    out = report.to_json()
    out["test_function"] = {"kind": "bump", "u0": args.u0, "width": args.width}
    out["zeros_source"] = zeros.source
    out["seconds"] = round(time.perf_counter() - started, 3)
    ok = report.relative_discrepancy <= args.rtol
    out["within_tolerance"] = ok
    out["rtol"] = args.rtol
    if args.json:
        print(json.dumps(out, separators=(",", ":")))
    else:
        print(f"zero side        {report.zero_side:.12g}")
        print(f"prime side       {report.prime_side:.12g}")
        print(f"archimedean side {report.arch_side:.12g}")
        print(f"discrepancy      {report.discrepancy:.3e} (relative {report.relative_discrepancy:.3e}, K = {report.zero_count})")
        print(f"quadrature error {report.quadrature_error:.1e}; zero tail ~ {report.zero_tail_estimate:.1e}")
    if args.assert_ and not ok:
        print(f"relative discrepancy {report.relative_discrepancy:.3e} exceeds {args.rtol}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="charone", description="Characteristic-one algebra: staircases, Newton polygons, Frobenius correspondences, points and zeta checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression such as '(q^1(x)q^0 + q^0(x)q^1)^2'")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="PATH", help="write a figure of the resulting staircase or polygon")
    p.add_argument("--hull", action="store_true", help="overlay the Newton polygon in the figure")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reduce", help="Newton polygon of a staircase (JSON file, inline JSON or expression)")
    p.add_argument("staircase")
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("congruent", help="do two staircases have the same minimum of lambda*a + b")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--slope", required=True, help="e.g. 3/2, sqrt2, quadratic:a,b,c,d, cf:1,2,2,2 or JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("compose", help="compose Frobenius correspondences Psi(lhs) o Psi(rhs); prints JSON")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("points", help="queries on points labelled by supernatural numbers")
    psub = p.add_subparsers(dest="points_cmd", required=True)
    q = psub.add_parser("iso", help="are two points isomorphic")
    q.add_argument("a", help="supernatural as JSON, a JSON file, or 'base'")
    q.add_argument("b")
    q.add_argument("--json", action="store_true")
    q = psub.add_parser("member", help="is the rational q in the subgroup H_a")
    q.add_argument("a")
    q.add_argument("q")
    q.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("zeta", help="explicit-formula checks")
    zsub = p.add_subparsers(dest="zeta_cmd", required=True)
    z = zsub.add_parser("check", help="compare zero side with prime + archimedean sides for a bump test function")
    z.add_argument("--u0", type=float, default=3.0)
    z.add_argument("--width", type=float, default=0.2)
    z.add_argument("--zeros", metavar="PATH", help="zero ordinates, one per line (default: shipped table)")
    z.add_argument("-K", type=int, default=100, help="number of zeros")
    z.add_argument("--pmax", type=int, default=50)
    z.add_argument("--umax", type=float, default=1e3)
    z.add_argument("--step", type=float, default=0.02, help="initial quadrature step in log u")
    z.add_argument("--rtol", type=float, default=5e-2)
    z.add_argument("--assert", dest="assert_", action="store_true", help="exit 3 if the relative discrepancy exceeds --rtol")
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=cmd_zeta)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UserError, CharoneError, ValueError, KeyError, OSError) as exc:
        print(f"charone: error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
