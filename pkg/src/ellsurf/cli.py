"""Command line front end.

Exit codes: 0 success, 1 mathematical failure (failed certificate,
singular equation, bad fiber), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from . import schemas
from .algebra import INFINITY, Polynomial, as_rational, rational_to_str
from .certify import ConstructionSpec, section_multiples_report, verify_construction
from .elliptic_ft import CurveFT, is_isotrivial, j_invariant
from .elliptic_q import CurveQ, PointQ, torsion_analysis
from .errors import BadFiber, InvalidInput, InvariantViolation, PoleError, SingularEquation
from .surface import WeierstrassSurfaceData, fiber_analysis

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _rationals(text: str) -> list:
    try:
        return [as_rational(v) for v in text.split(",") if v.strip()]
    except InvalidInput as exc:
        raise InputError(str(exc)) from None


def _load_json(path: str, schema: dict):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise InputError(f"{path}: schema violation: {exc.message}") from None
    return data


def _emit(args, payload, text: str):
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if args.out:
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)


def _spec(args) -> ConstructionSpec:
    lambdas = _rationals(args.lambdas) if args.lambdas else None
    return ConstructionSpec(args.genus, tuple(lambdas) if lambdas else None)


def cmd_verify(args) -> int:
    spec = _spec(args)
    at = _rationals(args.at)
    if len(at) != 1:
        raise InputError("--at takes a single rational")
    cert = verify_construction(spec, at[0])
    lines = []
    for i, c in enumerate(cert.checks, 1):
        line = f"[{'PASS' if c.passed else 'FAIL'}] ({i:2d}) {c.name}"
        if not c.passed and isinstance(c.witness, dict):
            if c.witness.get("condition"):
                idx = ",".join(map(str, c.witness.get("indices", [])))
                line += f" -- {c.witness['condition']} (index {idx})"
            elif "skipped" in c.witness:
                line += f" -- skipped: {c.witness['skipped']}"
            elif "error" in c.witness:
                line += f" -- {c.witness['error']}"
        lines.append(line)
    lines.append("")
    lines.append(cert.conclusion)
    lines.append("assumptions:")
    lines.extend(f"  - {a}" for a in cert.assumptions)
    _emit(args, cert.to_json(), "\n".join(lines))
    return EXIT_OK if cert.all_pass else EXIT_FAIL


def cmd_fibers(args) -> int:
    data = WeierstrassSurfaceData.from_json(_load_json(args.data, schemas.SURFACE_DATA))
    report = fiber_analysis(data)
    lines = [f"Delta = {report.discriminant}", f"base genus {report.base_genus}"]
    for p in report.places:
        locus = "t = inf" if p.is_infinity else f"{p.locus} = 0"
        lines.append(
            f"  {locus}: {p.kodaira_type} x {p.points_on_B} point(s) on B"
            f" (branch={p.branch}, ord a4={p.v_a4}, ord a6={p.v_a6}, ord Delta={p.v_delta},"
            f" e={p.euler_number})"
        )
    counts = ", ".join(f"{n} x {k}" for k, n in sorted(report.type_counts().items()))
    lines.append(f"singular fibers: {counts or 'none'}")
    lines.append(f"total Euler number {report.total_euler}, chi(O_X) = {report.chi}, "
                 f"minimal = {report.minimal}, isotrivial = {report.isotrivial}")
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_torsion(args) -> int:
    E = CurveQ.from_json(_load_json(args.curve, schemas.CURVE))
    P = PointQ.from_json(_load_json(args.point, schemas.POINT))
    result = torsion_analysis(E, P)
    text = "infinite" if result.order is INFINITY else f"order {result.order}"
    if result.reason:
        text += f"  ({result.reason})"
    _emit(args, result.to_json(), text)
    return EXIT_OK


def cmd_multiples(args) -> int:
    rows = section_multiples_report(_spec(args), args.n)
    text = "\n".join(
        f"n={r['n']}: x num/den degrees {r['x_degrees']}, y num/den degrees {r['y_degrees']}"
        for r in rows
    )
    _emit(args, rows, text)
    return EXIT_OK


def cmd_jinv(args) -> int:
    if args.data:
        data = WeierstrassSurfaceData.from_json(_load_json(args.data, schemas.SURFACE_DATA))
        a4, a6 = data.a4, data.a6
    else:
        a4, a6 = Polynomial(_rationals(args.a4)), Polynomial(_rationals(args.a6))
    E = CurveFT(a4, a6)
    j = j_invariant(E)
    payload = {"j": j.to_json(), "isotrivial": is_isotrivial(E)}
    text = f"j = {j}\nisotrivial: {payload['isotrivial']}"
    if args.at is not None:
        at = _rationals(args.at)
        if len(at) != 1:
            raise InputError("--at takes a single rational")
        try:
            value = rational_to_str(j(at[0]))
        except ZeroDivisionError:
            value = None
        payload["at"] = rational_to_str(at[0])
        payload["j_at"] = value
        text += f"\nj({payload['at']}) = {value if value is not None else 'pole'}"
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="ellsurf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="certify the construction for genus g")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--lambdas", help="comma-separated rationals (default 1,...,2g+1)")
    p.add_argument("--at", default="0", help="specialization parameter t (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fibers", parents=[common], help="singular fibers of surface data")
    p.add_argument("data", help="surface data JSON file")
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("torsion", parents=[common], help="order of a rational point")
    p.add_argument("curve", help="curve JSON file")
    p.add_argument("point", help="point JSON file")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("multiples", parents=[common], help="degree growth of nP over Q(t)")
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--lambdas")
    p.add_argument("-n", type=int, default=5, help="largest multiple (default 5)")
    p.set_defaults(func=cmd_multiples)

    p = sub.add_parser("jinv", parents=[common], help="j-invariant of y^2 = x^3 + a4 x + a6")
    p.add_argument("--a4", default="1,0,1", help="coefficients, lowest degree first")
    p.add_argument("--a6", default="1")
    p.add_argument("--data", help="read a4, a6 from a surface data JSON file")
    p.add_argument("--at", help="also evaluate j at this t")
    p.set_defaults(func=cmd_jinv)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SingularEquation, BadFiber, PoleError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
