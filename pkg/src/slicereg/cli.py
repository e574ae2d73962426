"""Command-line front end.

Every command writes one JSON document (keys sorted, so output is
byte-for-byte reproducible) to stdout or ``--out``.  ``--pretty`` switches to
a human-readable rendering.

Exit codes: 0 success, 1 usage or input error, 2 admissibility rejection,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import inspect
import json
import math
import os
import sys
from typing import Any

import numpy as np

from . import algebra as alg
from .builtins import make_builtin, parse_builtin_name
from .cauchy import ContourSpec, cauchy_boundary, cauchy_pompeiu
from .errors import AdmissibilityError, InvalidAlgebra, NotAdmissible, NumericalError, SliceError
from .slicefn import (SlicePoly, admissibility, conjugate_stem, format_poly, is_slice_regular,
                      modulus_squared_stem, normal, poly_from_json, poly_to_json, slice_eval, sprod)
from .verify import SUITES, cl3_closed_forms, cl3_cone_samples, octonion_alternativity, run_suite
from .zeros import SPHERE_TOL, all_zeros, normal_poly_coeffs, zeros_to_json

EXIT_OK, EXIT_USAGE, EXIT_ADMISSIBILITY, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- input loading -------------------------------------------------------

def _load_json(text: str) -> Any:
    """Inline JSON, or the contents of a file if ``text`` names one."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON document or file: {exc}") from exc


def load_algebra(name: str) -> alg.AlgebraSpec:
    """A builtin name (``quaternions``, ``clifford3``, ...) or a custom-spec JSON."""
    if os.path.isfile(name) or name.lstrip().startswith("{"):
        doc = _load_json(name)
        try:
            return alg.spec_from_json(doc)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed algebra spec: {exc}") from exc
    try:
        kind, n = parse_builtin_name(name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return make_builtin(kind, n)


def load_poly(spec: alg.AlgebraSpec, text: str) -> SlicePoly:
    doc = _load_json(text)
    if isinstance(doc, dict):
        doc = doc.get("coeffs")
    if not isinstance(doc, list):
        raise UsageError("a polynomial is a JSON list of coefficients (constant term first)")
    try:
        return poly_from_json(spec, doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed polynomial: {exc}") from exc


def load_element(spec: alg.AlgebraSpec, text: str) -> alg.Element:
    doc = _load_json(text)
    try:
        if isinstance(doc, dict):
            return spec.from_labels(doc)
        if isinstance(doc, (int, float)):
            return spec.real(float(doc))
        return alg.Element(spec, doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed element: {exc}") from exc


def _algebra_of(args) -> alg.AlgebraSpec:
    return load_algebra(args.algebra)


def _elem_json(x: alg.Element) -> dict:
    return {"coords": x.coords.tolist(), "text": alg.format_element(x)}


def _poly_json(p: SlicePoly) -> dict:
    return {"coeffs": poly_to_json(p), "degree": p.degree, "text": format_poly(p)}


# -- commands ------------------------------------------------------------

def cmd_algebra_info(args) -> tuple[dict, int]:
    source = args.builtin or args.custom or args.algebra
    try:
        spec = load_algebra(source)
    except InvalidAlgebra as exc:
        failures = [{"invariant": f.invariant, "where": str(f.where), "detail": f.detail}
                    for f in exc.report]
        return {"valid": False, "validation": failures}, EXIT_USAGE
    rng = np.random.default_rng(0)
    n = args.samples
    xs = [alg.Element(spec, rng.normal(size=spec.dim)) for _ in range(n)]
    units = spec.imaginary_units
    report: dict[str, Any] = {
        "name": spec.name,
        "dim": spec.dim,
        "basis": list(spec.basis_labels),
        "valid": True,
        "validation": [],
        "associative": spec.is_associative,
        "basis_units_in_S_A": [spec.basis_labels[i] for i in units],
        "gaussian_samples": n,
        "fraction_in_quadratic_cone": sum(alg.in_quadratic_cone(x) for x in xs) / n,
        "fraction_in_normal_cone": sum(alg.in_normal_cone(x) for x in xs) / n,
    }
    hyp = alg.check_real_norm_hypothesis(spec)
    report["real_norm_hypothesis"] = {"holds_on_samples": hyp.holds, "samples": hyp.n_checked,
                                      "counterexample": None if hyp.counterexample is None
                                      else hyp.counterexample.coords.tolist()}
    if spec.name == "clifford3":
        agree = total = 0
        for x in cl3_cone_samples(args.samples):
            u = x / x.norm_inf()
            x123, q, nform = cl3_closed_forms(u)
            in_q = abs(x123) <= 1e-9 and abs(q) <= 1e-9
            in_n = abs(nform) <= 1e-9
            total += 1
            agree += alg.in_quadratic_cone(x) == in_q and alg.in_normal_cone(x) == in_n
        report["cone_closed_forms"] = {"samples": total, "agree": agree, "ok": agree == total}
    if spec.name == "octonions":
        res = octonion_alternativity()
        report["alternativity"] = {"triples": res.passed + res.failed, "failed": res.failed,
                                   "ok": res.ok}
    return report, EXIT_OK


def cmd_eval(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    p = load_poly(spec, args.poly)
    x = load_element(spec, args.point)
    return {"point": _elem_json(x), "value": _elem_json(slice_eval(p, x, args.tol))}, EXIT_OK


def cmd_product(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    f, g = load_poly(spec, args.poly), load_poly(spec, args.poly2)
    return {"f": _poly_json(f), "g": _poly_json(g), "product": _poly_json(sprod(f, g))}, EXIT_OK


def cmd_normal(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    p = load_poly(spec, args.poly)
    N = normal(p)
    real = bool(np.abs(N.coeffs[:, 1:]).max(initial=0.0) <= args.tol * (1 + np.abs(N.coeffs).max(initial=0.0)))
    return {"normal": _poly_json(N), "real_coefficients": real}, EXIT_OK


def cmd_admissible(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    p = load_poly(spec, args.poly)
    N = normal(p)
    real = bool(np.abs(N.coeffs[:, 1:]).max(initial=0.0) <= args.tol * (1 + np.abs(N.coeffs).max(initial=0.0)))
    verdict = admissibility(p, grid_size=args.grid, tol=args.tol)
    out = {"admissible": verdict.admissible, "method": verdict.method,
           "normal": _poly_json(N), "normal_real": real}
    return out, EXIT_OK if verdict.admissible else EXIT_ADMISSIBILITY


def cmd_roots(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    p = load_poly(spec, args.poly)
    try:
        recs = all_zeros(p, tol=args.tol, force_admissible=args.force_admissible,
                         sphere_tol=args.sphere_tol)
    except NotAdmissible as exc:
        return {"error": type(exc).__name__, "message": str(exc), "admissible": False}, EXIT_ADMISSIBILITY
    cn = normal_poly_coeffs(p, args.tol, force=True)
    return {"poly": _poly_json(p), "cn": [float(c) for c in cn],
            "total_multiplicity": sum(r.multiplicity for r in recs),
            "zeros": zeros_to_json(recs)}, EXIT_OK


_STEMS = {"conjugate": conjugate_stem, "modulus_squared": modulus_squared_stem}


def cmd_cauchy(args) -> tuple[dict, int]:
    spec = _algebra_of(args)
    doc = _load_json(args.contour)
    if not isinstance(doc, dict):
        raise UsageError("a contour is a JSON object")
    try:
        contour = ContourSpec.from_json(spec, doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed contour: {exc}") from exc
    if args.quad_n:
        contour = contour.with_nodes(n_boundary=args.quad_n)
    if (args.poly is None) == (args.stem is None):
        raise UsageError("give exactly one of --poly and --stem")
    f = load_poly(spec, args.poly) if args.poly else _STEMS[args.stem](spec, contour.domain)
    x = load_element(spec, args.point)
    regular = isinstance(f, SlicePoly) or is_slice_regular(f)
    method = "boundary" if regular and not args.pompeiu else "pompeiu"
    value = (cauchy_boundary(f, contour, x, args.tol) if method == "boundary"
             else cauchy_pompeiu(f, contour, x, args.tol))
    direct = slice_eval(f, x, args.tol)
    err = float(np.abs(value.coords - direct.coords).max())
    return {"method": method, "contour": contour.to_json(), "point": _elem_json(x),
            "value": _elem_json(value), "direct": _elem_json(direct), "error": err}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        fn = SUITES.get(name)
        if fn is None:
            raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        kwargs = {}
        if args.max_degree is not None and "max_degree" in inspect.signature(fn).parameters:
            kwargs["max_degree"] = args.max_degree
        results.append(run_suite(name, **kwargs))
    ok = all(r.ok for r in results)
    return {"ok": ok, "suites": [r.to_json() for r in results]}, EXIT_OK if ok else EXIT_NUMERICAL


# -- output ----------------------------------------------------------------

def _clean(obj):
    """Make a report JSON-safe: numpy scalars to Python, non-finite floats to strings."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        obj = obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def render_pretty(report: dict) -> str:
    lines = []
    if "suites" in report:
        for s in report["suites"]:
            for p in s["properties"]:
                tag = "PASS" if p["failed"] == 0 and p["passed"] > 0 else "FAIL"
                lines.append(f"{tag}  {s['suite']:<14} {p['passed']:>6} ok {p['failed']:>4} bad  "
                             f"max_err={p['max_error']:.2e}  {p['name']}")
        return "\n".join(lines) + "\n"
    for key in sorted(report):
        val = report[key]
        if isinstance(val, dict) and "text" in val:
            val = val["text"]
        elif isinstance(val, (list, dict)):
            val = json.dumps(val, sort_keys=True)
        lines.append(f"{key:<28} {val}")
    return "\n".join(lines) + "\n"


def emit(report: dict, pretty: bool, out: str | None) -> None:
    report = _clean(report)
    text = render_pretty(report) if pretty else json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="quaternions",
                        help="builtin name (reals, complexes, quaternions, octonions, cliffordN) "
                             "or a custom algebra JSON file")
    common.add_argument("--tol", type=float, default=alg.DEFAULT_TOL, help="numerical tolerance")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--out", metavar="FILE", help="write the report to FILE")

    parser = _Parser(prog="slicereg", description="Slice functions over real alternative algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_alg = sub.add_parser("algebra", help="algebra facts")
    alg_sub = p_alg.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p_info = alg_sub.add_parser("info", parents=[common], help="dimension, validation, cone facts")
    p_info.add_argument("--builtin", help="builtin algebra name")
    p_info.add_argument("--custom", metavar="FILE", help="custom algebra JSON")
    p_info.add_argument("--samples", type=int, default=2000, help="random samples for cone facts")
    p_info.set_defaults(func=cmd_algebra_info)

    def with_poly(name, help_, func):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--poly", metavar="FILE", required=True,
                       help="polynomial JSON (file or inline): list of right coefficients")
        p.set_defaults(func=func)
        return p

    p = with_poly("eval", "evaluate a polynomial at a point", cmd_eval)
    p.add_argument("--point", required=True, help="element JSON: coordinates or {label: value}")
    p = with_poly("product", "star product of two polynomials", cmd_product)
    p.add_argument("--poly2", metavar="FILE", required=True, help="second polynomial")
    with_poly("normal", "normal function N(p) = p * p^c", cmd_normal)
    p = with_poly("admissible", "admissibility verdict (exit 2 if not admissible)", cmd_admissible)
    p.add_argument("--grid", type=int, default=32, help="sample grid size per axis")
    p = with_poly("roots", "classified zero set with multiplicities", cmd_roots)
    p.add_argument("--force-admissible", action="store_true",
                   help="skip the admissibility gate (results are then unverified)")
    p.add_argument("--sphere-tol", type=float, default=SPHERE_TOL,
                   help="tolerance for deciding that a sphere is contained in the zero set")

    p = sub.add_parser("cauchy", parents=[common], help="Cauchy / Pompeiu reconstruction")
    p.add_argument("--poly", metavar="FILE", help="polynomial JSON")
    p.add_argument("--stem", choices=sorted(_STEMS), help="builtin non-regular function")
    p.add_argument("--contour", required=True, metavar="FILE",
                   help="contour JSON {J, kind, center, radius, n_boundary, n_radial, n_angular}")
    p.add_argument("--point", required=True, help="element JSON")
    p.add_argument("--quad-n", type=int, help="override the number of boundary nodes")
    p.add_argument("--pompeiu", action="store_true", help="force the formula with area term")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("verify", parents=[common], help="deterministic property suites")
    p.add_argument("--suite", default="all", help=f"one of {sorted(SUITES)} or 'all'")
    p.add_argument("--max-degree", type=int, help="maximum degree for suites that take one")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except UsageError as exc:
        print(f"slicereg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidAlgebra as exc:
        emit({"valid": False, "error": str(exc)}, args.pretty, args.out)
        return EXIT_USAGE
    except AdmissibilityError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_ADMISSIBILITY
    except NumericalError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_NUMERICAL
    except SliceError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_USAGE
    emit(report, args.pretty, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
