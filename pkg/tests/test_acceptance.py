"""Acceptance criteria, one test each; the terminal summary lists PASS/FAIL per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import json

import numpy as np

from slicereg import algebra as alg
from slicereg import cli
from slicereg.builtins import make_builtin
from slicereg.cauchy import ContourSpec, cauchy_boundary, cauchy_pompeiu
from slicereg.errors import NonAssociativeOffSlice
from slicereg.sampling import random_sqrt_minus_one
from slicereg.slicefn import (DomainDescriptor, SlicePoly, conjugate_stem, is_admissible_sampled,
                              normal, poly_from_json, slice_eval)
from slicereg.verify import (cl3_closed_forms, cl3_cone_samples, octonion_alternativity,
                             suite_cones, suite_fta, suite_kernel, suite_leibniz, suite_normal_mult,
                             suite_representation, suite_slice)
from slicereg.zeros import all_zeros, divide_char, normal_poly_coeffs

C3 = make_builtin("clifford3")
H = make_builtin("quaternions")
O = make_builtin("octonions")


def P(spec, *coeffs):
    return poly_from_json(spec, list(coeffs))


def E(**labels):
    return C3.from_labels({("1" if k == "one" else k): v for k, v in labels.items()})


def _cli(capsys, *argv):
    code = cli.main(list(argv))
    return code, json.loads(capsys.readouterr().out)


# -- known polynomials ------------------------------------------------------------


def test_cl3_cone_closed_forms(criterion):
    agree = 0
    samples = cl3_cone_samples(10_000)
    kinds = {"Q": 0, "N": 0}
    for x in samples:
        u = x / x.norm_inf()
        x123, q, nform = cl3_closed_forms(u)
        in_q = abs(x123) <= 1e-9 and abs(q) <= 1e-9
        in_n = abs(nform) <= 1e-9
        kinds["Q"] += in_q
        kinds["N"] += in_n
        agree += alg.in_quadratic_cone(x) == in_q and alg.in_normal_cone(x) == in_n
    ok = agree == len(samples) and kinds["Q"] > 0 and kinds["N"] > kinds["Q"]
    assert criterion("1a", ok, f"{agree}/{len(samples)} agree ({kinds['Q']} in Q, {kinds['N']} in N)")


def test_star_product_linear_factors(criterion):
    rng = np.random.default_rng(11)
    x = SlicePoly.identity(H)
    worst = 0.0
    for _ in range(100):
        I, J = random_sqrt_minus_one(H, rng), random_sqrt_minus_one(H, rng)
        got = (x - SlicePoly.constant(I)) * (x - SlicePoly.constant(J))
        want = SlicePoly(H, [I * J, -(I + J), H.one()])
        worst = max(worst, float(np.abs(got.coeffs - want.coeffs).max()))
    assert criterion("1b", worst <= 1e-9, f"max coefficient error {worst:.1e}")


def test_paravector_product_chain(criterion):
    f = P(C3, {"e1": 1}, {"e2": 1})
    g = P(C3, {"e2": 1}, {"e3": 1})
    fg = f * g
    ok = (fg.allclose(P(C3, {"e12": 1}, {"1": -1, "e13": 1}, {"e23": 1}), 1e-9)
          and normal(f).allclose(P(C3, 1, 0, 1), 1e-9)
          and normal(g).allclose(P(C3, 1, 0, 1), 1e-9)
          and normal(fg).allclose(P(C3, 1, 0, 2, 0, 1), 1e-9))
    assert criterion("1c", ok, f"f*g = {fg!r}, N(f*g) = {normal(fg)!r}")


def test_division_example(criterion):
    fg = P(C3, {"e12": 1}, {"1": -1, "e13": 1}, {"e23": 1})
    d = divide_char(fg, C3.basis("e12"), assert_zero=True)
    recs = all_zeros(fg)
    ok = (d.quotient.allclose(P(C3, {"e23": 1}), 1e-9)
          and d.a.allclose(E(one=-1, e13=1), 1e-9)
          and d.b.allclose(E(e12=1, e23=-1), 1e-9)
          and len(recs) == 1 and recs[0].kind == "isolated" and recs[0].multiplicity == 2
          and recs[0].point.allclose(C3.basis("e12"), 1e-9))
    assert criterion("1d", ok, f"quotient {d.quotient!r}, zeros {[(r.kind, r.multiplicity) for r in recs]}")


def test_isolated_zeros(criterion):
    p = P(C3, {"e2": 1}, {"e3": 1}, 1)
    cn = normal_poly_coeffs(p)
    recs = all_zeros(p)
    y1 = E(one=0.5, e2=-0.5, e3=-0.5, e23=0.5)
    y2 = E(one=-0.5, e2=0.5, e3=-0.5, e23=0.5)
    pts = [r.point for r in recs]
    err = max(min(alg.sub(y, q).norm_inf() for q in pts) for y in (y1, y2))
    ok = (np.allclose(cn, [1, 0, 1, 0, 1], atol=1e-12) and len(recs) == 2
          and all(r.kind == "isolated" and r.multiplicity == 1 for r in recs) and err <= 1e-8)
    assert criterion("1e", ok, f"CN = {cn.tolist()}, max root error {err:.1e}")


def test_non_admissible_rejected(criterion, capsys):
    mixed, real_normal = '[{"e1":1},{"e23":1}]', '[1,{"e1":1,"e23":1},{"e123":1}]'
    code_mixed, _ = _cli(capsys, "roots", "--algebra", "clifford3", "--poly", mixed)
    code_real_normal, _ = _cli(capsys, "roots", "--algebra", "clifford3", "--poly", real_normal)
    _, adm = _cli(capsys, "admissible", "--algebra", "clifford3", "--poly", real_normal)
    p_rn = P(C3, 1, {"e1": 1, "e23": 1}, {"e123": 1})
    n_real = normal(p_rn).allclose(P(C3, 1, 0, 2, 0, 1), 1e-12)
    ok = (code_mixed == 2 and code_real_normal == 2 and n_real and adm["normal_real"]
          and not is_admissible_sampled(p_rn) and adm["method"] == "sampled")
    assert criterion("1f", ok, f"exit codes {code_mixed}, {code_real_normal}; real-normal example: N real = {n_real}, sampled admissible = False")


def test_real_zeros(criterion):
    recs = all_zeros(P(C3, -1, 0, 1))
    got = sorted((r.kind, r.alpha, r.multiplicity) for r in recs)
    ok = got == [("real", -1.0, 1), ("real", 1.0, 1)] and all(r.point.allclose(C3.real(r.alpha), 0.0) for r in recs)
    assert criterion("1g", ok, f"{got}")


# -- property suites -------------------------------------------------------------


def _prop(res, name_start):
    return [p for p in res.properties if p.name.startswith(name_start)]


def test_quadratic_identity(criterion):
    (p,) = _prop(suite_cones(closed_form_samples=0), "quadratic identity")
    ok = p.ok and p.passed >= 5000
    assert criterion("2a", ok, f"{p.passed} pass, {p.failed} fail, max error {p.max_error:.1e}")


def test_octonion_alternativity(criterion):
    p = octonion_alternativity()
    ok = p.ok and p.passed == 512 and p.max_error == 0.0
    assert criterion("2b", ok, f"{p.passed}/512 triples exact")


def test_slice_well_defined_and_split(criterion):
    res = suite_slice()
    ok = res.ok and all(p.passed >= 3000 for p in res.properties)
    worst = max(p.max_error for p in res.properties)
    assert criterion("2c", ok, f"{[p.passed for p in res.properties]} pass, max error {worst:.1e}")


def test_representation_formula(criterion):
    (p,) = suite_representation().properties
    ok = p.ok and p.passed >= 2000
    assert criterion("2d", ok, f"{p.passed} pass, max error {p.max_error:.1e}")


def test_leibniz(criterion):
    (p,) = suite_leibniz().properties
    ok = p.ok and p.passed >= 2000
    assert criterion("2e", ok, f"{p.passed} pass, max error {p.max_error:.1e}")


def test_normal_multiplicativity(criterion):
    props = _prop(suite_normal_mult(), "N(f g) = N(f) N(g)")
    ok = len(props) == 3 and all(p.ok and p.passed == 100 for p in props)
    worst = max(p.max_error for p in props)
    assert criterion("2f", ok, f"3 algebras x 100 pairs, max relative error {worst:.1e}")


def test_fta(criterion):
    res = suite_fta()
    total, bound = _prop(res, "sum of multiplicities")[0], _prop(res, "r + i + 2s")[0]
    ok = total.ok and bound.ok and total.passed >= 200
    assert criterion("2g", ok, f"{total.passed} polynomials, {total.failed} mismatches, {bound.failed} bound violations")


def test_kernel_identity(criterion):
    props = _prop(suite_kernel(), "C(x, y)(y - x) = 1")
    ok = len(props) == 3 and all(p.ok and p.passed == 100 for p in props)
    worst = max(p.max_error for p in props)
    assert criterion("2h", ok, f"3 algebras x 100 pairs, max error {worst:.1e}")


# -- quadrature ------------------------------------------------------------------


def _boundary_errors(n_nodes, polys, points, J):
    con = ContourSpec(J, DomainDescriptor.disk(0.0, 2.0), n_boundary=n_nodes)
    return max((cauchy_boundary(f, con, x) - slice_eval(f, x)).norm_inf() for f in polys for x in points)


def test_boundary_reconstruction(criterion):
    rng = np.random.default_rng(31)
    polys = [SlicePoly(H, rng.uniform(-1, 1, size=(6, 4))) for _ in range(5)]
    points = []
    for _ in range(20):
        r, t = 1.6 * np.sqrt(rng.uniform()), rng.uniform(0, 2 * np.pi)
        points.append(r * np.cos(t) + random_sqrt_minus_one(H, rng) * (r * np.sin(t)))
    J = H.basis("i")
    e256 = _boundary_errors(256, polys, points, J)
    e128 = _boundary_errors(128, polys, points, J)
    ok = e256 <= 1e-9 and e128 >= 4 * e256
    assert criterion("3a", ok, f"max error {e256:.1e} at 256 nodes, {e128:.1e} at 128 (ratio {e128 / max(e256, 1e-300):.1e})")


def test_pompeiu_conjugate(criterion):
    dom = DomainDescriptor.disk(0.0, 1.0)
    f = conjugate_stem(H, dom)
    con = ContourSpec(H.basis("i"), dom)
    rng = np.random.default_rng(32)
    worst = 0.0
    for k in range(20):
        r, t = 0.9 * np.sqrt(rng.uniform()), rng.uniform(0, 2 * np.pi)
        I = H.basis("i") if k % 2 == 0 else random_sqrt_minus_one(H, rng)
        x = r * np.cos(t) + I * (r * np.sin(t))
        worst = max(worst, (cauchy_pompeiu(f, con, x) - alg.conj(x)).norm_inf())
    assert criterion("3b", worst <= 1e-6, f"max error {worst:.1e} at 20 points")


def test_octonion_gate(criterion):
    con = ContourSpec(O.basis(1), DomainDescriptor.disk(0.0, 2.0))
    off = 0.3 + 0.7 * O.basis(6)
    nonreal = SlicePoly(O, [O.basis(3), O.basis(2), O.one()])
    try:
        cauchy_boundary(nonreal, con, off)
        raised = False
    except NonAssociativeOffSlice:
        raised = True
    real = SlicePoly(O, [0.5, -1.0, 2.0, 1.0])
    err = (cauchy_boundary(real, con, off) - slice_eval(real, off)).norm_inf()
    ok = raised and err <= 1e-9
    assert criterion("3c", ok, f"non-real f raises = {raised}; real f error {err:.1e}")
