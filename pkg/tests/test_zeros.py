import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicereg import algebra as alg
from slicereg.builtins import make_builtin
from slicereg.errors import NonZeroRemainder, NotAdmissible, NotARoot
from slicereg.sampling import random_admissible_coeffs
from slicereg.slicefn import SlicePoly, poly_from_json, slice_eval, spherical_derivative
from slicereg.zeros import (all_zeros, char_poly, classify_sphere, divide_char, divide_linear_real,
                            normal_poly_coeffs, zeros_of_product_check)

C3 = make_builtin("clifford3")
H = make_builtin("quaternions")


def P(spec, *coeffs):
    return poly_from_json(spec, list(coeffs))


def E(**labels):
    return C3.from_labels({("1" if k == "one" else k): v for k, v in labels.items()})


def test_char_poly():
    y = 1 + 2 * H.basis("i")
    cp = char_poly(y)
    assert (cp.t_y, cp.n_y) == (2.0, 5.0)
    assert cp.sphere == (1.0, 2.0)
    assert cp(complex(1, 2)) == 0


def test_division_example():
    fg = P(C3, {"e12": 1}, {"1": -1, "e13": 1}, {"e23": 1})
    y = C3.basis("e12")
    d = divide_char(fg, y, assert_zero=True)
    assert d.quotient.allclose(P(C3, {"e23": 1}), 1e-12)
    assert d.a.allclose(E(one=-1, e13=1), 1e-12)
    assert d.b.allclose(E(e12=1, e23=-1), 1e-12)
    assert d.a.allclose(spherical_derivative(fg, y), 1e-12)


def test_product_zero_is_isolated_double():
    fg = P(C3, {"e12": 1}, {"1": -1, "e13": 1}, {"e23": 1})
    (rec,) = all_zeros(fg)
    assert rec.kind == "isolated" and rec.multiplicity == 2
    assert rec.point.allclose(C3.basis("e12"), 1e-8)


def test_isolated_zeros_of_quadratic():
    p = P(C3, {"e2": 1}, {"e3": 1}, 1)
    assert np.allclose(normal_poly_coeffs(p), [1, 0, 1, 0, 1])
    recs = all_zeros(p)
    y1 = E(one=0.5, e2=-0.5, e3=-0.5, e23=0.5)
    y2 = E(one=-0.5, e2=0.5, e3=-0.5, e23=0.5)
    assert [r.kind for r in recs] == ["isolated", "isolated"]
    assert [r.multiplicity for r in recs] == [1, 1]
    assert recs[0].point.allclose(y2, 1e-8) and recs[1].point.allclose(y1, 1e-8)
    for y in (y1, y2):
        assert alg.in_quadratic_cone(y)
        assert slice_eval(p, y).norm_inf() < 1e-12


def test_real_zeros_of_x2_minus_1():
    recs = all_zeros(P(C3, -1, 0, 1))
    assert [(r.kind, r.alpha, r.multiplicity) for r in recs] == [("real", -1.0, 1), ("real", 1.0, 1)]


def test_spherical_zero_of_x2_plus_1():
    (rec,) = all_zeros(P(H, 1, 0, 1))
    assert rec.kind == "spherical" and rec.multiplicity == 2
    assert (rec.alpha, rec.beta) == pytest.approx((0.0, 1.0))


def test_real_root_multiplicity():
    # (x - 2)^3 (x + 1) with real coefficients over H
    c = np.polynomial.polynomial.polyfromroots([2, 2, 2, -1])
    recs = all_zeros(P(H, *c.tolist()))
    assert [(round(r.alpha, 6), r.multiplicity) for r in recs] == [(-1.0, 1), (2.0, 3)]


def test_mixed_spherical_and_isolated():
    # (x^2 + 1) * (x - (1 + j)) over H: one spherical sphere and one isolated zero
    y = 1 + H.basis("j")
    p = P(H, 1, 0, 1) * SlicePoly.linear(H.one(), -y)
    recs = all_zeros(p)
    kinds = sorted((r.kind, r.multiplicity) for r in recs)
    assert kinds == [("isolated", 1), ("spherical", 2)]
    iso = next(r for r in recs if r.kind == "isolated")
    assert iso.point.allclose(y, 1e-8)


def test_non_admissible_rejected():
    with pytest.raises(NotAdmissible):
        all_zeros(P(C3, {"e1": 1}, {"e23": 1}))
    with pytest.raises(NotAdmissible):
        all_zeros(P(C3, 1, {"e1": 1, "e23": 1}, {"e123": 1}))


def test_classify_rejects_non_roots():
    p = P(C3, -1, 0, 1)
    with pytest.raises(NotARoot):
        classify_sphere(p, 2j)


def test_divide_linear_real():
    p = P(H, -2, 1) * P(H, {"i": 1}, {"j": 1})
    g = divide_linear_real(p, 2.0)
    assert g.allclose(P(H, {"i": 1}, {"j": 1}), 1e-12)
    with pytest.raises(NonZeroRemainder):
        divide_linear_real(p, 1.0)


def test_product_zero_spheres():
    f = P(C3, {"e1": 1}, {"e2": 1})
    g = P(C3, {"e2": 1}, {"e3": 1})
    rep = zeros_of_product_check(f, g)
    assert rep.equal and rep.product_spheres == [(0.0, 1.0)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.booleans(), st.integers(0, 2**32 - 1))
def test_fta_on_paravector_polys(deg, integer, seed):
    p = SlicePoly(C3, random_admissible_coeffs(C3, np.random.default_rng(seed), deg, integer=integer))
    recs = all_zeros(p)
    assert sum(r.multiplicity for r in recs) == deg
    r = sum(x.kind == "real" for x in recs)
    i = sum(x.kind == "isolated" for x in recs)
    s = sum(x.kind == "spherical" for x in recs)
    assert r + i + 2 * s <= deg
    for x in recs:
        if x.point is not None:
            scale = 1 + np.abs(p.coeffs).max() * (1 + abs(complex(x.alpha, x.beta))) ** deg
            assert slice_eval(p, x.point).norm_inf() <= 1e-6 * scale


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_fta_over_quaternions_and_octonions(deg, seed):
    rng = np.random.default_rng(seed)
    for name in ("quaternions", "octonions"):
        spec = make_builtin(name)
        c = rng.normal(size=(deg + 1, spec.dim))
        c[-1] = 0.0
        c[-1, 0] = 1.0
        assert sum(r.multiplicity for r in all_zeros(SlicePoly(spec, c))) == deg


def test_sixfold_real_root():
    # N(p) = (x - 2)^12 stresses the clustering of the root finder
    c = np.polynomial.polynomial.polyfromroots([2.0] * 6)
    (rec,) = all_zeros(P(H, *c.tolist()))
    assert rec.kind == "real" and rec.multiplicity == 6 and rec.alpha == pytest.approx(2.0)
