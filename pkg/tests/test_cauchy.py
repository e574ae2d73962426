import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicereg import algebra as alg
from slicereg.builtins import make_builtin
from slicereg.cauchy import (ContourSpec, cauchy_boundary, cauchy_kernel, cauchy_pompeiu,
                             representation_via_kernel_check)
from slicereg.errors import (NonAssociativeOffSlice, NotSliceRegular, NotSqrtMinusOne,
                             OnSingularSphere, OutsideDomain)
from slicereg.sampling import random_quadratic_cone, random_sqrt_minus_one
from slicereg.slicefn import (DomainDescriptor, SlicePoly, conjugate_stem, locally_constant_stem,
                              modulus_squared_stem, slice_eval)

H = make_builtin("quaternions")
O = make_builtin("octonions")
C3 = make_builtin("clifford3")


def contour(spec, radius=2.0, **kw):
    return ContourSpec(spec.basis(1), DomainDescriptor.disk(0.0, radius), **kw)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["quaternions", "octonions", "clifford3"]), st.integers(0, 2**32 - 1))
def test_kernel_inverts_on_common_slice(name, seed):
    spec = make_builtin(name)
    rng = np.random.default_rng(seed)
    J = random_sqrt_minus_one(spec, rng)
    a, b, c, d = rng.normal(size=4)
    x, y = a + J * b, c + J * d
    C = cauchy_kernel(x, y)
    assert (C * (y - x)).allclose(spec.one(), 1e-9 * (1 + C.norm_inf() * (y - x).norm_inf()))
    assert C.allclose(alg.inverse(y - x), 1e-9)


def test_kernel_singular_sphere():
    y = 1 + H.basis("i")
    with pytest.raises(OnSingularSphere):
        cauchy_kernel(1 + H.basis("j"), y)  # same sphere, different slice


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_boundary_reconstruction_of_polys(seed):
    rng = np.random.default_rng(seed)
    f = SlicePoly(H, rng.uniform(-1, 1, size=(6, 4)))
    x = random_quadratic_cone(H, rng, scale=0.8)
    if abs(complex(*alg.slice_coords(x)[:2])) >= 1.8:
        return
    got = cauchy_boundary(f, contour(H), x)
    assert got.allclose(slice_eval(f, x), 1e-9)


def test_reconstruction_on_and_off_slice_over_cl3():
    f = SlicePoly(C3, np.random.default_rng(1).uniform(-1, 1, size=(4, 8)))
    con = ContourSpec(C3.basis("e1"), DomainDescriptor.disk(0.0, 2.0))
    for x in (0.3 + 0.5 * C3.basis("e1"), 0.3 - 0.5 * C3.basis("e1"), 0.1 + 0.7 * C3.basis("e23")):
        lhs, rhs = representation_via_kernel_check(f, con, x)
        assert lhs.allclose(slice_eval(f, x), 1e-9) and lhs.allclose(rhs, 1e-9)


def test_node_halving_increases_error():
    f = SlicePoly(H, np.random.default_rng(7).uniform(-1, 1, size=(6, 4)))
    x = 1.2 + 1.1 * H.basis("j")
    e = [(cauchy_boundary(f, contour(H, n_boundary=n), x) - slice_eval(f, x)).norm_inf()
         for n in (64, 128)]
    assert e[0] >= 4 * e[1]


@pytest.mark.parametrize("stem", [conjugate_stem, modulus_squared_stem])
def test_pompeiu_on_unit_disk(stem):
    dom = DomainDescriptor.disk(0.0, 1.0)
    f = stem(H, dom)
    con = ContourSpec(H.basis("i"), dom)
    for x in (0.2 + 0.3 * H.basis("i"), -0.4 - 0.2 * H.basis("i"), 0.1 + 0.5 * H.basis("k")):
        assert cauchy_pompeiu(f, con, x).allclose(slice_eval(f, x), 1e-6)


def test_pompeiu_equals_boundary_for_polys():
    f = SlicePoly(H, [H.basis("j"), H.one(), H.basis("k")])
    x = 0.3 + 0.4 * H.basis("i")
    con = contour(H)
    assert cauchy_pompeiu(f, con, x).allclose(cauchy_boundary(f, con, x), 1e-12)


def test_boundary_formula_rejects_non_regular():
    dom = DomainDescriptor.disk(0.0, 1.0)
    with pytest.raises(NotSliceRegular):
        cauchy_boundary(conjugate_stem(H, dom), ContourSpec(H.basis("i"), dom), 0.1 + 0.1 * H.basis("i"))


def test_outside_domain():
    with pytest.raises(OutsideDomain):
        cauchy_boundary(SlicePoly(H, [1, 1]), contour(H, 1.0), 1.5 + 0.1 * H.basis("i"))


def test_octonion_gate():
    con = ContourSpec(O.basis(1), DomainDescriptor.disk(0.0, 2.0))
    off = 0.2 + 0.6 * O.basis(4)
    nonreal = SlicePoly(O, [O.basis(2), O.one(), O.basis(5)])
    with pytest.raises(NonAssociativeOffSlice):
        cauchy_boundary(nonreal, con, off)
    on = 0.2 + 0.6 * O.basis(1)
    assert cauchy_boundary(nonreal, con, on).allclose(slice_eval(nonreal, on), 1e-9)
    real = SlicePoly(O, [1.0, -2.0, 0.5, 1.0])
    assert cauchy_boundary(real, con, off).allclose(slice_eval(real, off), 1e-9)


def test_locally_constant_function_on_conjugate_disks():
    J = C3.basis("e1")
    f = locally_constant_stem(C3, J)
    con = ContourSpec(J, f.domain, n_boundary=64)
    for x in (0.2 + 2.1 * J, 0.2 - 2.1 * J, 0.1 + 1.8 * C3.basis("e2")):
        assert cauchy_boundary(f, con, x).allclose(slice_eval(f, x), 1e-9)


def test_contour_json_round_trip_and_validation():
    con = ContourSpec(H.basis("j"), DomainDescriptor.disk(0.5, 1.5), 128, 32, 64)
    back = ContourSpec.from_json(H, con.to_json())
    assert back.to_json() == con.to_json()
    with pytest.raises(NotSqrtMinusOne):
        ContourSpec(H.basis("j") * 2.0, DomainDescriptor.disk(0.0, 1.0))
    with pytest.raises(ValueError):
        ContourSpec(H.basis("j"), DomainDescriptor.whole_plane())
    with pytest.raises(ValueError):
        ContourSpec(H.basis("j"), DomainDescriptor.disk(0.0, 1.0), n_boundary=4)
