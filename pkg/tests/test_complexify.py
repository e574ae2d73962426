import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicereg import algebra as alg
from slicereg.builtins import make_builtin
from slicereg.complexify import (CElement, as_complex, bar_conj, c_antiinvolution, c_inverse,
                                 cmul, cn, is_complex_valued, solve_K)
from slicereg.errors import DegenerateY, NotAZeroDivisor
from slicereg.sampling import random_sqrt_minus_one


def rand_c(spec, rng):
    return CElement(alg.Element(spec, rng.normal(size=spec.dim)),
                    alg.Element(spec, rng.normal(size=spec.dim)))


def test_complex_unit_squares_to_minus_one():
    H = make_builtin("quaternions")
    i = CElement.from_complex(H, 1j)
    assert (i * i).allclose(CElement.from_complex(H, -1.0))
    assert as_complex(CElement.from_complex(H, 2 - 3j)) == 2 - 3j


def test_cn_expanded_form():
    H = make_builtin("quaternions")
    rng = np.random.default_rng(0)
    w = rand_c(H, rng)
    x, y = w.re, w.im
    want = CElement(alg.norm_elem(x) - alg.norm_elem(y), alg.trace(x * alg.conj(y)))
    assert cn(w).allclose(want)
    assert is_complex_valued(cn(w))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["quaternions", "octonions"]), st.integers(0, 2**32 - 1))
def test_cn_is_multiplicative_on_composition_algebras(name, seed):
    spec = make_builtin(name)
    rng = np.random.default_rng(seed)
    v, w = rand_c(spec, rng), rand_c(spec, rng)
    assert cn(cmul(v, w)).allclose(cmul(cn(v), cn(w)), 1e-10)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_c_inverse(seed):
    H = make_builtin("quaternions")
    w = rand_c(H, np.random.default_rng(seed))
    one = CElement.from_complex(H, 1.0)
    assert cmul(w, c_inverse(w)).allclose(one, 1e-9)


def test_involutions_commute_and_are_involutive():
    C3 = make_builtin("clifford3")
    w = rand_c(C3, np.random.default_rng(3))
    assert bar_conj(c_antiinvolution(w)).allclose(c_antiinvolution(bar_conj(w)), 0.0)
    assert bar_conj(bar_conj(w)).allclose(w, 0.0)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["quaternions", "clifford3"]), st.integers(0, 2**32 - 1))
def test_solve_K_on_zero_divisors(name, seed):
    # w = a(1 - iJ): x + K y = a - a K J vanishes for K = -J
    spec = make_builtin(name)
    rng = np.random.default_rng(seed)
    J = random_sqrt_minus_one(spec, rng)
    a = float(rng.uniform(0.5, 2.0))
    w = CElement(spec.real(a), J * (-a))
    K = solve_K(w)
    assert alg.is_sqrt_minus_one(K)
    assert (w.re + K * w.im).allclose(spec.zero(), 1e-9)
    assert K.allclose(-J, 1e-9)


def test_solve_K_rejects_invertible_and_degenerate():
    C3 = make_builtin("clifford3")
    with pytest.raises(NotAZeroDivisor):
        solve_K(CElement.from_complex(C3, 1 + 1j))
    with pytest.raises(NotAZeroDivisor):
        solve_K(CElement.from_complex(C3, 0))
    # y = 1 + e123 is outside the normal cone; w = e1 y + i y still has cn(w) = 0
    y = 1 + C3.basis("e123")
    w = CElement(C3.basis("e1") * y, y)
    assert cn(w).norm_inf() == 0.0
    with pytest.raises(DegenerateY):
        solve_K(w)
