"""The complexified algebra A (x) C, with elements ``w = x + i y``."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (DEFAULT_TOL, AlgebraSpec, Element, conj, in_normal_cone,
                      is_real, is_sqrt_minus_one, norm_elem, trace)
from .errors import AlgebraMismatch, DegenerateY, NotAZeroDivisor, NumericalError, Singular


@dataclass(frozen=True)
class CElement:
    re: Element
    im: Element

    def __post_init__(self):
        if not self.re.algebra.same_as(self.im.algebra):
            raise AlgebraMismatch("re and im parts live in different algebras")

    @property
    def algebra(self) -> AlgebraSpec:
        return self.re.algebra

    @classmethod
    def from_complex(cls, spec: AlgebraSpec, z: complex) -> CElement:
        z = complex(z)
        return cls(spec.real(z.real), spec.real(z.imag))

    @classmethod
    def real_part(cls, x: Element) -> CElement:
        return cls(x, x.algebra.zero())

    def __add__(self, other: CElement) -> CElement:
        return CElement(self.re + other.re, self.im + other.im)

    def __sub__(self, other: CElement) -> CElement:
        return CElement(self.re - other.re, self.im - other.im)

    def __neg__(self) -> CElement:
        return CElement(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, CElement):
            return cmul(self, other)
        if isinstance(other, (int, float, complex, np.number)):
            return cscale(self, complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return cscale(self, complex(other))
        return NotImplemented

    def norm_inf(self) -> float:
        return max(self.re.norm_inf(), self.im.norm_inf())

    def allclose(self, other: CElement, tol: float = DEFAULT_TOL) -> bool:
        return self.re.allclose(other.re, tol) and self.im.allclose(other.im, tol)

    def __repr__(self) -> str:
        return f"({self.re!r}) + i({self.im!r})"


def cscale(w: CElement, z: complex) -> CElement:
    """Multiply by a complex scalar ``z`` (central in A (x) C)."""
    a, b = z.real, z.imag
    return CElement(w.re * a - w.im * b, w.re * b + w.im * a)


def cmul(w: CElement, v: CElement) -> CElement:
    """``(x+iy)(x'+iy') = xx' - yy' + i(xy' + yx')``."""
    return CElement(w.re * v.re - w.im * v.im, w.re * v.im + w.im * v.re)


def c_antiinvolution(w: CElement) -> CElement:
    """``w^c = x^c + i y^c``."""
    return CElement(conj(w.re), conj(w.im))


def bar_conj(w: CElement) -> CElement:
    """``w-bar = x - i y``."""
    return CElement(w.re, -w.im)


def cn(w: CElement, tol: float = DEFAULT_TOL) -> CElement:
    """``cn(w) = w w^c``, cross-checked against ``n(x) - n(y) + i t(x y^c)``."""
    out = cmul(w, c_antiinvolution(w))
    x, y = w.re, w.im
    expanded = CElement(norm_elem(x) - norm_elem(y), trace(x * conj(y)))
    if not out.allclose(expanded, tol * (1.0 + w.norm_inf())):
        raise NumericalError("cn: product and expanded forms disagree; check the tables")
    return out


def is_complex_valued(w: CElement, tol: float = DEFAULT_TOL) -> bool:
    return is_real(w.re, tol) and is_real(w.im, tol)


def as_complex(w: CElement) -> complex:
    """The complex number ``u + iv`` of a complex-valued ``w``."""
    return complex(w.re.coords[0], w.im.coords[0])


def solve_K(w: CElement, tol: float = DEFAULT_TOL) -> Element:
    """The unique ``K`` in S_A with ``x + K y = 0`` for a zero divisor ``w``.

    ``K = -x y^c / n(y)``.  Requires ``cn(w) = 0`` (relative to
    ``1 + |w|^2``) and ``y`` in the normal cone.
    """
    s = w.norm_inf()
    if s == 0.0:
        raise NotAZeroDivisor("w = 0")
    c = cn(w, tol)
    if c.norm_inf() > tol * (1.0 + s * s):
        raise NotAZeroDivisor(f"cn(w) = {c!r} is not zero")
    x, y = w.re, w.im
    if y.norm_inf() <= tol * s or not in_normal_cone(y, tol):
        raise DegenerateY("the imaginary part of w is not a nonzero element of the normal cone")
    ny = float(norm_elem(y).coords[0])
    K = -(x * conj(y)) / ny
    if not is_sqrt_minus_one(K, tol * 10) or not (x + K * y).allclose(x.algebra.zero(), tol * 10):
        raise NumericalError(f"solve_K: K = {K!r} fails verification")
    return K


def c_inverse(w: CElement, tol: float = DEFAULT_TOL) -> CElement:
    """Explicit inverse when span{x, y} lies in N_A and ``cn(w) = u + iv != 0``."""
    c = cn(w, tol)
    if not is_complex_valued(c, tol):
        raise Singular("cn(w) is not complex-valued; the explicit inverse does not apply")
    z = as_complex(c)
    if abs(z) <= tol * (1.0 + w.norm_inf() ** 2):
        raise Singular("w is a zero divisor")
    return cscale(c_antiinvolution(w), 1.0 / z)
