"""Stem functions and the slice functions they induce.

A slice function is either a :class:`SlicePoly` (right coefficients
``sum x^j a_j``, defined on the whole quadratic cone) or a
:class:`StemClosure` wrapping a user callback ``z -> F(z)`` into A (x) C on a
conjugation-symmetric planar domain.  In both cases the value at
``x = alpha + beta J`` is ``F1(z) + J F2(z)`` with ``z = alpha + i beta``.

Closures must be pure: the library calls them repeatedly and never expects
them to keep state.
"""
from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Callable, Union

import numpy as np

from .algebra import (DEFAULT_TOL, AlgebraSpec, Element, conj, decompose, inverse,
                      is_real, is_sqrt_minus_one, slice_coords, subspace_in_normal_cone)
from .complexify import CElement, bar_conj, c_antiinvolution, cmul, cscale
from .errors import (AlgebraMismatch, MissingDerivativeCallback, NotIntrinsic,
                     NotSqrtMinusOne, OutOfDomain, RealPointForDerivative, SliceError)

# bounding box used to sample the whole plane
WHOLE_PLANE_BOX = 2.0


@dataclass(frozen=True)
class DomainDescriptor:
    """A conjugation-symmetric planar domain D.

    ``disk`` has a real center; ``conj_pair_disks`` is the disk about
    ``center`` (with ``Im center > radius``) together with its mirror image.
    """

    kind: str
    center: complex = 0j
    radius: float = math.inf

    def __post_init__(self):
        c = complex(self.center)
        object.__setattr__(self, "center", c)
        if self.kind == "disk":
            if c.imag != 0 or not self.radius > 0:
                raise ValueError("disk needs a real center and a positive radius")
        elif self.kind == "conj_pair_disks":
            if not (0 < self.radius < c.imag):
                raise ValueError("conj_pair_disks needs 0 < radius < Im(center)")
        elif self.kind != "whole_plane":
            raise ValueError(f"unknown domain kind {self.kind!r}")

    @classmethod
    def disk(cls, center: float, radius: float) -> DomainDescriptor:
        return cls("disk", complex(center), float(radius))

    @classmethod
    def conj_pair_disks(cls, center: complex, radius: float) -> DomainDescriptor:
        return cls("conj_pair_disks", complex(center), float(radius))

    @classmethod
    def whole_plane(cls) -> DomainDescriptor:
        return cls("whole_plane")

    def circles(self) -> list[tuple[complex, float]]:
        if self.kind == "disk":
            return [(self.center, self.radius)]
        if self.kind == "conj_pair_disks":
            return [(self.center, self.radius), (self.center.conjugate(), self.radius)]
        raise ValueError("the whole plane has no boundary circles")

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        if self.kind == "whole_plane":
            return True
        return any(abs(z - c) < r - margin for c, r in self.circles())

    def meets_real_axis(self) -> bool:
        return self.kind != "conj_pair_disks"

    def grid(self, n: int = 32, shrink: float = 0.9) -> np.ndarray:
        """Deterministic ``n x n`` sample of interior points, symmetric under conjugation."""
        if self.kind == "whole_plane":
            boxes = [(0j, WHOLE_PLANE_BOX)]
        else:
            boxes = [(c, r * shrink) for c, r in self.circles()]
        t = np.linspace(-1.0, 1.0, n)
        pts = []
        for c, r in boxes:
            a, b = np.meshgrid(c.real + r * t, c.imag + r * t)
            z = (a + 1j * b).ravel()
            if self.kind != "whole_plane":
                z = z[np.abs(z - c) <= r]
            pts.append(z)
        return np.concatenate(pts)

    def real_points(self, n: int = 32, shrink: float = 0.9) -> np.ndarray:
        if self.kind == "conj_pair_disks":
            return np.zeros(0)
        c, r = (0.0, WHOLE_PLANE_BOX) if self.kind == "whole_plane" else (self.center.real, self.radius * shrink)
        return c + r * np.linspace(-1.0, 1.0, n)


WHOLE_PLANE = DomainDescriptor.whole_plane()


class SlicePoly:
    """Polynomial ``p(x) = sum_j x^j a_j`` with right coefficients in A.

    ``coeffs`` is a read-only ``(m+1, d)`` array; exact trailing zero
    coefficients are trimmed.  ``*`` between two polynomials is the slice
    (star) product; ``*`` with a real number scales.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: AlgebraSpec, coeffs):
        if isinstance(coeffs, (list, tuple)) and any(
                isinstance(c, (Element, int, float, np.number)) for c in coeffs):
            rows = []
            for c in coeffs:
                if isinstance(c, Element):
                    if not c.algebra.same_as(algebra):
                        raise AlgebraMismatch("coefficient from a different algebra")
                    rows.append(c.coords)
                else:
                    rows.append(algebra.real(float(c)).coords)
            arr = np.array(rows, dtype=float)
        else:
            arr = np.array(coeffs, dtype=float)
        if arr.size == 0:
            arr = np.zeros((1, algebra.dim))
        arr = arr.reshape(-1, algebra.dim)
        nz = np.flatnonzero(np.any(arr != 0, axis=1))
        arr = arr[: (nz[-1] + 1 if nz.size else 1)].copy()
        arr.setflags(write=False)
        self.algebra = algebra
        self.coeffs = arr

    domain = WHOLE_PLANE

    @classmethod
    def constant(cls, a: Element) -> SlicePoly:
        return cls(a.algebra, [a])

    @classmethod
    def identity(cls, spec: AlgebraSpec) -> SlicePoly:
        return cls(spec, [spec.zero(), spec.one()])

    @classmethod
    def linear(cls, a: Element, b: Element) -> SlicePoly:
        """``x a + b``."""
        return cls(a.algebra, [b, a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Element:
        if j > self.degree:
            return self.algebra.zero()
        return Element(self.algebra, self.coeffs[j])

    def elements(self) -> list[Element]:
        return [Element(self.algebra, c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def _pad(self, other: SlicePoly) -> tuple[np.ndarray, np.ndarray]:
        if not self.algebra.same_as(other.algebra):
            raise AlgebraMismatch("polynomials over different algebras")
        m = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros((m, self.algebra.dim))
        b = np.zeros((m, self.algebra.dim))
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return a, b

    def __add__(self, other: SlicePoly) -> SlicePoly:
        a, b = self._pad(other)
        return SlicePoly(self.algebra, a + b)

    def __sub__(self, other: SlicePoly) -> SlicePoly:
        a, b = self._pad(other)
        return SlicePoly(self.algebra, a - b)

    def __neg__(self) -> SlicePoly:
        return SlicePoly(self.algebra, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, SlicePoly):
            return sprod(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return SlicePoly(self.algebra, self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return SlicePoly(self.algebra, self.coeffs * float(other))
        return NotImplemented

    def __call__(self, x: Element, tol: float = DEFAULT_TOL) -> Element:
        return slice_eval(self, x, tol)

    def allclose(self, other: SlicePoly, tol: float = DEFAULT_TOL) -> bool:
        a, b = self._pad(other)
        scale = 1.0 + max(float(np.abs(a).max()), float(np.abs(b).max()))
        return float(np.abs(a - b).max()) <= tol * scale

    def __repr__(self) -> str:
        return f"SlicePoly({format_poly(self)})"


def format_poly(p: SlicePoly) -> str:
    """Human form with coefficients on the right, e.g. ``x^2 + x(e13 - 1) + e12``."""
    from .algebra import format_element

    terms = []
    for j in range(p.degree, -1, -1):
        c = p.coeff(j)
        if not np.any(c.coords):
            continue
        s = format_element(c)
        power = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        if not power:
            terms.append(s)
        elif s == "1":
            terms.append(power)
        elif s == "-1":
            terms.append("-" + power)
        elif is_real(c, 0.0):
            terms.append(s + power)
        elif " " in s or s.startswith("-"):
            terms.append(f"{power}({s})")
        else:
            terms.append(power + s)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True, eq=False)
class StemClosure:
    """A stem given by a callback ``eval(z) -> CElement`` on ``domain``.

    If ``declared_intrinsic`` is true the identity ``F(conj z) = bar(F(z))`` is
    sampled at construction and :class:`NotIntrinsic` raised on failure.  A
    closure declared non-intrinsic is evaluated through its intrinsic part
    ``(F(z) + bar(F(conj z))) / 2``, which induces the same slice function.
    """

    algebra: AlgebraSpec
    eval: Callable[[complex], CElement]
    domain: DomainDescriptor = WHOLE_PLANE
    declared_intrinsic: bool = True
    dz_eval: Callable[[complex], CElement] | None = None
    dzbar_eval: Callable[[complex], CElement] | None = None
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if check and self.declared_intrinsic:
            for z in self.domain.grid(5):
                try:
                    a = self.eval(complex(z).conjugate())
                    b = bar_conj(self.eval(complex(z)))
                except RealPointForDerivative:
                    continue
                if not a.allclose(b, 1e-8):
                    raise NotIntrinsic(f"F(conj z) != bar(F(z)) at z = {z}")

    def value(self, z: complex) -> CElement:
        if not self.declared_intrinsic:
            w = self.eval(z)
            v = bar_conj(self.eval(z.conjugate()))
            return cscale(w + v, 0.5)
        return self.eval(z)

    def __call__(self, x: Element, tol: float = DEFAULT_TOL) -> Element:
        return slice_eval(self, x, tol)

    def __mul__(self, other):
        return sprod(self, other)


SliceFunction = Union[SlicePoly, StemClosure]


def zpow_components(n: int, z: complex) -> tuple[float, float]:
    """``z^n = A_n + i B_n``."""
    w = complex(z) ** n if n else 1 + 0j
    return w.real, w.imag


def _powers(zs: np.ndarray, m: int) -> np.ndarray:
    out = np.ones((len(zs), m + 1), dtype=complex)
    for j in range(1, m + 1):
        out[:, j] = out[:, j - 1] * zs
    return out


def stem_eval(f: SliceFunction, z: complex) -> CElement:
    z = complex(z)
    if isinstance(f, SlicePoly):
        pw = _powers(np.array([z]), f.degree)[0]
        return CElement(Element(f.algebra, pw.real @ f.coeffs), Element(f.algebra, pw.imag @ f.coeffs))
    if not f.domain.contains(z):
        raise OutOfDomain(f"z = {z} is outside {f.domain}")
    return f.value(z)


def stem_eval_many(f: SliceFunction, zs) -> tuple[np.ndarray, np.ndarray]:
    """Stem values at many points as ``(F1, F2)`` coordinate arrays of shape ``(N, d)``."""
    zs = np.asarray(zs, dtype=complex).ravel()
    if isinstance(f, SlicePoly):
        pw = _powers(zs, f.degree)
        return pw.real @ f.coeffs, pw.imag @ f.coeffs
    vals = [stem_eval(f, z) for z in zs]
    d = f.algebra.dim
    re = np.array([v.re.coords for v in vals]).reshape(-1, d)
    im = np.array([v.im.coords for v in vals]).reshape(-1, d)
    return re, im


def slice_eval_at(f: SliceFunction, alpha: float, beta: float, J: Element | None) -> Element:
    """``F1(alpha + i beta) + J F2(alpha + i beta)``; ``J`` may be None when ``beta == 0``."""
    w = stem_eval(f, complex(alpha, beta))
    if J is None:
        return w.re
    return w.re + J * w.im


def slice_eval(f: SliceFunction, x: Element, tol: float = DEFAULT_TOL) -> Element:
    if not f.algebra.same_as(x.algebra):
        raise AlgebraMismatch("point and function live in different algebras")
    alpha, beta, J = slice_coords(x, tol)
    return slice_eval_at(f, alpha, beta, J)


def spherical_value(f: SliceFunction, x: Element, tol: float = DEFAULT_TOL) -> Element:
    return (slice_eval(f, x, tol) + slice_eval(f, conj(x), tol)) * 0.5


def spherical_derivative(f: SliceFunction, x: Element, tol: float = DEFAULT_TOL) -> Element:
    if is_real(x, tol):
        raise RealPointForDerivative(f"{x!r} is real")
    _, im = decompose(x, tol)
    return inverse(im, tol) * ((slice_eval(f, x, tol) - slice_eval(f, conj(x), tol)) * 0.5)


def representation(f_J: Element, f_K: Element, J: Element, K: Element, I: Element,
                   tol: float = DEFAULT_TOL) -> Element:
    """Value at ``alpha + beta I`` from the values at ``alpha + beta J`` and ``alpha + beta K``.

    Uses ``(I-K)((J-K)^-1 f_J) - (I-J)((J-K)^-1 f_K)``, and the simpler
    ``(f_J + f_K)/2 - I(J(f_J - f_K))/2`` when ``K = -J``.
    """
    for name, u in (("I", I), ("J", J), ("K", K)):
        if not is_sqrt_minus_one(u, tol * 10):
            raise NotSqrtMinusOne(f"{name} = {u!r} is not a square root of -1")
    if (J + K).allclose(J.algebra.zero(), tol):
        return (f_J + f_K) * 0.5 - I * (J * (f_J - f_K)) * 0.5
    D = inverse(J - K, tol)
    return (I - K) * (D * f_J) - (I - J) * (D * f_K)


def representation_eval(f: SliceFunction, alpha: float, beta: float, J: Element,
                        K: Element, I: Element, tol: float = DEFAULT_TOL) -> Element:
    """Evaluate ``f`` at ``alpha + beta I`` through values on the slices of J and K."""
    return representation(slice_eval_at(f, alpha, beta, J), slice_eval_at(f, alpha, beta, K),
                          J, K, I, tol)


# -- products ---------------------------------------------------------------

def _as_closure(f: SliceFunction) -> StemClosure:
    if isinstance(f, StemClosure):
        return f
    d = ddx(f)
    return StemClosure(f.algebra, lambda z, f=f: stem_eval(f, z), WHOLE_PLANE, True,
                       dz_eval=lambda z, d=d: stem_eval(d, z),
                       dzbar_eval=lambda z, s=f.algebra: CElement.from_complex(s, 0),
                       check=False)


def _common_domain(a: DomainDescriptor, b: DomainDescriptor) -> DomainDescriptor:
    if a.kind == "whole_plane":
        return b
    if b.kind == "whole_plane" or a == b:
        return a
    raise SliceError(f"domains differ: {a} vs {b}")


def sprod(f: SliceFunction, g: SliceFunction) -> SliceFunction:
    """Slice product: star product of coefficients, or pointwise product of stems."""
    if not f.algebra.same_as(g.algebra):
        raise AlgebraMismatch("functions over different algebras")
    spec = f.algebra
    if isinstance(f, SlicePoly) and isinstance(g, SlicePoly):
        m, n = f.degree, g.degree
        jj, kk = np.meshgrid(np.arange(m + 1), np.arange(n + 1), indexing="ij")
        jj, kk = jj.ravel(), kk.ravel()
        prods = spec.mul_batch(f.coeffs[jj], g.coeffs[kk])
        out = np.zeros((m + n + 1, spec.dim))
        np.add.at(out, jj + kk, prods)
        return SlicePoly(spec, out)
    F, G = _as_closure(f), _as_closure(g)
    dom = _common_domain(F.domain, G.domain)

    def rule(dF, dG):
        if dF is None or dG is None:
            return None
        return lambda z: cmul(dF(z), G.value(z)) + cmul(F.value(z), dG(z))

    return StemClosure(spec, lambda z: cmul(F.value(z), G.value(z)), dom, True,
                       dz_eval=rule(F.dz_eval, G.dz_eval),
                       dzbar_eval=rule(F.dzbar_eval, G.dzbar_eval), check=False)


def sconj(f: SliceFunction) -> SliceFunction:
    spec = f.algebra
    if isinstance(f, SlicePoly):
        return SlicePoly(spec, f.coeffs @ spec.conj_matrix.T)

    def wrap(cb):
        return None if cb is None else (lambda z: c_antiinvolution(cb(z)))

    return StemClosure(spec, lambda z: c_antiinvolution(f.value(z)), f.domain, True,
                       dz_eval=wrap(f.dz_eval), dzbar_eval=wrap(f.dzbar_eval), check=False)


def normal(f: SliceFunction) -> SliceFunction:
    return sprod(f, sconj(f))


def _grid_points(f: SliceFunction, grid_size: int) -> np.ndarray:
    dom = f.domain
    return np.concatenate([dom.grid(grid_size), dom.real_points(grid_size)])


def is_real_slicefn(f: SliceFunction, tol: float = DEFAULT_TOL, grid_size: int = 16) -> bool:
    if isinstance(f, SlicePoly):
        return all(is_real(c, tol) for c in f.elements())
    for z in _grid_points(f, grid_size):
        try:
            w = stem_eval(f, z)
        except RealPointForDerivative:
            continue
        if not (is_real(w.re, tol) and is_real(w.im, tol)):
            return False
    return True


def is_admissible_span(p: SlicePoly, tol: float = DEFAULT_TOL) -> bool:
    """Sufficient test: the span of all coefficients lies in the normal cone."""
    if not isinstance(p, SlicePoly):
        raise TypeError("is_admissible_span needs a SlicePoly")
    return subspace_in_normal_cone(p.elements(), tol)


def _pair_in_normal_cone(spec: AlgebraSpec, U: np.ndarray, V: np.ndarray, tol: float) -> np.ndarray:
    """Row-wise ``span{U_r, V_r}`` inside the normal cone, via polarization."""
    def unit(A):
        s = np.abs(A).max(axis=1, keepdims=True)
        return np.divide(A, s, out=np.zeros_like(A), where=s > 0)

    U, V = unit(U), unit(V)
    C = spec.conj_matrix.T
    Uc, Vc = U @ C, V @ C
    m = spec.mul_batch
    ok = np.ones(len(U), dtype=bool)
    for p, q in (
        (2 * m(U, Uc), 2 * m(Uc, U)),
        (2 * m(V, Vc), 2 * m(Vc, V)),
        (m(U, Vc) + m(V, Uc), m(Uc, V) + m(Vc, U)),
    ):
        ok &= np.abs(p[:, 1:]).max(axis=1, initial=0.0) <= 2 * tol
        ok &= np.abs(p - q).max(axis=1) <= 2 * tol
    return ok


def is_admissible_sampled(f: SliceFunction, grid_size: int = 32, tol: float = DEFAULT_TOL,
                          extra_points=None) -> bool:
    """Falsifier: span{F1(z), F2(z)} in the normal cone on a deterministic grid.

    For polynomials whose normal function has real coefficients the roots of
    that normal polynomial are added to the sample.  ``True`` only means that
    no counterexample was found.
    """
    pts = [_grid_points(f, grid_size)]
    if extra_points is not None:
        pts.append(np.asarray(extra_points, dtype=complex))
    if isinstance(f, SlicePoly) and f.degree > 0:
        nc = normal(f).coeffs
        if np.all(np.abs(nc[:, 1:]) <= tol * (1.0 + np.abs(nc).max())):
            from .roots import complex_roots

            pts.append(np.array([r for r, _ in complex_roots(nc[:, 0])]))
    zs = np.concatenate(pts)
    if isinstance(f, StemClosure):
        zs = np.array([z for z in zs if f.domain.contains(z)])
    F1, F2 = stem_eval_many(f, zs)
    return bool(np.all(_pair_in_normal_cone(f.algebra, F1, F2, tol)))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    method: str  # "span" (proof) or "sampled" (no counterexample found / counterexample)


def admissibility(f: SliceFunction, grid_size: int = 32, tol: float = DEFAULT_TOL) -> AdmissibilityVerdict:
    """Span test for polynomials first, sampled falsifier otherwise."""
    if isinstance(f, SlicePoly) and is_admissible_span(f, tol):
        return AdmissibilityVerdict(True, "span")
    return AdmissibilityVerdict(is_admissible_sampled(f, grid_size, tol), "sampled")


# -- derivatives and regularity ---------------------------------------------

def ddx(f: SliceFunction) -> SliceFunction:
    if isinstance(f, SlicePoly):
        if f.degree == 0:
            return SlicePoly(f.algebra, np.zeros((1, f.algebra.dim)))
        j = np.arange(1, f.degree + 1, dtype=float)[:, None]
        return SlicePoly(f.algebra, f.coeffs[1:] * j)
    if f.dz_eval is None:
        raise MissingDerivativeCallback("closure has no dz callback")
    return StemClosure(f.algebra, f.dz_eval, f.domain, True, check=False)


def ddxc(f: SliceFunction) -> SliceFunction:
    if isinstance(f, SlicePoly):
        return SlicePoly(f.algebra, np.zeros((1, f.algebra.dim)))
    if f.dzbar_eval is None:
        raise MissingDerivativeCallback("closure has no dzbar callback")
    return StemClosure(f.algebra, f.dzbar_eval, f.domain, True, check=False)


def _times_i(w: CElement) -> CElement:
    return CElement(-w.im, w.re)


def is_slice_regular(f: SliceFunction, grid_size: int = 12, tol: float = 1e-6) -> bool:
    """Holomorphy of the stem, from the dzbar callback or central differences."""
    if isinstance(f, SlicePoly):
        return True
    dom = f.domain
    for z in dom.grid(grid_size, shrink=0.8):
        z = complex(z)
        scale = 1.0 + abs(z)
        try:
            fz = f.value(z)
        except RealPointForDerivative:
            continue
        if f.dzbar_eval is not None:
            d = f.dzbar_eval(z)
        else:
            h = 1e-5 * scale
            try:
                da = (f.value(z + h) - f.value(z - h)) * (0.5 / h)
                db = (f.value(z + 1j * h) - f.value(z - 1j * h)) * (0.5 / h)
            except RealPointForDerivative:
                continue
            d = (da + _times_i(db)) * 0.5
        if d.norm_inf() > tol * (1.0 + fz.norm_inf()):
            return False
    return True


def leibniz_check(f: SliceFunction, g: SliceFunction, x: Element,
                  tol: float = DEFAULT_TOL) -> tuple[Element, Element]:
    lhs = spherical_derivative(sprod(f, g), x, tol)
    rhs = (spherical_derivative(f, x, tol) * spherical_value(g, x, tol)
           + spherical_value(f, x, tol) * spherical_derivative(g, x, tol))
    return lhs, rhs


def spherical_derivative_fn(f: SliceFunction) -> StemClosure:
    """The slice function ``∂_s f`` as a closure with stem ``F2(z) / Im z``; undefined on R."""
    spec = f.algebra

    def stem(z: complex) -> CElement:
        if z.imag == 0:
            raise RealPointForDerivative("spherical derivative at a real point")
        w = stem_eval(f, z)
        return CElement(w.im / z.imag, spec.zero())

    return StemClosure(spec, stem, f.domain, True, check=False)


def spherical_value_fn(f: SliceFunction) -> StemClosure:
    spec = f.algebra
    return StemClosure(spec, lambda z: CElement(stem_eval(f, z).re, spec.zero()), f.domain,
                       True, check=False)


# -- ready-made closure stems ---------------------------------------------

def conjugate_stem(spec: AlgebraSpec, domain: DomainDescriptor = WHOLE_PLANE) -> StemClosure:
    """Stem ``z -> conj z``, inducing ``f(x) = x^c``, with ``dF/dzbar = 1``."""
    return StemClosure(
        spec, lambda z: CElement.from_complex(spec, complex(z).conjugate()), domain, True,
        dz_eval=lambda z: CElement.from_complex(spec, 0),
        dzbar_eval=lambda z: CElement.from_complex(spec, 1),
    )


def modulus_squared_stem(spec: AlgebraSpec, domain: DomainDescriptor = WHOLE_PLANE) -> StemClosure:
    """Stem ``z -> z conj z``, inducing ``f(x) = n(x)`` on the quadratic cone."""
    return StemClosure(
        spec, lambda z: CElement.from_complex(spec, abs(z) ** 2), domain, True,
        dz_eval=lambda z: CElement.from_complex(spec, complex(z).conjugate()),
        dzbar_eval=lambda z: CElement.from_complex(spec, z),
    )


def locally_constant_stem(spec: AlgebraSpec, J: Element, center: complex = 2j,
                          radius: float = 1.0) -> StemClosure:
    """Stem equal to ``1 - iJ`` above the real axis and ``1 + iJ`` below.

    The induced function is ``1 - IJ`` at ``alpha + beta I``: it equals 2 on
    the upper half of the slice of ``J`` and 0 on the upper half of the slice
    of ``-J``.  Its normal function vanishes identically.
    """
    one = spec.one()

    def stem(z: complex) -> CElement:
        return CElement(one, -J if z.imag > 0 else J)

    zero = lambda z: CElement.from_complex(spec, 0)  # noqa: E731
    return StemClosure(spec, stem, DomainDescriptor.conj_pair_disks(center, radius), True,
                       dz_eval=zero, dzbar_eval=zero)


# -- JSON ---------------------------------------------------------------------

def poly_to_json(p: SlicePoly) -> list[list[float]]:
    return p.coeffs.tolist()


def poly_from_json(spec: AlgebraSpec, data) -> SlicePoly:
    """Accepts a list whose entries are coordinate lists, ``{label: value}`` maps or reals."""
    rows = []
    for item in data:
        if isinstance(item, dict):
            rows.append(spec.from_labels(item).coords)
        elif isinstance(item, (int, float)):
            rows.append(spec.real(float(item)).coords)
        else:
            rows.append(Element(spec, item).coords)
    return SlicePoly(spec, np.array(rows).reshape(-1, spec.dim))
