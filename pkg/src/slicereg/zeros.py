"""Zeros of admissible slice polynomials.

Pipeline: the normal polynomial N(p) has real coefficients; each of its
complex roots ``zeta`` (taken with ``Im zeta >= 0``) marks a sphere
``alpha + beta S_A``.  Evaluating the stem at ``zeta`` tells whether p
vanishes on the whole sphere (spherical or real zero) or at exactly one
point ``alpha + beta K`` where ``K`` solves ``F1 + K F2 = 0``.  Multiplicities
are read off the root multiplicities of N(p).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (DEFAULT_TOL, Element, in_quadratic_cone, inverse, is_real, norm_elem,
                      trace)
from .complexify import solve_K
from .errors import (DegreeMismatch, NonRealNormal, NonZeroRemainder, NotAdmissible,
                     NotARoot, NotInQuadraticCone, NumericalError, OddRealMultiplicity)
from .roots import MERGE_RADIUS, _abs_horner, _horner, complex_roots
from .slicefn import (SlicePoly, admissibility, normal, slice_eval, slice_eval_at,
                      spherical_derivative, spherical_value, stem_eval)

# |F(zeta)| below this (relative) counts as "vanishes on the sphere"
SPHERE_TOL = 1e-6


@dataclass(frozen=True)
class CharPoly:
    """``Delta_y(x) = x^2 - x t_y + n_y``."""

    t_y: float
    n_y: float

    def as_poly(self, spec) -> SlicePoly:
        return SlicePoly(spec, [spec.real(self.n_y), spec.real(-self.t_y), spec.one()])

    def __call__(self, z: complex) -> complex:
        return z * z - self.t_y * z + self.n_y

    @property
    def sphere(self) -> tuple[float, float]:
        """``(alpha, beta)`` of the sphere where Delta_y vanishes."""
        alpha = self.t_y / 2
        return alpha, float(np.sqrt(max(self.n_y - alpha * alpha, 0.0)))


@dataclass
class ZeroRecord:
    kind: str  # "real" | "spherical" | "isolated"
    alpha: float
    beta: float
    point: Element | None
    multiplicity: int = 0
    residual: float = 0.0

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "alpha": self.alpha,
            "beta": self.beta,
            "point": None if self.point is None else self.point.coords.tolist(),
            "multiplicity": self.multiplicity,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class DivisionResult:
    """``p = Delta_y h + x a + b``."""

    quotient: SlicePoly
    a: Element
    b: Element


def char_poly(y: Element, tol: float = DEFAULT_TOL) -> CharPoly:
    if not in_quadratic_cone(y, tol):
        raise NotInQuadraticCone(f"{y!r} is not in the quadratic cone")
    return CharPoly(float(trace(y).coords[0]), float(norm_elem(y).coords[0]))


def normal_poly_coeffs(p: SlicePoly, tol: float = DEFAULT_TOL, force: bool = False) -> np.ndarray:
    """Real coefficients of N(p), ascending; checks admissibility unless ``force``."""
    if not force and not admissibility(p, tol=tol).admissible:
        raise NotAdmissible(f"{p!r} is not admissible")
    nc = normal(p).coeffs
    if np.abs(nc[:, 1:]).max(initial=0.0) > tol * (1.0 + np.abs(nc).max()):
        raise NonRealNormal("the normal polynomial has non-real coefficients")
    return nc[:, 0].copy()


def _poly_scale(p: SlicePoly, z: complex) -> float:
    """``sum |a_j| |z|^j`` with max-norms: the natural size of p near z."""
    return float(_abs_horner(np.abs(p.coeffs).max(axis=1), np.array([abs(z)]))[0])


def _reference_unit(spec) -> Element | None:
    units = spec.imaginary_units
    return spec.basis(units[0]) if units else None


def classify_sphere(p: SlicePoly, zeta: complex, tol: float = DEFAULT_TOL,
                    sphere_tol: float = SPHERE_TOL, cn_coeffs=None) -> ZeroRecord:
    """Classify the zero set of p on the sphere of ``zeta`` (a root of N(p))."""
    spec = p.algebra
    alpha, beta = float(zeta.real), abs(float(zeta.imag))
    z = complex(alpha, beta)
    if cn_coeffs is None:
        cn_coeffs = normal_poly_coeffs(p, tol, force=True)
    cn_val = abs(_horner(np.asarray(cn_coeffs, dtype=complex), np.array([z]))[0][0])
    if cn_val > sphere_tol * _abs_horner(np.abs(cn_coeffs), np.array([abs(z)]))[0]:
        raise NotARoot(f"N(p) does not vanish at {z}")
    scale = _poly_scale(p, z)
    w = stem_eval(p, z)
    if w.norm_inf() <= sphere_tol * scale:
        if beta == 0.0:
            point = spec.real(alpha)
            return ZeroRecord("real", alpha, 0.0, point, 0, slice_eval(p, point).norm_inf())
        J0 = _reference_unit(spec)
        point = None if J0 is None else alpha + J0 * beta
        res = 0.0 if point is None else slice_eval_at(p, alpha, beta, J0).norm_inf()
        return ZeroRecord("spherical", alpha, beta, point, 0, res)
    if beta == 0.0:
        raise NotARoot(f"p does not vanish at the real root {alpha} of N(p)")
    K = solve_K(w, sphere_tol)
    point = alpha + K * beta
    J0 = _reference_unit(spec)
    if J0 is not None:
        x0 = alpha + J0 * beta
        newton = alpha - spherical_value(p, x0) * inverse(spherical_derivative(p, x0))
        if not newton.allclose(point, max(sphere_tol, 1e3 * tol)):
            raise NumericalError(f"isolated zero: solve_K gives {point!r}, Newton form {newton!r}")
    res = slice_eval(p, point).norm_inf()
    if res > sphere_tol * scale:
        raise NotARoot(f"isolated candidate {point!r} has residual {res:g}")
    return ZeroRecord("isolated", alpha, beta, point, 0, res)


def _lookup(roots, zeta: complex) -> int:
    best = min(roots, key=lambda t: abs(t[0] - zeta))
    if abs(best[0] - zeta) > MERGE_RADIUS * (1.0 + abs(zeta)):
        raise NotARoot(f"{zeta} is not a root of N(p)")
    return best[1]


def multiplicity(p: SlicePoly, record: ZeroRecord, roots=None, tol: float = DEFAULT_TOL) -> int:
    """Multiplicity from the root multiplicities of N(p).

    Non-real spheres: the multiplicity of ``alpha + i beta`` as a root of N(p).
    Real zeros: half the (necessarily even) multiplicity of the real root.
    """
    if roots is None:
        nc = normal_poly_coeffs(p, tol, force=True)
        if not np.any(nc):
            raise NumericalError("N(p) vanishes identically; multiplicity is undefined")
        roots = complex_roots(nc)
    m = _lookup(roots, complex(record.alpha, record.beta))
    if record.kind == "real":
        if m % 2:
            raise OddRealMultiplicity(f"real root {record.alpha} of N(p) has odd multiplicity {m}")
        return m // 2
    return m


def divide_linear_real(p: SlicePoly, y: float, tol: float = DEFAULT_TOL) -> SlicePoly:
    """``g`` with ``p = (x - y) g``, for a real zero ``y``."""
    y = float(y)
    a = p.coeffs
    m = p.degree
    if m == 0:
        g = np.zeros((1, p.algebra.dim))
        r = a[0]
    else:
        g = np.zeros((m, p.algebra.dim))
        g[m - 1] = a[m]
        for k in range(m - 1, 0, -1):
            g[k - 1] = a[k] + y * g[k]
        r = a[0] + y * g[0]
    if np.abs(r).max() > tol * (1.0 + _poly_scale(p, y)):
        raise NonZeroRemainder(f"p({y}) != 0; remainder {r.tolist()}")
    return SlicePoly(p.algebra, g)


def divide_char(p: SlicePoly, y: Element, tol: float = DEFAULT_TOL,
                assert_zero: bool = False) -> DivisionResult:
    """Long division by the real quadratic Delta_y: ``p = Delta_y h + x a + b``.

    With ``assert_zero`` the point y must be a zero of p; then ``a`` must be
    the spherical derivative of p at y and ``y a + b`` must vanish.
    """
    spec = p.algebra
    if is_real(y, tol):
        raise ValueError("divide_char needs a non-real y")
    cp = char_poly(y, tol)
    r = np.zeros((max(p.degree, 1) + 1, spec.dim))
    r[: len(p.coeffs)] = p.coeffs
    m = len(r) - 1
    h = np.zeros((max(m - 1, 1), spec.dim))
    for k in range(m, 1, -1):
        q = r[k].copy()
        h[k - 2] = q
        r[k] = 0.0
        r[k - 1] += cp.t_y * q
        r[k - 2] -= cp.n_y * q
    out = DivisionResult(SlicePoly(spec, h), Element(spec, r[1]), Element(spec, r[0]))
    recon = sprod_real(cp, out.quotient) + SlicePoly(spec, [out.b, out.a])
    if not recon.allclose(p, 1e3 * tol):
        raise NumericalError("division reconstruction failed")
    if assert_zero:
        s = _poly_scale(p, complex(*cp.sphere))
        if slice_eval(p, y, tol).norm_inf() > SPHERE_TOL * s:
            raise NotARoot(f"{y!r} is not a zero of p")
        if not out.a.allclose(spherical_derivative(p, y, tol), SPHERE_TOL):
            raise NonZeroRemainder("a differs from the spherical derivative at y")
        if not (y * out.a + out.b).allclose(spec.zero(), SPHERE_TOL * (1.0 + s)):
            raise NonZeroRemainder("y a + b != 0 at a zero")
    return out


def sprod_real(cp: CharPoly, h: SlicePoly) -> SlicePoly:
    return cp.as_poly(h.algebra) * h


def _divides(cn: np.ndarray, cp: CharPoly, tol: float) -> bool:
    """Whether the real quadratic divides the real polynomial ``cn`` (ascending)."""
    q, r = np.polynomial.polynomial.polydiv(cn, [cp.n_y, -cp.t_y, 1.0])
    return float(np.abs(r).max()) <= tol * (1.0 + float(np.abs(cn).max()))


def all_zeros(p: SlicePoly, tol: float = DEFAULT_TOL, force_admissible: bool = False,
              sphere_tol: float = SPHERE_TOL) -> list[ZeroRecord]:
    """Every zero sphere of an admissible polynomial, classified, with multiplicities.

    The multiplicities add up to ``deg p``; :class:`DegreeMismatch` is raised
    otherwise.
    """
    if p.degree < 1:
        raise ValueError("all_zeros needs a polynomial of degree >= 1")
    if not force_admissible and not admissibility(p, tol=tol).admissible:
        raise NotAdmissible(f"{p!r} is not admissible")
    cn = normal_poly_coeffs(p, tol, force=True)
    if not np.any(cn):
        raise NumericalError("N(p) vanishes identically")
    roots = complex_roots(cn)
    records = []
    for zeta, m in roots:
        if zeta.imag < 0:
            continue
        rec = classify_sphere(p, zeta, tol, sphere_tol, cn)
        rec.multiplicity = multiplicity(p, rec, roots)
        if rec.kind == "spherical" and rec.multiplicity < 2:
            raise NumericalError(f"spherical zero at {zeta} with multiplicity {rec.multiplicity}")
        cp = CharPoly(2 * rec.alpha, rec.alpha ** 2 + rec.beta ** 2)
        if rec.kind != "real" and not _divides(cn, cp, sphere_tol):
            raise NumericalError(f"Delta does not divide N(p) at sphere {zeta}")
        records.append(rec)
    total = sum(r.multiplicity for r in records)
    if total != p.degree:
        raise DegreeMismatch(f"multiplicities add up to {total}, degree is {p.degree}")
    records.sort(key=lambda r: (r.alpha, r.beta))
    return records


def zeros_to_json(records: list[ZeroRecord]) -> list[dict]:
    return [r.to_json() for r in records]


@dataclass
class ProductZerosReport:
    product_spheres: list[tuple[float, float]]
    factor_spheres: list[tuple[float, float]]
    equal: bool
    details: dict = field(default_factory=dict)


def _sphere_set(records, digits: int = 6) -> list[tuple[float, float]]:
    return sorted({(round(r.alpha, digits) + 0.0, round(r.beta, digits) + 0.0) for r in records})


def zeros_of_product_check(f: SlicePoly, g: SlicePoly, tol: float = DEFAULT_TOL) -> ProductZerosReport:
    """Compare the zero spheres of ``f * g`` with those of f and g together."""
    fg = f * g
    zf = all_zeros(f, tol) if f.degree else []
    zg = all_zeros(g, tol) if g.degree else []
    zfg = all_zeros(fg, tol) if fg.degree else []
    a = _sphere_set(zfg)
    b = sorted(set(_sphere_set(zf)) | set(_sphere_set(zg)))
    equal = len(a) == len(b) and all(
        abs(x[0] - y[0]) <= 1e-5 and abs(x[1] - y[1]) <= 1e-5 for x, y in zip(a, b))
    return ProductZerosReport(a, b, equal)
