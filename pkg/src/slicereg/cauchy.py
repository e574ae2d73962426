"""Slice-regular Cauchy kernel and numerical Cauchy / Pompeiu reconstruction.

Points of the slice ``C_J`` are identified with the plane through
``u + vJ <-> u + iv``.  Boundary integrals use the trapezoid rule on each
circle of the domain (counter-clockwise).  The area term of the Pompeiu
formula is integrated in polar coordinates centred at the singular point of
the kernel, which absorbs the ``1/|y - x|`` singularity into the Jacobian;
the radial direction uses Gauss-Legendre and the angular one the trapezoid
rule.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, Element, conj, is_sqrt_minus_one, slice_coords
from .complexify import CElement, cscale
from .errors import (NonAssociativeOffSlice, NotSliceRegular, NotSqrtMinusOne,
                     OnSingularSphere, OutsideDomain)
from .slicefn import (DomainDescriptor, SliceFunction, SlicePoly, StemClosure, ddxc,
                      is_real_slicefn, is_slice_regular, representation)
from .zeros import char_poly


@dataclass(frozen=True)
class ContourSpec:
    J: Element
    domain: DomainDescriptor
    n_boundary: int = 256
    n_radial: int = 64
    n_angular: int = 128

    def __post_init__(self):
        if not is_sqrt_minus_one(self.J):
            raise NotSqrtMinusOne(f"{self.J!r} is not a square root of -1")
        if self.domain.kind not in ("disk", "conj_pair_disks"):
            raise ValueError("contours need a disk or conj_pair_disks domain")
        if min(self.n_boundary, self.n_radial, self.n_angular) < 8:
            raise ValueError("quadrature node counts must be at least 8")

    def with_nodes(self, n_boundary: int | None = None, n_radial: int | None = None,
                   n_angular: int | None = None) -> ContourSpec:
        return ContourSpec(self.J, self.domain, n_boundary or self.n_boundary,
                           n_radial or self.n_radial, n_angular or self.n_angular)

    def to_json(self) -> dict:
        return {
            "J": self.J.coords.tolist(),
            "kind": self.domain.kind,
            "center": [self.domain.center.real, self.domain.center.imag],
            "radius": self.domain.radius,
            "n_boundary": self.n_boundary,
            "n_radial": self.n_radial,
            "n_angular": self.n_angular,
        }

    @classmethod
    def from_json(cls, spec, doc: dict) -> ContourSpec:
        c = doc.get("center", 0.0)
        center = complex(c[0], c[1]) if isinstance(c, (list, tuple)) else complex(c)
        dom = DomainDescriptor(doc.get("kind", "disk"), center, float(doc["radius"]))
        J = doc["J"]
        J = spec.from_labels(J) if isinstance(J, dict) else Element(spec, J)
        return cls(J, dom, int(doc.get("n_boundary", 256)), int(doc.get("n_radial", 64)),
                   int(doc.get("n_angular", 128)))


def cauchy_kernel(x: Element, y: Element, tol: float = DEFAULT_TOL) -> Element:
    """``C_A(x, y)``, induced by the stem ``-(z - y^c) / Delta_y(z)``."""
    spec = x.algebra
    alpha, beta, I = slice_coords(x, tol)
    z = complex(alpha, beta)
    cp = char_poly(y, tol)
    delta = cp(z)
    if abs(delta) <= tol * (1.0 + abs(z) ** 2):
        raise OnSingularSphere(f"{x!r} lies on the sphere of {y!r}")
    w = cscale(CElement(alpha - conj(y), spec.real(beta)), -1.0 / delta)
    # the stem is intrinsic, so F1 and F2 are its two components
    if I is None:
        return w.re
    return w.re + I * w.im


# -- quadrature helpers ----------------------------------------------------

def _slice_points(J: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Coordinates of ``Re z + Im z J`` for each planar point."""
    out = np.outer(zs.imag, J)
    out[:, 0] += zs.real
    return out


def _slice_values(f: SliceFunction, J: np.ndarray, zs: np.ndarray, stem=None) -> np.ndarray:
    """``F1(z) + J F2(z)`` at planar points (either half plane)."""
    spec = f.algebra
    if stem is None:
        if isinstance(f, SlicePoly):
            from .slicefn import stem_eval_many

            F1, F2 = stem_eval_many(f, zs)
        else:
            vals = [f.value(complex(z)) for z in zs]
            F1 = np.array([v.re.coords for v in vals])
            F2 = np.array([v.im.coords for v in vals])
    else:
        vals = [stem(complex(z)) for z in zs]
        F1 = np.array([v.re.coords for v in vals])
        F2 = np.array([v.im.coords for v in vals])
    return F1 + spec.mul_batch(J, F2)


def _kernel_batch(x: Element, J: Element, zs: np.ndarray, tol: float) -> np.ndarray:
    """``C_A(x, y)`` for ``y = Re z + Im z J`` at many planar nodes ``z``."""
    spec = x.algebra
    alpha, beta, I = slice_coords(x, tol)
    sigma = _slice_sign(I, J, tol)
    n = len(zs)
    if sigma is not None:
        # x in C_J: the kernel is (y - x)^-1 computed in the slice
        s = complex(alpha, sigma * beta)
        q = 1.0 / (zs - s)
        return _slice_points(J.coords, q)
    z = complex(alpha, beta)
    delta = (z - zs) * (z - zs.conjugate())
    if np.any(np.abs(delta) <= tol * (1.0 + abs(z) ** 2)):
        raise OnSingularSphere("a quadrature node lies on the singular sphere")
    q = -1.0 / delta
    a = alpha - zs.real
    v = zs.imag
    p1 = q.real * a - beta * q.imag
    q1 = q.real * v
    p2 = q.imag * a + beta * q.real
    q2 = q.imag * v
    IJ = (I * J).coords
    out = np.zeros((n, spec.dim))
    out[:, 0] = p1
    out += np.outer(q1, J.coords) + np.outer(p2, I.coords) + np.outer(q2, IJ)
    return out


def _slice_sign(I: Element | None, J: Element, tol: float) -> int | None:
    """+1 / -1 if the point's unit is J / -J (or the point is real), else None."""
    if I is None:
        return 1
    if I.allclose(J, 1e3 * tol):
        return 1
    if I.allclose(-J, 1e3 * tol):
        return -1
    return None


def _fsum_rows(a: np.ndarray) -> np.ndarray:
    return np.array([math.fsum(col) for col in a.T])


def _gate(f: SliceFunction, contour: ContourSpec, x: Element, tol: float) -> None:
    spec = x.algebra
    alpha, beta, I = slice_coords(x, tol)
    if not contour.domain.contains(complex(alpha, beta)):
        raise OutsideDomain(f"{x!r} is outside the domain {contour.domain}")
    if (not spec.is_associative and _slice_sign(I, contour.J, tol) is None
            and not is_real_slicefn(f, tol)):
        raise NonAssociativeOffSlice(
            "in a non-associative algebra the formula holds off the slice only for real f")


def _boundary_term(f: SliceFunction, contour: ContourSpec, x: Element, tol: float) -> np.ndarray:
    spec = x.algebra
    J = contour.J
    Jc = J.coords
    n = contour.n_boundary
    theta = 2 * np.pi * np.arange(n) / n
    rows = []
    for c, r in contour.domain.circles():
        e = np.exp(1j * theta)
        zs = c + r * e
        C = _kernel_batch(x, J, zs, tol)
        CJ = spec.mul_batch(C, -Jc)
        dy = spec.mul_batch(Jc, _slice_points(Jc, r * e)) * (2 * np.pi / n)
        T = spec.mul_batch(CJ, dy)
        rows.append(spec.mul_batch(T, _slice_values(f, Jc, zs)))
    return _fsum_rows(np.concatenate(rows)) / (2 * np.pi)


def cauchy_boundary(f: SliceFunction, contour: ContourSpec, x: Element,
                    tol: float = DEFAULT_TOL, check_regular: bool = True) -> Element:
    """Reconstruct ``f(x)`` from its values on the boundary of the slice domain."""
    if check_regular and isinstance(f, StemClosure) and not is_slice_regular(f):
        raise NotSliceRegular("the stem is not holomorphic on the domain")
    _gate(f, contour, x, tol)
    return Element(x.algebra, _boundary_term(f, contour, x, tol))


def _polar_nodes(center: complex, radius: float, s: complex, n_r: int, n_phi: int):
    """Polar grid about ``s`` covering the disk ``|z - center| < radius``."""
    g, gw = np.polynomial.legendre.leggauss(n_r)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    e = np.exp(1j * phi)
    d = s - center
    proj = (d.conjugate() * e).real
    R = -proj + np.sqrt(proj ** 2 - abs(d) ** 2 + radius ** 2)
    rho = 0.5 * (g[None, :] + 1.0) * R[:, None]
    w = 0.5 * gw[None, :] * R[:, None] * rho * (2 * np.pi / n_phi)
    zs = s + rho * e[:, None]
    return zs.ravel(), w.ravel()


def _area_term(f: SliceFunction, contour: ContourSpec, x: Element, sign: int,
               tol: float) -> np.ndarray:
    spec = x.algebra
    J = contour.J
    Jc = J.coords
    g = ddxc(f)
    alpha, beta, _ = slice_coords(x, tol)
    s = complex(alpha, sign * beta)
    rows = []
    for c, r in contour.domain.circles():
        centre = s if abs(s - c) < r else c
        zs, w = _polar_nodes(c, r, centre, contour.n_radial, contour.n_angular)
        C = _kernel_batch(x, J, zs, tol)
        A = spec.mul_batch(spec.mul_batch(C, -Jc), 2.0 * Jc)
        G = _slice_values(g, Jc, zs, stem=g.eval)
        rows.append(spec.mul_batch(A, G) * w[:, None])
    return -_fsum_rows(np.concatenate(rows)) / (2 * np.pi)


def cauchy_pompeiu(f: SliceFunction, contour: ContourSpec, x: Element,
                   tol: float = DEFAULT_TOL) -> Element:
    """Cauchy formula with the area correction for C^1 (not necessarily regular) f."""
    spec = x.algebra
    _gate(f, contour, x, tol)
    alpha, beta, I = slice_coords(x, tol)
    sign = _slice_sign(I, contour.J, tol)
    if sign is None:
        # assemble from the two points of the sphere lying in the slice
        J = contour.J
        v1 = cauchy_pompeiu(f, contour, alpha + J * beta, tol)
        v2 = cauchy_pompeiu(f, contour, alpha - J * beta, tol)
        return representation(v1, v2, J, -J, I, tol)
    out = _boundary_term(f, contour, x, tol)
    if not isinstance(f, SlicePoly):
        out = out + _area_term(f, contour, x, sign, tol)
    return Element(spec, out)


def representation_via_kernel_check(f: SliceFunction, contour: ContourSpec, x: Element,
                                    tol: float = DEFAULT_TOL) -> tuple[Element, Element]:
    """Boundary reconstruction at x directly vs assembled from the two slice points."""
    lhs = cauchy_boundary(f, contour, x, tol)
    alpha, beta, I = slice_coords(x, tol)
    if I is None:
        return lhs, lhs
    J = contour.J
    v1 = cauchy_boundary(f, contour, alpha + J * beta, tol, check_regular=False)
    v2 = cauchy_boundary(f, contour, alpha - J * beta, tol, check_regular=False)
    return lhs, representation(v1, v2, J, -J, I, tol)
