"""Deterministic random samplers for square roots of -1, cone elements and polynomials."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .algebra import AlgebraSpec, Element, inverse, is_sqrt_minus_one

# simple imaginary basis elements whose span is all of the imaginary sphere
_DIVISION_LIKE = ("complexes", "quaternions", "octonions", "clifford1", "clifford2")


@lru_cache(maxsize=None)
def _sphere_is_flat(spec: AlgebraSpec) -> bool:
    """Whether every unit vector in span{imaginary units} is a root of -1."""
    units = spec.imaginary_units
    if not units:
        return False
    rng = np.random.default_rng(12345)
    for _ in range(8):
        c = np.zeros(spec.dim)
        v = rng.normal(size=len(units))
        c[list(units)] = v / np.linalg.norm(v)
        if not is_sqrt_minus_one(Element(spec, c)):
            return False
    return True


def random_sqrt_minus_one(spec: AlgebraSpec, rng: np.random.Generator) -> Element:
    """A random element of S_A.

    When the imaginary units span a round sphere (complexes, quaternions,
    octonions) a uniformly random unit vector is returned.  Otherwise a
    random basis unit ``u`` is conjugated by a product ``g`` of random
    elements of the planes ``span{1, u'}``; ``g u g^-1`` squares to -1 whenever
    the algebra is associative.
    """
    units = spec.imaginary_units
    if not units:
        raise ValueError(f"{spec.name} has no square roots of -1 among its basis elements")
    if _sphere_is_flat(spec):
        c = np.zeros(spec.dim)
        v = rng.normal(size=len(units))
        c[list(units)] = v / np.linalg.norm(v)
        return Element(spec, c)
    u = spec.basis(units[rng.integers(len(units))])
    if not spec.is_associative:
        return u if rng.random() < 0.5 else -u
    for _ in range(20):
        g = spec.one()
        for _ in range(int(rng.integers(1, 4))):
            w = spec.basis(units[rng.integers(len(units))])
            a, b = rng.normal(size=2)
            g = g * (a + w * b)
        J = g * u * inverse(g)
        if is_sqrt_minus_one(J, 1e-11):
            return J
    return u


def random_quadratic_cone(spec: AlgebraSpec, rng: np.random.Generator,
                          scale: float = 1.0) -> Element:
    """``alpha + beta J`` with ``alpha`` normal and ``beta`` in (0.05, 1.5)*scale."""
    J = random_sqrt_minus_one(spec, rng)
    alpha = float(rng.normal()) * scale
    beta = float(rng.uniform(0.05, 1.5)) * scale
    return alpha + J * beta


def random_element(spec: AlgebraSpec, rng: np.random.Generator) -> Element:
    return Element(spec, rng.normal(size=spec.dim))


def admissible_basis(spec: AlgebraSpec) -> list[int]:
    """Basis indices whose real span is known to lie in the normal cone.

    Paravectors ``1, e1..en`` for Clifford algebras, everything for the
    composition algebras, only the unity otherwise.
    """
    if spec.name in ("reals", "complexes", "quaternions", "octonions"):
        return list(range(spec.dim))
    if spec.name.startswith("clifford"):
        return [i for i, s in enumerate(spec.basis_labels) if s == "1" or len(s) == 2]
    return [0]


def random_admissible_coeffs(spec: AlgebraSpec, rng: np.random.Generator, degree: int,
                             integer: bool = False, monic: bool = False) -> np.ndarray:
    """Coefficient array ``(degree+1, d)`` spanning an admissible subspace."""
    idx = admissible_basis(spec)
    out = np.zeros((degree + 1, spec.dim))
    for j in range(degree + 1):
        if integer:
            out[j, idx] = rng.integers(-2, 3, size=len(idx))
        else:
            out[j, idx] = rng.uniform(-1, 1, size=len(idx))
    if monic:
        out[degree] = 0.0
        out[degree, 0] = 1.0
    elif not np.any(out[degree]):
        out[degree, idx[int(rng.integers(len(idx)))]] = 1.0
    return out
