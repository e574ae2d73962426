"""Deterministic property suites shared by ``slicereg verify`` and the test-suite.

Every suite draws from a fixed seed, so results are reproducible byte for
byte.  A suite returns a :class:`SuiteResult` with per-property counts and
the worst error seen.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra as alg
from .builtins import make_builtin
from .cauchy import cauchy_kernel
from .errors import Singular, SliceError
from .sampling import (random_admissible_coeffs, random_quadratic_cone,
                       random_sqrt_minus_one)
from .slicefn import (SlicePoly, admissibility, leibniz_check, normal, representation_eval,
                      slice_eval, slice_eval_at, spherical_derivative, spherical_value,
                      is_admissible_sampled)
from .zeros import all_zeros


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    max_error: float = 0.0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, err: float = 0.0, example=None) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if example is not None and len(self.examples) < 3:
                self.examples.append(str(example))
        if np.isfinite(err):
            self.max_error = max(self.max_error, float(err))

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed,
                "max_error": self.max_error, "examples": self.examples}


@dataclass
class SuiteResult:
    suite: str
    properties: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok,
                "properties": [p.to_json() for p in self.properties]}


def _rel(a: alg.Element, b: alg.Element) -> float:
    return float(np.abs(a.coords - b.coords).max()) / (1.0 + max(a.norm_inf(), b.norm_inf()))


# -- cones -----------------------------------------------------------------

CONE_ALGEBRAS = ("quaternions", "octonions", "clifford2", "clifford3", "clifford4")


def cl3_closed_forms(x: alg.Element) -> tuple[float, float, float]:
    """``(x123, x1x23 - x2x13 + x3x12, x0x123 - x1x23 + x2x13 - x3x12)`` in Cl(0,3)."""
    c = dict(zip(x.algebra.basis_labels, x.coords))
    q = c["e1"] * c["e23"] - c["e2"] * c["e13"] + c["e3"] * c["e12"]
    return c["e123"], q, c["1"] * c["e123"] - q


def cl3_cone_samples(n: int, seed: int = 3) -> list[alg.Element]:
    """Random vectors of Cl(0,3): generic ones, points on each cone, and near misses.

    Cone points are built by solving the defining equation for a coordinate
    whose multiplier is bounded away from zero, so they satisfy it to
    rounding accuracy.
    """
    spec = make_builtin("clifford3")
    rng = np.random.default_rng(seed)
    ix = {s: i for i, s in enumerate(spec.basis_labels)}
    # q = x1 x23 - x2 x13 + x3 x12, solved for one vector coordinate
    pairs = (("e1", "e23", 1.0), ("e2", "e13", -1.0), ("e3", "e12", 1.0))

    def on_q_surface(c):
        v, w, sgn = pairs[rng.integers(3)]
        c[ix[w]] = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
        q = sum(s_ * c[ix[a]] * c[ix[b]] for a, b, s_ in pairs if a != v)
        c[ix[v]] = -q / (sgn * c[ix[w]])

    out = []
    for k in range(n):
        c = rng.normal(size=8)
        kind = k % 5
        if kind == 1:  # quadratic cone
            c[ix["e123"]] = 0.0
            on_q_surface(c)
        elif kind == 2:  # normal cone, outside the quadratic cone
            c[ix["e123"]] = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
            q = sum(s_ * c[ix[a]] * c[ix[b]] for a, b, s_ in pairs)
            c[ix["1"]] = q / c[ix["e123"]]
        elif kind == 3:  # near miss of the quadratic cone
            c[ix["e123"]] = 0.0
            on_q_surface(c)
            c[rng.integers(1, 8)] += 1e-4
        elif kind == 4:  # sparse integer vectors, where exact cone points are common
            c = np.zeros(8)
            pick = rng.choice(8, size=int(rng.integers(1, 4)), replace=False)
            c[pick] = rng.integers(-2, 3, size=len(pick))
            if not np.any(c):
                c[0] = 1.0
        out.append(alg.Element(spec, c))
    return out


def suite_cones(n_samples: int = 1000, closed_form_samples: int = 10_000) -> SuiteResult:
    quad = PropertyResult("quadratic identity x^2 - t(x)x + n(x) = 0")
    closure = PropertyResult("Q_A closed under real scaling, real shifts and conj; Q_A in N_A")
    roundtrip = PropertyResult("slice_coords round trip alpha + beta J = x")
    inv = PropertyResult("inverse(x) x = x inverse(x) = 1")
    for k, name in enumerate(CONE_ALGEBRAS):
        spec = make_builtin(name)
        rng = np.random.default_rng(100 + k)
        for _ in range(n_samples):
            x = random_quadratic_cone(spec, rng, scale=float(rng.uniform(0.2, 3.0)))
            t, n = alg.trace(x), alg.norm_elem(x)
            r = x * x - t * x + n
            err = r.norm_inf() / (1.0 + x.norm_inf() ** 2)
            quad.record(err <= 1e-9, err, x)
            a = float(rng.normal())
            closure.record(alg.in_quadratic_cone(a * x) and alg.in_quadratic_cone(a + x)
                           and alg.in_quadratic_cone(alg.conj(x)) and alg.in_normal_cone(x), 0.0, x)
            alpha, beta, J = alg.slice_coords(x)
            back = alpha + J * beta
            roundtrip.record(back.allclose(x) and alg.is_sqrt_minus_one(J), _rel(back, x), x)
            xi = alg.inverse(x)
            e1, e2 = (xi * x - 1.0), (x * xi - 1.0)
            err = max(e1.norm_inf(), e2.norm_inf())
            inv.record(err <= 1e-9, err, x)
    cf = PropertyResult("clifford3 cone predicates agree with the closed forms")
    for x in cl3_cone_samples(closed_form_samples):
        u = x / x.norm_inf()
        x123, q, nform = cl3_closed_forms(u)
        in_q = abs(x123) <= 1e-9 and abs(q) <= 1e-9
        in_n = abs(nform) <= 1e-9
        ok = alg.in_quadratic_cone(x) == in_q and alg.in_normal_cone(x) == in_n
        cf.record(ok, 0.0, x)
    return SuiteResult("cones", [quad, closure, roundtrip, inv, cf])


def octonion_alternativity() -> PropertyResult:
    """Exhaustive alternation of the octonion associator on all 8^3 basis triples."""
    spec = make_builtin("octonions")
    res = PropertyResult("octonion associator alternates on all basis triples")
    e = [spec.basis(i) for i in range(8)]
    for i in range(8):
        for j in range(8):
            for k in range(8):
                a = alg.associator(e[i], e[j], e[k]).coords
                b = alg.associator(e[j], e[i], e[k]).coords
                c = alg.associator(e[i], e[k], e[j]).coords
                ok = np.all(a + b == 0) and np.all(a + c == 0)
                res.record(bool(ok), float(np.abs(a + b).max() + np.abs(a + c).max()), (i, j, k))
    return res


def suite_alternativity() -> SuiteResult:
    res = octonion_alternativity()
    report = PropertyResult("validate_algebra reports no failures for the builtins")
    for name in ("reals", "complexes", "quaternions", "octonions", "clifford3"):
        report.record(not alg.validate_algebra(make_builtin(name)), 0.0, name)
    return SuiteResult("alternativity", [res, report])


# -- slice functions ---------------------------------------------------------

SLICE_ALGEBRAS = ("quaternions", "octonions", "clifford3")


def _random_poly(spec, rng, max_degree: int = 5, admissible: bool = False) -> SlicePoly:
    deg = int(rng.integers(1, max_degree + 1))
    if admissible:
        return SlicePoly(spec, random_admissible_coeffs(spec, rng, deg))
    return SlicePoly(spec, rng.uniform(-1, 1, size=(deg + 1, spec.dim)))


def _nonreal_point(spec, rng) -> alg.Element:
    return random_quadratic_cone(spec, rng, scale=float(rng.uniform(0.3, 1.5)))


def suite_slice(n_samples: int = 1000) -> SuiteResult:
    welldef = PropertyResult("slice value independent of (alpha, beta, J) vs (alpha, -beta, -J)")
    split = PropertyResult("f = v_s f + IM(x) d_s f")
    for k, name in enumerate(SLICE_ALGEBRAS):
        spec = make_builtin(name)
        rng = np.random.default_rng(200 + k)
        for _ in range(n_samples):
            f = _random_poly(spec, rng)
            x = _nonreal_point(spec, rng)
            alpha, beta, J = alg.slice_coords(x)
            a = slice_eval_at(f, alpha, beta, J)
            b = slice_eval_at(f, alpha, -beta, -J)
            err = _rel(a, b)
            welldef.record(err <= 1e-9, err, x)
            _, im = alg.decompose(x)
            rhs = spherical_value(f, x) + im * spherical_derivative(f, x)
            err = _rel(a, rhs)
            split.record(err <= 1e-9, err, x)
    return SuiteResult("slice", [welldef, split])


def suite_representation(n_samples: int = 1000) -> SuiteResult:
    res = PropertyResult("representation formula vs direct evaluation")
    for k, name in enumerate(("quaternions", "clifford3")):
        spec = make_builtin(name)
        rng = np.random.default_rng(300 + k)
        done = 0
        while done < n_samples:
            f = _random_poly(spec, rng)
            alpha, beta = float(rng.normal()), float(rng.uniform(0.1, 1.5))
            I = random_sqrt_minus_one(spec, rng)
            J = random_sqrt_minus_one(spec, rng)
            K = -J if done % 10 == 0 else random_sqrt_minus_one(spec, rng)
            try:
                got = representation_eval(f, alpha, beta, J, K, I)
                cond = 1.0 if done % 10 == 0 else alg.inverse(J - K).norm_inf()
            except Singular:
                continue
            want = slice_eval_at(f, alpha, beta, I)
            err = _rel(got, want) / (1.0 + cond)
            res.record(err <= 1e-9, err, (name, alpha, beta))
            done += 1
    return SuiteResult("representation", [res])


def suite_leibniz(n_samples: int = 1000) -> SuiteResult:
    res = PropertyResult("d_s(f g) = d_s f v_s g + v_s f d_s g")
    for k, name in enumerate(("quaternions", "clifford3")):
        spec = make_builtin(name)
        rng = np.random.default_rng(400 + k)
        for _ in range(n_samples):
            f, g = _random_poly(spec, rng, 4), _random_poly(spec, rng, 4)
            x = _nonreal_point(spec, rng)
            lhs, rhs = leibniz_check(f, g, x)
            err = _rel(lhs, rhs)
            res.record(err <= 1e-8, err, x)
    return SuiteResult("leibniz", [res])


def suite_normal_mult(n_pairs: int = 100) -> SuiteResult:
    props = []
    for k, name in enumerate(SLICE_ALGEBRAS):
        spec = make_builtin(name)
        rng = np.random.default_rng(500 + k)
        res = PropertyResult(f"N(f g) = N(f) N(g) over {name}")
        real = PropertyResult(f"N(f g) has real coefficients over {name}")
        # over clifford3 products of admissible polynomials need not be admissible
        adm = None if name == "clifford3" else PropertyResult(
            f"product of admissible polynomials is admissible over {name}")
        for _ in range(n_pairs):
            f = _random_poly(spec, rng, 5, admissible=True)
            g = _random_poly(spec, rng, 5, admissible=True)
            fg = f * g
            lhs, rhs = normal(fg), normal(f) * normal(g)
            scale = 1.0 + max(np.abs(lhs.coeffs).max(), np.abs(rhs.coeffs).max())
            err = float(np.abs(lhs.coeffs - rhs.coeffs).max()) / scale if lhs.degree == rhs.degree else np.inf
            res.record(err <= 1e-8, err, (f, g))
            nreal = float(np.abs(lhs.coeffs[:, 1:]).max(initial=0.0)) / scale
            real.record(nreal <= 1e-8, nreal, (f, g))
            if adm is not None:
                adm.record(is_admissible_sampled(fg, grid_size=8), 0.0, (f, g))
        props += [res, real] + ([adm] if adm is not None else [])
    return SuiteResult("normal-mult", props)


def fta_polys(n: int = 200, max_degree: int = 6, integer: bool = True, seed: int = 600) -> list[SlicePoly]:
    spec = make_builtin("clifford3")
    rng = np.random.default_rng(seed)
    return [SlicePoly(spec, random_admissible_coeffs(spec, rng, 1 + k % max_degree, integer=integer))
            for k in range(n)]


def suite_fta(n_polys: int = 200, max_degree: int = 6) -> SuiteResult:
    total = PropertyResult("sum of multiplicities equals the degree")
    bound = PropertyResult("r + i + 2s <= degree")
    paravec = PropertyResult("zeros lie on spheres meeting the paravectors; witnesses vanish")
    for integer, seed in ((True, 600), (False, 601)):
        for p in fta_polys(n_polys, max_degree, integer, seed):
            try:
                recs = all_zeros(p)
            except SliceError as exc:
                total.record(False, np.inf, f"{p!r}: {type(exc).__name__}: {exc}")
                continue
            s = sum(r.multiplicity for r in recs)
            total.record(s == p.degree, 0.0, p)
            counts = {k: sum(r.kind == k for r in recs) for k in ("real", "spherical", "isolated")}
            bound.record(counts["real"] + counts["isolated"] + 2 * counts["spherical"] <= p.degree, 0.0, p)
            worst = max(r.residual for r in recs) if recs else 0.0
            scale = 1.0 + float(np.abs(p.coeffs).max()) * (1.0 + max(abs(complex(r.alpha, r.beta)) for r in recs)) ** p.degree
            paravec.record(worst <= 1e-6 * scale, worst / scale, p)
    return SuiteResult("fta", [total, bound, paravec])


def suite_kernel(n_pairs: int = 100) -> SuiteResult:
    props = []
    for k, name in enumerate(SLICE_ALGEBRAS):
        spec = make_builtin(name)
        rng = np.random.default_rng(700 + k)
        res = PropertyResult(f"C(x, y)(y - x) = 1 on a common slice over {name}")
        real_y = PropertyResult(f"C(x, y) = (y - x)^-1 for real y over {name}")
        for _ in range(n_pairs):
            J = random_sqrt_minus_one(spec, rng)
            a, b, c, d = rng.normal(size=4)
            x, y = a + J * b, c + J * d
            C = cauchy_kernel(x, y)
            prod = C * (y - x)
            err = (prod - 1.0).norm_inf() / (1.0 + C.norm_inf() * (y - x).norm_inf())
            res.record(err <= 1e-9, err, (x, y))
            x2 = random_quadratic_cone(spec, rng)
            yr = spec.real(float(rng.normal()))
            err = _rel(cauchy_kernel(x2, yr), alg.inverse(yr - x2))
            real_y.record(err <= 1e-9, err, (x2, yr))
        props += [res, real_y]
    return SuiteResult("kernel", props)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "cones": suite_cones,
    "alternativity": suite_alternativity,
    "slice": suite_slice,
    "representation": suite_representation,
    "leibniz": suite_leibniz,
    "normal-mult": suite_normal_mult,
    "fta": suite_fta,
    "kernel": suite_kernel,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
