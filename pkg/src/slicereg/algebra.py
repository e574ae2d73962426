"""Finite-dimensional real alternative algebras with a fixed antiinvolution.

An algebra is described by its structure constants ``mul_table[i, j, k]``
(``e_i e_j = sum_k mul_table[i, j, k] e_k``) and by the matrix of its
antiinvolution ``x -> x^c`` acting on coordinate column vectors.  Basis index
0 is always the unity.

All predicates that decide "is real", "is zero" or membership in one of the
cones take a relative tolerance (default ``DEFAULT_TOL``).  Cone tests first
rescale their argument to unit max-norm, which is legitimate because both
cones are closed under multiplication by positive reals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import AlgebraMismatch, InvalidAlgebra, NotInQuadraticCone, Singular

DEFAULT_TOL = 1e-9

# batch products are chunked so the temporary stays below this many floats
_BATCH_BUDGET = 2_000_000


@dataclass(frozen=True)
class ValidationFailure:
    invariant: str
    where: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.invariant} at {self.where}: {self.detail}"


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """Structure constants plus antiinvolution of a real unital algebra.

    Instances are immutable (the arrays are stored read-only) and can be
    shared freely.  Construct them through :func:`make_custom` or
    :func:`slicereg.builtins.make_builtin`, which also validate the axioms.
    """

    dim: int
    basis_labels: tuple[str, ...]
    mul_table: np.ndarray
    conj_matrix: np.ndarray
    name: str = "custom"

    def __post_init__(self):
        d = int(self.dim)
        if d < 1:
            raise InvalidAlgebra([ValidationFailure("shape", (), f"dim must be >= 1, got {d}")])
        table = np.array(self.mul_table, dtype=float)
        conj = np.array(self.conj_matrix, dtype=float)
        labels = tuple(str(s) for s in self.basis_labels)
        problems = []
        if table.shape != (d, d, d):
            problems.append(ValidationFailure("shape", (), f"mul_table has shape {table.shape}, expected {(d, d, d)}"))
        if conj.shape != (d, d):
            problems.append(ValidationFailure("shape", (), f"conj_matrix has shape {conj.shape}, expected {(d, d)}"))
        if len(labels) != d:
            problems.append(ValidationFailure("shape", (), f"{len(labels)} basis labels for dim {d}"))
        elif len(set(labels)) != d:
            problems.append(ValidationFailure("shape", (), "basis labels are not distinct"))
        if problems:
            raise InvalidAlgebra(problems)
        table.setflags(write=False)
        conj.setflags(write=False)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "mul_table", table)
        object.__setattr__(self, "conj_matrix", conj)
        object.__setattr__(self, "basis_labels", labels)

    def __repr__(self) -> str:
        return f"AlgebraSpec(name={self.name!r}, dim={self.dim})"

    # -- construction helpers ------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, np.zeros(self.dim))

    def one(self) -> Element:
        return self.real(1.0)

    def real(self, value: float) -> Element:
        c = np.zeros(self.dim)
        c[0] = value
        return Element(self, c)

    def basis(self, key) -> Element:
        """Basis element by index or by label (``spec.basis("e12")``)."""
        idx = self.label_index(key) if isinstance(key, str) else int(key)
        c = np.zeros(self.dim)
        c[idx] = 1.0
        return Element(self, c)

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise KeyError(f"{self.name} has no basis element {label!r}") from None

    def from_labels(self, terms: dict) -> Element:
        c = np.zeros(self.dim)
        for label, value in terms.items():
            c[self.label_index(label)] += float(value)
        return Element(self, c)

    # -- kernels ---------------------------------------------------------

    @cached_property
    def _sparse(self):
        ii, jj, kk = np.nonzero(self.mul_table)
        return ii, jj, kk, self.mul_table[ii, jj, kk]

    @cached_property
    def _use_sparse(self) -> bool:
        d = self.dim
        return d > 16 and 4 * len(self._sparse[0]) < d ** 3

    @cached_property
    def _flat_table(self) -> np.ndarray:
        return self.mul_table.reshape(self.dim, self.dim * self.dim)

    @cached_property
    def _scatter(self) -> np.ndarray:
        kk = self._sparse[2]
        s = np.zeros((len(kk), self.dim))
        s[np.arange(len(kk)), kk] = 1.0
        return s

    def mul_coords(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Bilinear product on raw coordinate vectors."""
        if self._use_sparse:
            ii, jj, kk, vals = self._sparse
            return np.bincount(kk, weights=vals * a[ii] * b[jj], minlength=self.dim)
        return b @ (a @ self._flat_table).reshape(self.dim, self.dim)

    def mul_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Row-wise products of two ``(N, d)`` coordinate arrays.

        Either argument may also be a single length-``d`` vector, which is
        broadcast against the other.
        """
        a = np.atleast_2d(a)
        b = np.atleast_2d(b)
        n = max(len(a), len(b))
        a = np.broadcast_to(a, (n, self.dim))
        b = np.broadcast_to(b, (n, self.dim))
        out = np.empty((n, self.dim))
        if self._use_sparse:
            ii, jj, _, vals = self._sparse
            step = max(1, _BATCH_BUDGET // max(1, len(vals)))
            for s in range(0, n, step):
                prod = a[s:s + step, ii] * b[s:s + step, jj] * vals
                out[s:s + step] = prod @ self._scatter
        else:
            step = max(1, _BATCH_BUDGET // (self.dim * self.dim))
            for s in range(0, n, step):
                left = (a[s:s + step] @ self._flat_table).reshape(-1, self.dim, self.dim)
                out[s:s + step] = np.einsum("nj,njk->nk", b[s:s + step], left)
        return out

    def left_matrix(self, a: np.ndarray) -> np.ndarray:
        """Matrix ``L`` with ``L @ v == a * v`` in coordinates."""
        return (a @ self._flat_table).reshape(self.dim, self.dim).T

    def conj_coords(self, a: np.ndarray) -> np.ndarray:
        return self.conj_matrix @ a

    @cached_property
    def is_associative(self) -> bool:
        """Exact associativity of the table (trilinear, so basis triples suffice)."""
        scale = 1.0 + float(np.abs(self.mul_table).max()) ** 2
        for slab in _associator_slabs_first(self.mul_table):
            if np.abs(slab).max() > 1e-12 * scale:
                return False
        return True

    @cached_property
    def imaginary_units(self) -> tuple[int, ...]:
        """Indices of basis elements that are square roots of -1."""
        return tuple(i for i in range(1, self.dim) if is_sqrt_minus_one(self.basis(i)))

    def same_as(self, other: AlgebraSpec) -> bool:
        return self is other or (
            self.dim == other.dim
            and self.basis_labels == other.basis_labels
            and np.array_equal(self.mul_table, other.mul_table)
            and np.array_equal(self.conj_matrix, other.conj_matrix)
        )


class Element:
    """A coordinate vector in the basis of an :class:`AlgebraSpec`.

    Supports ``+``, ``-``, ``*`` (algebra product, or scaling by a real
    number) and division by a real number.  Real numbers are promoted to
    multiples of the unity in sums.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraSpec, coords):
        c = np.array(coords, dtype=float).reshape(-1)
        if c.shape != (algebra.dim,):
            raise ValueError(f"expected {algebra.dim} coordinates, got {c.size}")
        self.algebra = algebra
        self.coords = c

    def _check(self, other: Element) -> None:
        if not self.algebra.same_as(other.algebra):
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    def _coerce(self, other) -> Element | None:
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self.algebra.real(float(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, self.coords + o.coords)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, self.coords - o.coords)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, o.coords - self.coords)

    def __neg__(self):
        return Element(self.algebra, -self.coords)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Element(self.algebra, self.coords * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Element(self.algebra, self.coords * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Element(self.algebra, self.coords / float(other))
        return NotImplemented

    def conj(self) -> Element:
        return conj(self)

    def norm_inf(self) -> float:
        return float(np.abs(self.coords).max())

    def allclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        o = self._coerce(other)
        scale = 1.0 + max(self.norm_inf(), o.norm_inf())
        return float(np.abs(self.coords - o.coords).max()) <= tol * scale

    def __repr__(self) -> str:
        return format_element(self)


def format_element(x: Element, digits: int = 12) -> str:
    terms = []
    for label, c in zip(x.algebra.basis_labels, x.coords):
        if c == 0:
            continue
        v = float(f"{c:.{digits}g}")
        if label == x.algebra.basis_labels[0]:
            terms.append(f"{v:g}")
        elif v == 1:
            terms.append(label)
        elif v == -1:
            terms.append(f"-{label}")
        else:
            terms.append(f"{v:g}{label}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


# -- construction ---------------------------------------------------------

def make_custom(dim: int, basis_labels: Sequence[str], mul_table, conj_matrix,
                name: str = "custom", **validate_kwargs) -> AlgebraSpec:
    """Build an algebra from raw tables; raises InvalidAlgebra listing every failure."""
    spec = AlgebraSpec(dim, tuple(basis_labels), np.asarray(mul_table, float),
                       np.asarray(conj_matrix, float), name)
    report = validate_algebra(spec, **validate_kwargs)
    if report:
        raise InvalidAlgebra(report)
    return spec


def _associator_slabs_first(table: np.ndarray):
    """Yield ``A[i] = (e_i e_j) e_k - e_i (e_j e_k)`` as ``(j, k, l)`` arrays."""
    d = table.shape[0]
    flat = table.reshape(d, d * d)
    for i in range(d):
        left = (table[i] @ flat).reshape(d, d, d)
        right = table @ table[i]
        yield left - right


def _associator_slabs_middle(table: np.ndarray):
    """Yield ``B[j][i, k, l] = A[i, j, k, l]`` for each middle index ``j``."""
    d = table.shape[0]
    flat = table.reshape(d, d * d)
    for j in range(d):
        left = (table[:, j, :] @ flat).reshape(d, d, d)
        right = np.tensordot(table, table[j], axes=(1, 1)).transpose(0, 2, 1)
        yield left - right


def validate_algebra(spec: AlgebraSpec, tol: float = 1e-12, exhaustive_dim: int = 64,
                     n_random: int = 10_000, seed: int = 0,
                     max_per_invariant: int = 20) -> list[ValidationFailure]:
    """Check unity, involution, antiautomorphism and alternativity.

    Alternativity is checked in its polarized form: the associator must flip
    sign under swapping the last two and the outer two arguments, for all
    basis triples.  This is equivalent to alternativity on the whole algebra.
    Above ``exhaustive_dim`` random triples are checked instead.
    Returns the list of failures; an empty list means the algebra is valid.
    """
    d = spec.dim
    T = spec.mul_table
    C = spec.conj_matrix
    eye = np.eye(d)
    scale = 1.0 + float(np.abs(T).max()) ** 2
    out: list[ValidationFailure] = []

    def report(kind, where, detail):
        if sum(f.invariant == kind for f in out) < max_per_invariant:
            out.append(ValidationFailure(kind, where, detail))

    for j in range(d):
        if not np.allclose(T[0, j], eye[j], atol=tol, rtol=0):
            report("unity", ("e0", spec.basis_labels[j]), "e0*e_j != e_j")
        if not np.allclose(T[j, 0], eye[j], atol=tol, rtol=0):
            report("unity", (spec.basis_labels[j], "e0"), "e_j*e0 != e_j")

    if not np.allclose(C @ C, eye, atol=tol, rtol=0):
        report("involution", (), "conj_matrix squared is not the identity")
    if not np.allclose(C[:, 0], eye[0], atol=tol, rtol=0):
        report("involution", ("e0",), "conj does not fix the unity")

    lhs = T @ C.T
    rhs = np.tensordot(C, np.tensordot(C, T, axes=(0, 0)), axes=(0, 1))
    bad = np.argwhere(np.abs(lhs - rhs).max(axis=2) > tol * scale)
    for i, j in bad:
        report("antiautomorphism", (spec.basis_labels[i], spec.basis_labels[j]),
               "conj(e_i e_j) != conj(e_j) conj(e_i)")

    atol = tol * scale * (1.0 + float(np.abs(T).max()))
    if d <= exhaustive_dim:
        for i, slab in enumerate(_associator_slabs_first(T)):
            sym = np.abs(slab + slab.transpose(1, 0, 2)).max(axis=2)
            for j, k in np.argwhere(sym > atol):
                if j <= k:
                    report("alternativity", tuple(spec.basis_labels[t] for t in (i, j, k)),
                           "(x,y,z) + (x,z,y) != 0")
        for j, slab in enumerate(_associator_slabs_middle(T)):
            sym = np.abs(slab + slab.transpose(1, 0, 2)).max(axis=2)
            for i, k in np.argwhere(sym > atol):
                if i <= k:
                    report("alternativity", tuple(spec.basis_labels[t] for t in (i, j, k)),
                           "(x,y,z) + (z,y,x) != 0")
    else:
        rng = np.random.default_rng(seed)
        for i, j, k in rng.integers(0, d, size=(n_random, 3)):
            ei, ej, ek = eye[i], eye[j], eye[k]

            def assoc(x, y, z):
                m = spec.mul_coords
                return m(m(x, y), z) - m(x, m(y, z))

            a = assoc(ei, ej, ek)
            if (np.abs(a + assoc(ei, ek, ej)).max() > atol
                    or np.abs(a + assoc(ek, ej, ei)).max() > atol):
                report("alternativity", tuple(spec.basis_labels[t] for t in (i, j, k)),
                       "associator is not alternating (sampled)")
    return out


# -- JSON -----------------------------------------------------------------

def spec_to_json(spec: AlgebraSpec) -> dict:
    return {
        "name": spec.name,
        "dim": spec.dim,
        "basis": list(spec.basis_labels),
        "mul_table": spec.mul_table.tolist(),
        "conj": spec.conj_matrix.tolist(),
    }


def spec_from_json(doc: dict) -> AlgebraSpec:
    return make_custom(doc["dim"], doc["basis"], doc["mul_table"], doc["conj"],
                       name=doc.get("name", "custom"))


# -- arithmetic -----------------------------------------------------------

def add(x: Element, y: Element) -> Element:
    return x + y


def sub(x: Element, y: Element) -> Element:
    return x - y


def neg(x: Element) -> Element:
    return -x


def scale(x: Element, r: float) -> Element:
    return x * float(r)


def mul(x: Element, y: Element) -> Element:
    return x * y


def conj(x: Element) -> Element:
    return Element(x.algebra, x.algebra.conj_coords(x.coords))


def trace(x: Element) -> Element:
    """``t(x) = x + x^c``; not real in general."""
    return x + conj(x)


def norm_elem(x: Element) -> Element:
    """``n(x) = x x^c``; not real in general."""
    return x * conj(x)


def associator(x: Element, y: Element, z: Element) -> Element:
    return (x * y) * z - x * (y * z)


def _nonreal(c: np.ndarray) -> float:
    return float(np.abs(c[1:]).max()) if c.size > 1 else 0.0


def is_real(x: Element, tol: float = DEFAULT_TOL) -> bool:
    return _nonreal(x.coords) <= tol * (1.0 + x.norm_inf())


def real_part_scalar(x: Element) -> float:
    return float(x.coords[0])


def _unit(x: Element) -> Element | None:
    s = x.norm_inf()
    return None if s == 0.0 else x / s


def in_normal_cone(x: Element, tol: float = DEFAULT_TOL) -> bool:
    """``x == 0`` or ``n(x) = n(x^c)`` is a nonzero real number."""
    u = _unit(x)
    if u is None:
        return True
    uc = conj(u)
    n = u * uc
    nc = uc * u
    return (
        _nonreal(n.coords) <= tol
        and float(np.abs(n.coords - nc.coords).max()) <= tol
        and abs(n.coords[0]) > tol
    )


def in_quadratic_cone(x: Element, tol: float = DEFAULT_TOL) -> bool:
    """``x`` real, or ``t(x)``, ``n(x)`` real with ``4 n(x) > t(x)^2``."""
    if is_real(x, tol):
        return True
    u = _unit(x)
    t = trace(u)
    n = norm_elem(u)
    if _nonreal(t.coords) > tol or _nonreal(n.coords) > tol:
        return False
    return 4.0 * n.coords[0] - t.coords[0] ** 2 > -tol


def is_sqrt_minus_one(J: Element, tol: float = DEFAULT_TOL) -> bool:
    s = J.norm_inf()
    t = trace(J)
    n = norm_elem(J) - 1.0
    return t.norm_inf() <= tol * (1.0 + s) and n.norm_inf() <= tol * (1.0 + s * s)


def decompose(x: Element, tol: float = DEFAULT_TOL) -> tuple[float, Element]:
    """Split ``x`` in the quadratic cone as ``alpha + im`` with ``t(im) = 0``."""
    if not in_quadratic_cone(x, tol):
        raise NotInQuadraticCone(f"{x!r} is not in the quadratic cone of {x.algebra.name}")
    if is_real(x, tol):
        return float(x.coords[0]), x.algebra.zero()
    alpha = 0.5 * float(trace(x).coords[0])
    return alpha, (x - conj(x)) * 0.5


def slice_coords(x: Element, tol: float = DEFAULT_TOL) -> tuple[float, float, Element | None]:
    """Return ``(alpha, beta, J)`` with ``x = alpha + beta J``, ``beta >= 0``.

    ``J`` is ``None`` for real ``x``.
    """
    alpha, im = decompose(x, tol)
    if is_real(x, tol):
        return alpha, 0.0, None
    n_im = float(norm_elem(im).coords[0])
    beta = math.sqrt(max(n_im, 0.0))
    if beta <= tol:
        raise NotInQuadraticCone(f"{x!r}: imaginary part has vanishing norm")
    return alpha, beta, im / beta


def inverse(x: Element, tol: float = DEFAULT_TOL) -> Element:
    """Two-sided inverse; closed form on the normal cone, linear solve elsewhere."""
    spec = x.algebra
    s = x.norm_inf()
    if s == 0.0:
        raise Singular("zero has no inverse")
    if in_normal_cone(x, tol):
        return conj(x) / float(norm_elem(x).coords[0])
    e0 = np.zeros(spec.dim)
    e0[0] = 1.0
    try:
        v = np.linalg.solve(spec.left_matrix(x.coords), e0)
    except np.linalg.LinAlgError:
        raise Singular(f"{x!r} is not invertible") from None
    check = tol * (1.0 + s * float(np.abs(v).max()))
    if (np.abs(spec.mul_coords(x.coords, v) - e0).max() > check
            or np.abs(spec.mul_coords(v, x.coords) - e0).max() > check):
        raise Singular(f"{x!r} has no two-sided inverse within tolerance")
    return Element(spec, v)


def subspace_in_normal_cone(vectors: Iterable[Element], tol: float = DEFAULT_TOL) -> bool:
    """Whether the real span of ``vectors`` lies in the normal cone.

    Checked by polarization on every pair of spanning vectors: the norm form
    and its conjugate must be real and agree on the span.  The requirement
    that norms be nonzero is not checked on a subspace.
    """
    units = [u for u in (_unit(v) for v in vectors) if u is not None]
    conjs = [conj(u) for u in units]
    for i in range(len(units)):
        for j in range(i, len(units)):
            p = units[i] * conjs[j] + units[j] * conjs[i]
            q = conjs[i] * units[j] + conjs[j] * units[i]
            if _nonreal(p.coords) > 2 * tol:
                return False
            if float(np.abs(p.coords - q.coords).max()) > 2 * tol:
                return False
    return True


@dataclass(frozen=True)
class HypothesisCheck:
    holds: bool
    n_checked: int
    counterexample: Element | None = None


def check_real_norm_hypothesis(spec: AlgebraSpec, n_samples: int = 2000, seed: int = 0,
                               tol: float = DEFAULT_TOL) -> HypothesisCheck:
    """Sample-test "n(x) real implies n(x) = n(x^c) != 0" for nonzero x.

    The result is probabilistic: ``holds=True`` only means no counterexample
    was found among ``n_checked`` samples whose norm came out real.  Samples
    are sparse small-integer combinations of basis elements, which is where
    real norms actually occur in Clifford-type algebras.
    """
    rng = np.random.default_rng(seed)
    checked = 0
    d = spec.dim
    for _ in range(n_samples):
        k = int(rng.integers(1, min(d, 4) + 1))
        idx = rng.choice(d, size=k, replace=False)
        c = np.zeros(d)
        c[idx] = rng.integers(-3, 4, size=k)
        x = Element(spec, c)
        if x.norm_inf() == 0:
            continue
        u = _unit(x)
        n = norm_elem(u)
        if _nonreal(n.coords) > tol:
            continue
        checked += 1
        nc = conj(u) * u
        if abs(n.coords[0]) <= tol or float(np.abs(n.coords - nc.coords).max()) > tol:
            return HypothesisCheck(False, checked, x)
    return HypothesisCheck(True, checked)
