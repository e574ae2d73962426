"""Built-in algebras: reals, complexes, quaternions, octonions, Clifford Cl(0,n).

Conventions
-----------
Quaternions use the basis ``1, i, j, k`` with ``ij = k``.

Octonions are the Cayley-Dickson double of the quaternions with
``(a, b)(c, d) = (ac - d^c b, da + b c^c)`` and ``(a, b)^c = (a^c, -b)``.
The basis is ``1, e1, ..., e7`` with ``e1, e2, e3 = (i, 0), (j, 0), (k, 0)``
and ``e_{4+m} = (0, q_m)`` for ``q = 1, i, j, k``.  In particular
``e1 e2 = e3`` and ``e1 e4 = e5``.

Clifford algebras ``Cl(0, n)`` use blades ``e_A`` indexed by subsets of
``{1..n}`` ordered by grade then lexicographically, with ``e_i^2 = -1`` and
the Clifford conjugation ``e_A^c = (-1)^(k(k+1)/2) e_A`` on grade ``k``.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

import numpy as np

from .algebra import AlgebraSpec, make_custom
from .errors import CapExceeded

CLIFFORD_CAP = 6

_QUAT_LABELS = ("1", "i", "j", "k")


def _quaternion_table() -> np.ndarray:
    # rows: left factor, cols: right factor, entries (sign, index)
    prod = {
        (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    t = np.zeros((4, 4, 4))
    for a in range(4):
        t[0, a, a] = 1.0
        t[a, 0, a] = 1.0
    for (a, b), (s, c) in prod.items():
        t[a, b, c] = s
    return t


def cayley_dickson(table: np.ndarray, conj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Double an algebra: ``(a,b)(c,d) = (ac - d^c b, da + b c^c)``."""
    d = table.shape[0]
    D = 2 * d

    def mul(x, y):
        return np.einsum("i,j,ijk->k", x, y, table)

    def cj(x):
        return conj @ x

    out = np.zeros((D, D, D))
    eye = np.eye(d)
    for p in range(D):
        for q in range(D):
            a = eye[p] if p < d else np.zeros(d)
            b = np.zeros(d) if p < d else eye[p - d]
            c = eye[q] if q < d else np.zeros(d)
            e = np.zeros(d) if q < d else eye[q - d]
            out[p, q, :d] = mul(a, c) - mul(cj(e), b)
            out[p, q, d:] = mul(e, a) + mul(b, cj(c))
    new_conj = np.zeros((D, D))
    new_conj[:d, :d] = conj
    new_conj[d:, d:] = -np.eye(d)
    return out, new_conj


def clifford_blades(n: int) -> list[tuple[int, ...]]:
    return [b for k in range(n + 1) for b in combinations(range(1, n + 1), k)]


def blade_product(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and blade of ``e_a e_b`` in Cl(0, n)."""
    swaps = sum(1 for x in a for y in b if x > y)
    common = len(set(a) & set(b))
    sign = -1 if (swaps + common) % 2 else 1
    return sign, tuple(sorted(set(a) ^ set(b)))


def blade_label(blade: tuple[int, ...]) -> str:
    return "1" if not blade else "e" + "".join(str(i) for i in blade)


def _clifford(n: int) -> AlgebraSpec:
    blades = clifford_blades(n)
    index = {b: i for i, b in enumerate(blades)}
    d = len(blades)
    t = np.zeros((d, d, d))
    for i, a in enumerate(blades):
        for j, b in enumerate(blades):
            s, c = blade_product(a, b)
            t[i, j, index[c]] = s
    signs = [-1.0 if (len(b) * (len(b) + 1) // 2) % 2 else 1.0 for b in blades]
    return make_custom(d, [blade_label(b) for b in blades], t, np.diag(signs),
                       name=f"clifford{n}")


def _build(kind: str, n: int | None) -> AlgebraSpec:
    if kind == "reals":
        return make_custom(1, ["1"], np.ones((1, 1, 1)), np.eye(1), name="reals")
    if kind == "complexes":
        t = np.zeros((2, 2, 2))
        t[0, 0, 0] = t[0, 1, 1] = t[1, 0, 1] = 1.0
        t[1, 1, 0] = -1.0
        return make_custom(2, ["1", "i"], t, np.diag([1.0, -1.0]), name="complexes")
    if kind == "quaternions":
        return make_custom(4, _QUAT_LABELS, _quaternion_table(), np.diag([1.0, -1, -1, -1]),
                           name="quaternions")
    if kind == "octonions":
        t, c = cayley_dickson(_quaternion_table(), np.diag([1.0, -1, -1, -1]))
        return make_custom(8, ["1"] + [f"e{m}" for m in range(1, 8)], t, c, name="octonions")
    if kind == "clifford":
        return _clifford(n)
    raise ValueError(f"unknown builtin algebra {kind!r}")


_ALIASES = {
    "r": "reals", "real": "reals", "reals": "reals",
    "c": "complexes", "complex": "complexes", "complexes": "complexes",
    "h": "quaternions", "quaternion": "quaternions", "quaternions": "quaternions",
    "o": "octonions", "octonion": "octonions", "octonions": "octonions",
}


def parse_builtin_name(name: str) -> tuple[str, int | None]:
    """``"clifford3"``, ``"clifford(3)"``, ``"cl3"`` or an alias like ``"H"``."""
    key = name.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key], None
    m = re.fullmatch(r"(?:clifford|cl)\s*\(?\s*(\d+)\s*\)?", key)
    if m:
        return "clifford", int(m.group(1))
    raise ValueError(f"unknown builtin algebra {name!r}")


def make_builtin(kind: str, n: int | None = None, cap: int = CLIFFORD_CAP) -> AlgebraSpec:
    """Return a validated built-in algebra.

    ``make_builtin("clifford", 3)`` and ``make_builtin("clifford3")`` are
    equivalent.  Results are cached, so repeated calls share one instance.
    """
    if n is None:
        kind, n = parse_builtin_name(kind)
    else:
        kind = parse_builtin_name(kind)[0] if kind.lower() not in ("clifford", "cl") else "clifford"
    if kind == "clifford":
        if n is None or n < 1:
            raise ValueError("clifford(n) needs n >= 1")
        if n > cap:
            raise CapExceeded(f"clifford({n}) exceeds the dimension cap n <= {cap}")
    return _cached(kind, n)


@lru_cache(maxsize=None)
def _cached(kind: str, n: int | None) -> AlgebraSpec:
    return _build(kind, n)
