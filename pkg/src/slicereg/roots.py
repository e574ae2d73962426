"""Simultaneous polynomial root finding (Aberth-Ehrlich) with multiplicity clustering."""
from __future__ import annotations

import numpy as np

from .errors import NoConvergence

MAX_ITER = 500
STEP_TOL = 1e-13
CLUSTER_RADIUS = 1e-6
MERGE_RADIUS = 5e-2  # a k-fold root spreads over ~eps**(1/k); _is_multiple guards the merge
ANGLE_OFFSET = 0.376


def _horner(c: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value and derivative of ``sum c[k] z^k`` (ascending coefficients)."""
    p = np.full_like(z, c[-1], dtype=complex)
    dp = np.zeros_like(z, dtype=complex)
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _abs_horner(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    out = np.full_like(r, abs(c[-1]), dtype=float)
    for a in np.abs(c[-2::-1]):
        out = out * r + a
    return out


def _aberth(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    radius = 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + ANGLE_OFFSET))
    eps = np.finfo(float).eps
    done = np.zeros(n, dtype=bool)
    for _ in range(MAX_ITER):
        p, dp = _horner(c, z)
        backward = np.abs(p) <= 8 * n * eps * _abs_horner(c, np.abs(z))
        done |= backward
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = (1.0 / diff).sum(axis=1) - 1.0  # remove the diagonal's contribution
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step) & ~done, step, 0.0)
        z = z - step
        done |= np.abs(step) <= STEP_TOL * np.maximum(1.0, np.abs(z))
        if done.all():
            return z
    raise NoConvergence(f"Aberth iteration did not converge within {MAX_ITER} iterations")


def _clusters(z: np.ndarray, radius: float) -> list[list[int]]:
    """Single-linkage clusters with a point-dependent radius."""
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= radius * (1.0 + max(abs(z[i]), abs(z[j]))):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _derivative(c: np.ndarray, k: int) -> np.ndarray:
    for _ in range(k):
        c = c[1:] * np.arange(1, len(c))
    return c


def _polish(c: np.ndarray, z: complex, m: int, steps: int = 8) -> complex:
    """Newton on the (m-1)-th derivative, where an m-fold root becomes simple."""
    d = _derivative(c, m - 1)
    if len(d) < 2:
        return z
    best, best_val = z, abs(_horner(d, np.array([z]))[0][0])
    for _ in range(steps):
        p, dp = _horner(d, np.array([best]))
        if dp[0] == 0:
            break
        cand = best - p[0] / dp[0]
        val = abs(_horner(d, np.array([cand]))[0][0])
        if not val < best_val:
            break
        best, best_val = cand, val
    return best


def _is_multiple(c: np.ndarray, z: complex, m: int) -> bool:
    """Whether derivatives 0..m-1 at z are small relative to their magnitudes."""
    eps = np.finfo(float).eps
    n = len(c) - 1
    for k in range(m):
        d = _derivative(c, k)
        val = abs(_horner(d, np.array([z]))[0][0])
        ref = _abs_horner(d, np.array([abs(z)]))[0]
        # perturbing an m-fold root by delta moves p^(k) by ~ delta^(m-k)
        if val > max(1e-4 ** (m - k), 1e3 * n * eps) * ref:
            return False
    return True


def complex_roots(coeffs, tol: float = CLUSTER_RADIUS) -> list[tuple[complex, int]]:
    """Roots with multiplicities of ``sum coeffs[k] z^k`` (ascending order).

    Roots within ``tol * (1 + |root|)`` of each other are merged into one
    cluster whose size is the multiplicity.  Looser clusters (up to
    ``MERGE_RADIUS``) are merged only if the derivatives confirm a multiple
    root.  For real coefficients the output is symmetric under conjugation.
    The result is sorted by real part, then imaginary part.
    """
    c = np.array(coeffs, dtype=complex)
    nz = np.flatnonzero(c != 0)
    if nz.size == 0:
        raise ValueError("the zero polynomial has no well-defined roots")
    c = c[: nz[-1] + 1]
    real_input = bool(np.all(c.imag == 0))
    lead_zeros = int(nz[0])
    c = c[lead_zeros:]
    out: list[tuple[complex, int]] = []
    if lead_zeros:
        out.append((0j, lead_zeros))
    if len(c) > 1:
        z = _aberth(c)
        groups = _clusters(z, tol)
        centers = [(complex(np.mean(z[g])), len(g)) for g in groups]
        centers = _merge_loose(c, centers)
        out.extend((_polish(c, r, m), m) for r, m in centers)
    out = [(complex(r), int(m)) for r, m in out]
    if real_input:
        out = _symmetrize(out)
    out.sort(key=lambda t: (round(t[0].real, 12), round(t[0].imag, 12)))
    return out


def _merge_loose(c: np.ndarray, centers: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    changed = True
    while changed and len(centers) > 1:
        changed = False
        for i in range(len(centers)):
            for j in range(i + 1, len(centers)):
                (a, ma), (b, mb) = centers[i], centers[j]
                if abs(a - b) > MERGE_RADIUS * (1.0 + max(abs(a), abs(b))):
                    continue
                m = ma + mb
                # the centroid of a loose cluster can be off by ~eps**(1/m); polish first
                mid = _polish(c, (a * ma + b * mb) / m, m)
                if _is_multiple(c, mid, m):
                    centers = [t for k, t in enumerate(centers) if k not in (i, j)] + [(mid, m)]
                    changed = True
                    break
            if changed:
                break
    return centers


def _symmetrize(roots: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    """Snap near-real roots to R and average conjugate partners."""
    out = []
    pending = list(roots)
    while pending:
        r, m = pending.pop(0)
        if abs(r.imag) <= CLUSTER_RADIUS * (1.0 + abs(r)):
            out.append((complex(r.real, 0.0), m))
            continue
        k = min(range(len(pending)), key=lambda i: abs(pending[i][0] - r.conjugate()),
                default=None)
        if k is not None and pending[k][1] == m and abs(pending[k][0] - r.conjugate()) <= MERGE_RADIUS * (1 + abs(r)):
            s, _ = pending.pop(k)
            avg = 0.5 * (r + s.conjugate())
            out.append((avg, m))
            out.append((avg.conjugate(), m))
        else:
            out.append((r, m))
    return out
