"""Reference implementations that share no code with the package."""
import numpy as np

from slicereg.builtins import clifford_blades


def blade_oracle(a, b):
    """Product of two basis blades of Cl(0,n) by bubble sort; e_i^2 = -1."""
    word = list(a) + list(b)
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    out = []
    for g in word:
        if out and out[-1] == g:
            out.pop()
            sign = -sign
        else:
            out.append(g)
    return sign, tuple(out)


def hamilton(p, q):
    """Quaternion product from the scalar/vector formula."""
    p0, pv, q0, qv = p[0], np.asarray(p[1:]), q[0], np.asarray(q[1:])
    return np.concatenate([[p0 * q0 - pv @ qv], p0 * qv + q0 * pv + np.cross(pv, qv)])


def qconj(p):
    return np.concatenate([[p[0]], -np.asarray(p[1:])])


def octonion_oracle(x, y):
    """Cayley-Dickson doubling (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))."""
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    return np.concatenate([hamilton(a, c) - hamilton(qconj(d), b),
                           hamilton(d, a) + hamilton(b, qconj(c))])


def cl3_to_hh(spec, x):
    """Cl(0,3) -> H + H, e_k -> (q_k, -q_k)."""
    blades = clifford_blades(3)
    units = {1: np.eye(4)[1], 2: np.eye(4)[2], 3: np.eye(4)[3]}
    a, b = np.zeros(4), np.zeros(4)
    for coef, blade in zip(x.coords, blades):
        pa, pb = np.eye(4)[0], np.eye(4)[0]
        for g in blade:
            pa, pb = hamilton(pa, units[g]), hamilton(pb, -units[g])
        a, b = a + coef * pa, b + coef * pb
    return a, b


def hh_normal_is_real(spec, x, tol=1e-12):
    """In H + H the Clifford norm of (a, b) is (|a|^2, |b|^2): real iff |a| = |b|."""
    a, b = cl3_to_hh(spec, x)
    return abs(a @ a - b @ b) <= tol * (1 + a @ a + b @ b)
