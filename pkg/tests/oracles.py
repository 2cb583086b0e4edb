"""Dense numpy reference implementations, built without the library's sparse machinery.

Gamma matrices come from explicit Kronecker products of Pauli matrices; all
other oracles are written on top of them in floating point, so they share no
code with the exact implementation they check.
"""
from __future__ import annotations

from functools import lru_cache, reduce
from itertools import combinations

import numpy as np

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)


def kron(*ms):
    return reduce(np.kron, ms)


@lru_cache(maxsize=None)
def gammas(n: int):
    """e_{2k-1} = Z..Z X 1..1, e_{2k} = Z..Z Y 1..1 with k-1 leading Z factors."""
    out = []
    for k in range(n):
        for p in (X, Y):
            out.append(kron(*([Z] * k + [p] + [ID2] * (n - k - 1))))
    return tuple(out)


@lru_cache(maxsize=None)
def chirality(n: int):
    vol = reduce(np.matmul, gammas(n))
    return (-1j) ** n * vol


@lru_cache(maxsize=None)
def charge(n: int):
    g = gammas(n)
    if n % 2 == 0:
        return reduce(np.matmul, [g[i] for i in range(1, 2 * n, 2)])
    c = reduce(np.matmul, [g[i] for i in range(0, 2 * n, 2)])
    return -c if ((n - 1) // 2) % 2 else c


def blade(n: int, indices):
    m = np.eye(1 << n, dtype=complex)
    for i in indices:
        m = m @ gammas(n)[i - 1]
    return m


def to_complex(x) -> complex:
    return x.to_complex()


def vec(values) -> np.ndarray:
    return np.array([to_complex(v) for v in values], dtype=complex)


def signed_perm_dense(sp) -> np.ndarray:
    n = sp.size
    out = np.zeros((n, n), dtype=complex)
    for r in range(n):
        out[r, sp.perm[r]] = sp.value(r).to_complex()
    return out


def bilinear(n: int, phi, indices, psi) -> complex:
    return phi @ charge(n) @ blade(n, indices) @ psi


def random_chiral(rng: np.random.Generator, n: int, sign: int) -> np.ndarray:
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return (v + sign * chirality(n) @ v) / 2


# Fierz ------------------------------------------------------------------------

def fierz_grade_sum(n, k, s1, s2, s3, s4) -> complex:
    tot = 0
    for idx in combinations(range(1, 2 * n + 1), k):
        m = charge(n) @ blade(n, idx)
        tot += (s1 @ m @ s2) * (s3 @ m @ s4)
    return tot


def fierz_table_lstsq(n, rows, cols, chis, samples=40, seed=0):
    """Least-squares solve for the Fierz matrix from random float spinors."""
    rng = np.random.default_rng(seed)
    sgn = {"+": 1, "-": -1}
    a_rows, at_rows = [], []
    for _ in range(samples):
        s = [random_chiral(rng, n, sgn[c]) for c in chis]
        a_rows.append([fierz_grade_sum(n, k, s[0], s[1], s[2], s[3]) for k in rows])
        at_rows.append([fierz_grade_sum(n, k, s[0], s[3], s[2], s[1]) for k in cols])
    a, at = np.array(a_rows), np.array(at_rows)
    sol, *_ = np.linalg.lstsq(at, a, rcond=None)
    return sol.T.real


# octonions --------------------------------------------------------------------

@lru_cache(maxsize=None)
def triality_spinor():
    s = np.zeros(16, dtype=complex)
    s[0] = s[15] = 1 / np.sqrt(2)
    return s


def star(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """u * v = (t(u) e^i s(v)) e^i with t(u) = u_a e^a e^0 s, s(v) = v_a e^a s (index shift)."""
    g = gammas(4)
    s = triality_spinor()
    t = g[0] @ s
    tu = sum(u[a] * (g[a] @ t) for a in range(8))
    sv = sum(v[a] * (g[a] @ s) for a in range(8))
    c = charge(4)
    return np.array([tu @ c @ g[i] @ sv for i in range(8)])


# Lie algebras -----------------------------------------------------------------

def ad_matrices(sc) -> list:
    n = sc.dim
    out = []
    for j in range(n):
        m = np.zeros((n, n), dtype=complex)
        for k in range(n):
            for idx, v in sc.get(j, k).items():
                m[idx, k] = v.to_complex()
        out.append(m)
    return out


def numeric_rank(m: np.ndarray, tol: float = 1e-8) -> int:
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    return int((sv > tol * max(1.0, sv[0])).sum())


def element_vector(x) -> np.ndarray:
    return vec(x.coords)


def centralizer_dim(sc, sub) -> int:
    """dim of {y : [x, y] = 0 for x in sub} via the rank of stacked ad maps."""
    ads = ad_matrices(sc)
    blocks = []
    for x in sub:
        cx = element_vector(x)
        blocks.append(sum(c * ads[j] for j, c in enumerate(cx) if c))
    return sc.dim - numeric_rank(np.vstack(blocks))
