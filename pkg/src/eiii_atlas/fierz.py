"""Fierz rearrangement tables for D = 8, 10, 16.

For spinors psi1..psi4 write A_k = sum over ascending index sets I of size k of
(psi1 e^I psi2)(psi3 e^I psi4), and A^T_k for the same with psi2 <-> psi4.
A table expresses each A_k as a rational combination of the A^T_k'.

All sums over index sets are done on integer numpy arrays: spinors with
Gaussian rational entries are scaled to Gaussian integers, the blade matrices
are signed permutations, so every bilinear is an exact integer computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .clifford import build_gamma
from .report import Check
from .rng import Rng
from .scalar import ExtScalar

__all__ = ["FierzTable", "SECTORS", "REFERENCE_TABLES", "derive_table", "verify_table",
           "verify_derived", "table_product", "sectors_for"]

# (row grades, column grades, chiralities of psi1..psi4)
SECTORS: Dict[int, Dict[str, Tuple[tuple, tuple, str]]] = {
    8: {
        "even": ((0, 2, 4), (0, 2, 4), "++++"),
        "odd": ((1, 3), (1, 3), "-+-+"),
        "b_even": ((0, 2), (1, 3), "++--"),
        "b_odd": ((1, 3), (0, 2), "-++-"),
    },
    10: {
        "even": ((0, 2, 4), (0, 2, 4), "-+-+"),
        "odd": ((1, 3), (1, 3), "++++"),
        "b_even": ((0, 2, 4), (1, 3, 5), "-++-"),
        "b_odd": ((1, 3, 5), (0, 2, 4), "++--"),
    },
    16: {
        "even": ((0, 2, 4, 6, 8), (0, 2, 4, 6, 8), "++++"),
    },
}

# the B sectors swap parity, so each is inverted by its partner
PARTNER = {"even": "even", "odd": "odd", "b_even": "b_odd", "b_odd": "b_even"}

F = Fraction
REFERENCE_TABLES = {
    (8, "even"): [[F(1, 8), F(-1, 8), F(1, 16)],
                  [F(-7, 2), F(1, 2), F(1, 4)],
                  [F(35, 4), F(5, 4), F(3, 8)]],
    (8, "odd"): [[F(-3, 4), F(1, 4)],
                 [F(7, 4), F(3, 4)]],
    (8, "b_even"): [[F(1, 8), F(-1, 8)],
                    [F(-7, 4), F(-1, 4)]],
    (8, "b_odd"): [[F(1), F(-1, 2)],
                   [F(-7), F(-1, 2)]],
    (10, "even"): [[F(1, 16), F(-1, 16), F(1, 16)],
                   [F(-45, 16), F(13, 16), F(3, 16)],
                   [F(105, 8), F(7, 8), F(1, 8)]],
    (10, "odd"): [[F(-1, 2), F(1, 4)],
                  [F(3), F(1, 2)]],
    (10, "b_even"): [[F(1, 16), F(-1, 16), F(1, 32)],
                     [F(-27, 16), F(3, 16), F(5, 32)],
                     [F(21, 8), F(7, 8), F(5, 16)]],
    (10, "b_odd"): [[F(5, 8), F(-3, 8), F(1, 8)],
                    [F(-15, 2), F(1, 2), F(1, 2)],
                    [F(63, 4), F(7, 4), F(3, 4)]],
    (16, "even"): [[F(1, 128), F(-1, 128), F(1, 128), F(-1, 128), F(1, 256)],
                   [F(-15, 16), F(1, 2), F(-3, 16), F(0), F(1, 32)],
                   [F(455, 32), F(-91, 32), F(-9, 32), F(5, 32), F(7, 64)],
                   [F(-1001, 16), F(0), F(11, 16), F(1, 2), F(7, 32)],
                   [F(6435, 64), F(429, 64), F(99, 64), F(45, 64), F(35, 128)]],
}
del F


@dataclass(frozen=True)
class FierzTable:
    dim: int
    sector: str
    grades: tuple
    col_grades: tuple
    matrix: tuple

    def to_json(self):
        return {"dim": self.dim, "sector": self.sector, "grades": list(self.grades),
                "col_grades": list(self.col_grades),
                "matrix": [[str(x) for x in row] for row in self.matrix]}

    def to_text(self) -> str:
        kind = "A" if self.sector in ("even", "odd") else "B"
        head = [""] + [f"{kind}{k}^T" for k in self.col_grades]
        rows = [[f"{kind}{k}"] + [str(x) for x in r] for k, r in zip(self.grades, self.matrix)]
        widths = [max(len(r[c]) for r in [head] + rows) for c in range(len(head))]
        lines = [f"D={self.dim} sector={self.sector}"]
        for r in [head] + rows:
            lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
        return "\n".join(lines)


def sectors_for(dim: int) -> List[str]:
    if dim not in SECTORS:
        raise ValueError(f"no Fierz tables for dimension {dim}")
    return list(SECTORS[dim])


class _BladeArrays:
    """Per-grade signed-permutation arrays of e^I and C e^I over all index sets."""

    def __init__(self, n: int):
        rep = build_gamma(n)
        self.n, self.dim, self.size = n, rep.dim, rep.size
        self.gp = np.array([g.perm for g in rep.matrices], dtype=np.int64)
        self.gph = np.array([g.phase for g in rep.matrices], dtype=np.int64)
        c = rep.charge_conj
        self.cp = np.array(c.perm, dtype=np.int64)
        self.cph = np.array(c.phase, dtype=np.int64)
        self.sets = {0: [()]}
        self.blade = {0: (np.arange(self.size)[None, :], np.zeros((1, self.size), dtype=np.int64))}
        self._cblade = {}

    def grade(self, k: int):
        if k not in self.blade:
            prev_p, prev_ph = self.grade(k - 1)
            prev_sets = self.sets[k - 1]
            pos = {s: i for i, s in enumerate(prev_sets)}
            sets = list(combinations(range(1, self.dim + 1), k))
            parent = np.array([pos[s[:-1]] for s in sets], dtype=np.int64)
            last = np.array([s[-1] - 1 for s in sets], dtype=np.int64)
            pp = prev_p[parent]
            perm = self.gp[last[:, None], pp]
            phase = (prev_ph[parent] + self.gph[last[:, None], pp]) & 3
            self.sets[k] = sets
            self.blade[k] = (perm, phase)
        return self.blade[k]

    def cgrade(self, k: int):
        if k not in self._cblade:
            perm, phase = self.grade(k)
            cperm = perm[:, self.cp]
            cphase = (self.cph[None, :] + phase[:, self.cp]) & 3
            self._cblade[k] = (cperm, cphase)
        return self._cblade[k]


@lru_cache(maxsize=None)
def _arrays(dim: int) -> _BladeArrays:
    return _BladeArrays(dim // 2)


def _rotate(re, im, ph):
    """Multiply Gaussian integers (re, im) by i**ph elementwise."""
    r = np.where(ph == 0, re, np.where(ph == 1, -im, np.where(ph == 2, -re, im)))
    i = np.where(ph == 0, im, np.where(ph == 1, re, np.where(ph == 2, -im, -re)))
    return r, i


class _IntSpinor:
    """Gaussian-integer image of a spinor: value = (re + i im) / den."""

    def __init__(self, values: Sequence[ExtScalar]):
        if any(not v.is_gaussian() for v in values):
            raise ValueError("integer path needs Gaussian rational entries")
        den = 1
        for v in values:
            den = lcm(den, v.a_re.denominator, v.a_im.denominator)
        self.den = den
        self.re = np.array([int(v.a_re * den) for v in values], dtype=np.int64)
        self.im = np.array([int(v.a_im * den) for v in values], dtype=np.int64)
        self.support = np.nonzero((self.re != 0) | (self.im != 0))[0]

    def bound(self) -> int:
        return int(max(np.abs(self.re).max(initial=0), np.abs(self.im).max(initial=0)))


_LIMIT = 1 << 62


def _pair_all(phi: _IntSpinor, arrays, psi: _IntSpinor):
    """(phi M_I psi) for every I, as exact Python-int object arrays (re, im)."""
    perm, phase = arrays
    rows = phi.support
    if len(rows) == 0:
        z = np.zeros(perm.shape[0], dtype=object)
        return z, z.copy()
    if 2 * phi.bound() * psi.bound() * len(rows) >= _LIMIT:
        raise OverflowError("entries too large for the integer path")
    p = perm[:, rows]
    r, i = _rotate(psi.re[p], psi.im[p], phase[:, rows])
    a, b = phi.re[rows][None, :], phi.im[rows][None, :]
    re = (a * r - b * i).sum(axis=1)
    im = (a * i + b * r).sum(axis=1)
    return re.astype(object), im.astype(object)


def _contract(x, y) -> complex:
    """sum_I x_I y_I for object-array Gaussian integers; returns (re, im) ints."""
    xr, xi = x
    yr, yi = y
    return int((xr * yr - xi * yi).sum()), int((xr * yi + xi * yr).sum())


def _grade_value(dim, k, s1, s2, s3, s4):
    arr = _arrays(dim).cgrade(k)
    return _contract(_pair_all(s1, arr, s2), _pair_all(s3, arr, s4))


def _basis_value(dim, k, a, b, c, d):
    """A_k on coordinate basis spinors (a, b, c, d); a Gaussian integer (re, im)."""
    perm, phase = _arrays(dim).cgrade(k)
    hit = (perm[:, a] == b) & (perm[:, c] == d)
    ph = (phase[hit, a] + phase[hit, c]) & 3
    counts = np.bincount(ph, minlength=4)
    return int(counts[0] - counts[2]), int(counts[1] - counts[3])


def _chiral_indices(n: int, sign: str):
    rep = build_gamma(n)
    return rep.chiral_index(sign)


def derive_table(dim: int, sector: str, seed: int = 0) -> FierzTable:
    """Solve for the table from coordinate-basis quadruples, then confirm on extra samples."""
    if dim not in SECTORS or sector not in SECTORS[dim]:
        raise ValueError(f"invalid Fierz sector {sector!r} for dimension {dim}")
    rows, cols, chis = SECTORS[dim][sector]
    arrays = _arrays(dim)
    idx = [_chiral_indices(dim // 2, c) for c in chis]
    rng = Rng(seed)
    grades = sorted(set(rows) | set(cols))
    xs, ys = [], []
    from .linalg import Echelon, solve
    ech = Echelon()
    chosen = []
    extra = 0
    attempts = 0
    while extra < 3 * len(cols):
        attempts += 1
        if attempts > 20000:
            raise RuntimeError("could not find enough independent samples")
        a = rng.choice(idx[0])
        c = rng.choice(idx[2])
        g = rng.choice(grades)
        perm, _ = arrays.cgrade(g)
        j = rng.below(perm.shape[0])
        if rng.below(2):
            b, d = int(perm[j, a]), int(perm[j, c])
        else:
            d, b = int(perm[j, a]), int(perm[j, c])
        if b not in idx[1] or d not in idx[3]:
            continue
        x = [ExtScalar(*_basis_value(dim, k, a, d, c, b)) for k in cols]
        y = [ExtScalar(*_basis_value(dim, k, a, b, c, d)) for k in rows]
        if not any(x) and not any(y):
            continue
        xs.append(x)
        ys.append(y)
        if ech.add({i: v for i, v in enumerate(x) if v}):
            chosen.append(len(xs) - 1)
        elif ech.rank == len(cols):
            extra += 1
    # rows of X (chosen) times M^T = Y
    mt = solve([xs[i] for i in chosen], [ys[i] for i in chosen])
    matrix = []
    for r in range(len(rows)):
        row = []
        for cidx in range(len(cols)):
            v = mt[cidx][r]
            if not v.is_rational():
                raise ArithmeticError("non-rational Fierz coefficient")
            row.append(v.a_re)
        matrix.append(tuple(row))
    for x, y in zip(xs, ys):
        for r in range(len(rows)):
            lhs = sum((ExtScalar(matrix[r][c]) * x[c] for c in range(len(cols))), ExtScalar())
            if lhs != y[r]:
                raise ArithmeticError("inconsistent Fierz samples; the sector is not closed")
    return FierzTable(dim, sector, tuple(rows), tuple(cols), tuple(matrix))


def table_product(t1: FierzTable, t2: FierzTable):
    n, m, p = len(t1.matrix), len(t2.matrix), len(t2.matrix[0])
    return [[sum((t1.matrix[i][k] * t2.matrix[k][j] for k in range(m)), Fraction(0))
             for j in range(p)] for i in range(n)]


def _random_chiral(rng: Rng, n: int, sign: str):
    rep = build_gamma(n)
    vals = [ExtScalar()] * rep.size
    for r in rep.chiral_index(sign):
        vals[r] = rng.gaussian()
    return vals


def verify_table(dim: int, sector: str, trials: int = 50, seed: int = 0,
                 table: FierzTable = None) -> List[Check]:
    table = table or derive_table(dim, sector)
    rows, cols, chis = table.grades, table.col_grades, SECTORS[dim][sector][2]
    n = dim // 2
    rng = Rng(seed)
    checks = []
    failures = []
    for t in range(trials):
        s = [_IntSpinor(_random_chiral(rng, n, c)) for c in chis]
        a = [_grade_value(dim, k, s[0], s[1], s[2], s[3]) for k in rows]
        at = [_grade_value(dim, k, s[0], s[3], s[2], s[1]) for k in cols]
        for r, k in enumerate(rows):
            re = sum((table.matrix[r][c] * at[c][0] for c in range(len(cols))), Fraction(0))
            im = sum((table.matrix[r][c] * at[c][1] for c in range(len(cols))), Fraction(0))
            if (re, im) != a[r]:
                failures.append({"trial": t, "row": k})
    checks.append(Check(f"fierz.D{dim}.{sector}.rows", not failures, trials,
                        witness=failures[0] if failures else None))
    partner = derive_table(dim, PARTNER[sector]) if PARTNER[sector] != sector else table
    prod = table_product(table, partner)
    ident = all(prod[i][j] == (1 if i == j else 0) for i in range(len(prod)) for j in range(len(prod)))
    checks.append(Check(f"fierz.D{dim}.{sector}.involution", ident))
    ref = REFERENCE_TABLES.get((dim, sector))
    match = ref is not None and [list(r) for r in table.matrix] == ref
    checks.append(Check(f"fierz.D{dim}.{sector}.reference", match))
    return checks


# derived identities ---------------------------------------------------------

def _act_sum(dim, k, x: _IntSpinor, y: _IntSpinor, z: _IntSpinor):
    """sum_I (e^I x)(y e^I z) over ascending I of size k; exact (re, im) object arrays."""
    arr = _arrays(dim)
    wr, wi = _pair_all(y, arr.cgrade(k), z)
    perm, phase = arr.grade(k)
    xr, xi = _rotate(x.re[perm], x.im[perm], phase)
    xr, xi = xr.astype(object), xi.astype(object)
    re = (xr * wr[:, None] - xi * wi[:, None]).sum(axis=0)
    im = (xr * wi[:, None] + xi * wr[:, None]).sum(axis=0)
    return re, im


def _scalar_pair(dim, x, y):
    re, im = _pair_all(x, _arrays(dim).cgrade(0), y)
    return int(re[0]), int(im[0])


def _smul(s, v):
    """Gaussian integer s times object-array spinor v (plain spinor given as _IntSpinor)."""
    sr, si = s
    vr, vi = v.re.astype(object), v.im.astype(object)
    return vr * sr - vi * si, vr * si + vi * sr


def _lin(*terms):
    """Integer linear combination of (re, im) arrays: terms are (coeff, (re, im))."""
    re = sum(c * t[0] for c, t in terms)
    im = sum(c * t[1] for c, t in terms)
    return re, im


def _is_zero(v) -> bool:
    return not any(v[0]) and not any(v[1])


def _derived_cases(dim: int, rng: Rng):
    n = dim // 2
    draw = lambda sign: _IntSpinor(_random_chiral(rng, n, sign))
    if dim == 8:
        xi, phi, psi, eta = draw("+"), draw("+"), draw("+"), draw("-")
        one = _lin((1, _act_sum(8, 2, xi, phi, psi)),
                   (-4, _smul(_scalar_pair(8, psi, xi), phi)),
                   (4, _smul(_scalar_pair(8, phi, xi), psi)))
        two = _lin((2, _smul(_scalar_pair(8, phi, psi), eta)),
                   (-1, _act_sum(8, 1, psi, phi, eta)),
                   (-1, _act_sum(8, 1, phi, psi, eta)))
        return {"fierz.D8.identity_I": one, "fierz.D8.identity_II": two}
    if dim == 16:
        p1, p2, p3 = draw("+"), draw("+"), draw("+")
        cyc = _lin((1, _act_sum(16, 2, p1, p2, p3)), (1, _act_sum(16, 2, p2, p3, p1)),
                   (1, _act_sum(16, 2, p3, p1, p2)))
        return {"fierz.D16.cyclic": cyc}
    if dim == 10:
        out = {}
        for tag, (sp, se) in (("", ("+", "-")), ("_flipped", ("-", "+"))):
            p1, p2, eta = draw(sp), draw(sp), draw(se)
            key = _lin((1, _smul(_scalar_pair(10, eta, p2), p1)),
                       (1, _act_sum(10, 2, p1, eta, p2)),
                       (-2, _act_sum(10, 1, eta, p1, p2)),
                       (4, _smul(_scalar_pair(10, p1, eta), p2)))
            out["fierz.D10.key" + tag] = key
        p1, p2, p3 = draw("+"), draw("+"), draw("+")
        out["fierz.D10.cyclic"] = _lin((1, _act_sum(10, 1, p1, p2, p3)),
                                       (1, _act_sum(10, 1, p2, p3, p1)),
                                       (1, _act_sum(10, 1, p3, p1, p2)))
        return out
    raise ValueError(f"no derived identities for dimension {dim}")


def verify_derived(dim: int, trials: int = 50, seed: int = 0) -> List[Check]:
    rng = Rng(seed)
    fails: Dict[str, int] = {}
    names = None
    for t in range(trials):
        cases = _derived_cases(dim, rng)
        names = names or sorted(cases)
        for name, v in cases.items():
            if not _is_zero(v) and name not in fails:
                fails[name] = t
    return [Check(name, name not in fails, trials,
                  witness={"trial": fails[name], "seed": seed} if name in fails else None)
            for name in names]
