"""Exact sparse linear algebra over ExtScalar.

Vectors are dicts {column: nonzero ExtScalar}.  Elimination keeps rows fully
reduced so a single pass over the pivots reduces any vector.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Sequence

from .scalar import ExtScalar, ONE, ZERO

Vec = Dict[int, ExtScalar]


def axpy(y: Vec, a: ExtScalar, x: Vec) -> Vec:
    """Return y + a x as a new dict."""
    out = dict(y)
    for k, v in x.items():
        s = out.get(k, ZERO) + a * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(x: Vec, a: ExtScalar) -> Vec:
    if not a:
        return {}
    return {k: v * a for k, v in x.items()}


def dense_to_vec(values: Sequence[ExtScalar]) -> Vec:
    return {i: v for i, v in enumerate(values) if v}


def vec_to_dense(x: Vec, n: int) -> list:
    out = [ZERO] * n
    for k, v in x.items():
        out[k] = v
    return out


class Echelon:
    """Incrementally built reduced row echelon form.

    Each stored row remembers which combination of inserted vectors produced it,
    so membership tests also return coordinates.
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[int, Vec] = {}
        self.combos: Dict[int, Vec] = {}
        self.track = track
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, x: Vec):
        w = dict(x)
        comb: Vec = {}
        for p, row in self.rows.items():
            f = w.get(p)
            if f:
                w = axpy(w, -f, row)
                if self.track:
                    comb = axpy(comb, f, self.combos[p])
        return w, comb

    def add(self, x: Vec) -> bool:
        """Insert x; return True if it was independent."""
        idx = self.count
        self.count += 1
        w, comb = self.reduce(x)
        if not w:
            return False
        p = min(w)
        inv = w[p].inverse()
        w = scale(w, inv)
        if self.track:
            comb = scale(axpy({idx: ONE}, -ONE, comb), inv)
        for q, row in self.rows.items():
            f = row.get(p)
            if f:
                self.rows[q] = axpy(row, -f, w)
                if self.track:
                    self.combos[q] = axpy(self.combos[q], -f, comb)
        self.rows[p] = w
        if self.track:
            self.combos[p] = comb
        return True

    def coords(self, x: Vec):
        """Coefficients of x over the inserted vectors, or None if x is outside the span."""
        w, comb = self.reduce(x)
        if w:
            return None
        return comb

    def contains(self, x: Vec) -> bool:
        w, _ = self.reduce(x)
        return not w


def rank(vectors: Iterable[Vec]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(rows: Iterable[Vec], ncols: int) -> List[Vec]:
    """Basis of {c : sum_j row[j] c_j = 0 for every row}."""
    e = Echelon()
    for r in rows:
        if r:
            e.add(r)
    pivots = set(e.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: ONE}
        for p, row in e.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def solve(a: List[List[ExtScalar]], b: List[List[ExtScalar]]) -> List[List[ExtScalar]]:
    """Solve A X = B for square invertible A (dense lists)."""
    n = len(a)
    m = [list(a[i]) + list(b[i]) for i in range(n)]
    width = len(m[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:width] for row in m]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b)) if a[i][k] and b[k][j]), ZERO)
             for j in range(len(b[0]))] for i in range(len(a))]


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def dense_rank(m: List[List[ExtScalar]]) -> int:
    return rank(dense_to_vec(r) for r in m)
