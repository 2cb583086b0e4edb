"""The exceptional Lie algebras g2, f4, e6 and e8 in Clifford form.

Coordinate layouts (the canonical basis order):

* ``e8``: so(16) generators x^{pq}, p < q lexicographic (120), then the 128
  chiral coordinates of a Delta+ spinor of Cl(16) in increasing index order.
* ``e6``: so(10) (45), Delta+ of Cl(10) (16), Delta- of Cl(10) (16), rho (1).
* ``f4``: stored in the e6 layout; members satisfy x in so(9), rho = 0 and
  e^10 xi = i eta.
* ``g2``: so(8) (28) over indices 1..8, i.e. octonion index + 1.

Brackets are complex-linear and exact.  The spinor-spinor brackets are
[xi, eta] = -1/2 sum_{i<j} (xi e^i e^j eta) x^{ij} for e8 and the same plus
(i/4)(xi eta) rho for e6, where (a M b) = a^T C M b.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from .clifford import Spinor, build_gamma, mask_of
from .linalg import Echelon, kernel
from .report import Check
from .rng import Rng
from .scalar import ExtScalar, ONE, ZERO, I, HALF, as_scalar

__all__ = ["LieElement", "AlgebraMismatch", "ClosureError", "bracket", "basis",
           "build_structure_constants", "StructureConstants", "jacobi_check", "centralizer",
           "killing", "embed_e6", "su3_in_e8", "g2_in_e8", "span_equal", "so_pairs",
           "ALGEBRAS", "f4_member", "g2_member", "rho", "compact_e6"]

ALGEBRAS = ("g2", "f4", "e6", "e8")

# (so dimension, half dimension of the Clifford spinors or None, has Delta-, has rho)
_LAYOUT = {
    "g2": (8, None, False, False),
    "f4": (10, 5, True, True),
    "e6": (10, 5, True, True),
    "e8": (16, 8, False, False),
}


class AlgebraMismatch(ValueError):
    pass


class ClosureError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def so_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> Dict[Tuple[int, int], int]:
    return {pq: k for k, pq in enumerate(so_pairs(n))}


@lru_cache(maxsize=None)
def _offsets(algebra: str):
    n_so, half, minus, has_rho = _LAYOUT[algebra]
    so = n_so * (n_so - 1) // 2
    plus = (1 << (half - 1)) if half else 0
    mdim = plus if minus else 0
    return so, plus, mdim, (1 if has_rho else 0)


def ambient_dim(algebra: str) -> int:
    return sum(_offsets(algebra))


class LieElement:
    """Element of one of the four algebras as a flat tuple of ExtScalar coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: str, coords: Sequence):
        if algebra not in _LAYOUT:
            raise ValueError(f"unknown algebra {algebra!r}")
        if len(coords) != ambient_dim(algebra):
            raise ValueError(f"{algebra} elements have {ambient_dim(algebra)} coordinates")
        self.algebra = algebra
        self.coords = tuple(as_scalar(c) for c in coords)

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, algebra: str) -> "LieElement":
        return cls(algebra, [ZERO] * ambient_dim(algebra))

    @classmethod
    def unit(cls, algebra: str, k: int, c=ONE) -> "LieElement":
        v = [ZERO] * ambient_dim(algebra)
        v[k] = as_scalar(c)
        return cls(algebra, v)

    @classmethod
    def from_parts(cls, algebra: str, so: Optional[dict] = None, plus: Optional[Spinor] = None,
                   minus: Optional[Spinor] = None, u1=None) -> "LieElement":
        n_so, half, _, _ = _LAYOUT[algebra]
        so_dim, pdim, mdim, rdim = _offsets(algebra)
        v = [ZERO] * ambient_dim(algebra)
        idx = _pair_index(n_so)
        for (p, q), c in (so or {}).items():
            c = as_scalar(c)
            if p > q:
                p, q, c = q, p, -c
            if p == q or (p, q) not in idx:
                raise ValueError(f"invalid so index pair {(p, q)}")
            v[idx[(p, q)]] = v[idx[(p, q)]] + c
        if plus is not None:
            if not pdim:
                raise ValueError(f"{algebra} has no spinor part")
            v[so_dim:so_dim + pdim] = _chiral_coords(plus, half, "+")
        if minus is not None:
            if not mdim:
                raise ValueError(f"{algebra} has no Delta- part")
            v[so_dim + pdim:so_dim + pdim + mdim] = _chiral_coords(minus, half, "-")
        if u1 is not None:
            if not rdim:
                raise ValueError(f"{algebra} has no u(1) part")
            v[-1] = as_scalar(u1)
        return cls(algebra, v)

    @classmethod
    def from_so(cls, algebra: str, so: dict) -> "LieElement":
        return cls.from_parts(algebra, so=so)

    # views --------------------------------------------------------------
    @property
    def so_part(self) -> Dict[Tuple[int, int], ExtScalar]:
        pairs = so_pairs(_LAYOUT[self.algebra][0])
        return {pq: c for pq, c in zip(pairs, self.coords) if c}

    @property
    def spinor_plus(self) -> Optional[Spinor]:
        so_dim, pdim, _, _ = _offsets(self.algebra)
        if not pdim:
            return None
        return Spinor.from_chiral(_LAYOUT[self.algebra][1], "+", self.coords[so_dim:so_dim + pdim])

    @property
    def spinor_minus(self) -> Optional[Spinor]:
        so_dim, pdim, mdim, _ = _offsets(self.algebra)
        if not mdim:
            return None
        return Spinor.from_chiral(_LAYOUT[self.algebra][1], "-",
                                  self.coords[so_dim + pdim:so_dim + pdim + mdim])

    @property
    def u1(self) -> ExtScalar:
        return self.coords[-1] if _offsets(self.algebra)[3] else ZERO

    # arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LieElement) or other.algebra != self.algebra:
            raise AlgebraMismatch(f"cannot combine {self.algebra} with "
                                  f"{getattr(other, 'algebra', type(other).__name__)}")

    def __add__(self, other):
        self._check(other)
        return LieElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return LieElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return LieElement(self.algebra, [-a for a in self.coords])

    def scale(self, c) -> "LieElement":
        c = as_scalar(c)
        return LieElement(self.algebra, [a * c for a in self.coords])

    def conj(self) -> "LieElement":
        """Coordinate-wise complex conjugate."""
        return LieElement(self.algebra, [a.conjugate() for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_vec(self) -> Dict[int, ExtScalar]:
        return {k: c for k, c in enumerate(self.coords) if c}

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __repr__(self):
        nz = sum(1 for c in self.coords if c)
        return f"LieElement({self.algebra}, nonzero={nz})"

    def to_json(self):
        return {"algebra": self.algebra,
                "coords": [[k, c.to_json()] for k, c in enumerate(self.coords) if c]}


def _chiral_coords(psi: Spinor, half: int, sign: str) -> list:
    if psi.dim_half != half:
        raise ValueError("spinor has the wrong dimension")
    rep = build_gamma(half)
    other = rep.chiral_index("-" if sign == "+" else "+")
    if any(psi.coeffs[r] for r in other):
        raise ValueError(f"spinor is not in Delta{sign}")
    return [psi.coeffs[r] for r in rep.chiral_index(sign)]


def rho() -> LieElement:
    return LieElement.from_parts("e6", u1=ONE)


# sparse internals -----------------------------------------------------------

class _Sparse:
    """Nonzero pieces of an element: so dict, spinor dicts over full indices, rho."""

    __slots__ = ("so", "plus", "minus", "r")

    def __init__(self, x: LieElement):
        alg = x.algebra
        n_so, half, _, _ = _LAYOUT[alg]
        so_dim, pdim, mdim, rdim = _offsets(alg)
        pairs = so_pairs(n_so)
        c = x.coords
        self.so = {pairs[k]: c[k] for k in range(so_dim) if c[k]}
        self.plus, self.minus = {}, {}
        if pdim:
            rep = build_gamma(half)
            for j, r in enumerate(rep.plus_index):
                v = c[so_dim + j]
                if v:
                    self.plus[r] = v
            if mdim:
                for j, r in enumerate(rep.minus_index):
                    v = c[so_dim + pdim + j]
                    if v:
                        self.minus[r] = v
        self.r = c[-1] if rdim else ZERO


def _dict_add(d: dict, k, v):
    s = d.get(k, ZERO) + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


def _so_bracket(a: dict, b: dict) -> dict:
    out: dict = {}
    if not a or not b:
        return out
    # index b by each endpoint so only touching pairs are visited
    by_index: Dict[int, list] = {}
    for (r, s), c in b.items():
        by_index.setdefault(r, []).append((r, s, c))
        by_index.setdefault(s, []).append((r, s, c))
    for (p, q), ca in a.items():
        seen = set()
        for lst in (by_index.get(p, ()), by_index.get(q, ())):
            for r, s, cb in lst:
                if (r, s) in seen:
                    continue
                seen.add((r, s))
                c = ca * cb
                if q == r:
                    _so_term(out, p, s, c)
                if p == r:
                    _so_term(out, q, s, -c)
                if q == s:
                    _so_term(out, p, r, -c)
                if p == s:
                    _so_term(out, q, r, c)
    return out


def _so_term(out: dict, p: int, q: int, c):
    if p == q:
        return
    if p > q:
        p, q, c = q, p, -c
    _dict_add(out, (p, q), c)


@lru_cache(maxsize=None)
def _bivector_tables(half: int):
    """For each pair p<q: the SignedPerm of e^p e^q, its inverse permutation, and C e^p e^q."""
    rep = build_gamma(half)
    out = {}
    for p, q in so_pairs(2 * half):
        m = rep.blade(mask_of((p, q)))
        inv = [0] * rep.size
        for r, k in enumerate(m.perm):
            inv[k] = r
        out[(p, q)] = (m.perm, m.phase, inv, rep.cblade(mask_of((p, q))))
    return out


def _so_on_spinor(a: dict, psi: dict, half: int) -> dict:
    out: dict = {}
    if not a or not psi:
        return out
    tab = _bivector_tables(half)
    for pq, c in a.items():
        perm, phase, inv, _ = tab[pq]
        ch = c * HALF
        for k, v in psi.items():
            r = inv[k]
            _dict_add(out, r, (v * ch).mul_ipow(phase[r]))
    return out


def _pair(xi: dict, m, eta: dict) -> ExtScalar:
    """(xi M eta) for a SignedPerm M over sparse spinors."""
    acc = ZERO
    perm, phase = m.perm, m.phase
    for r, a in xi.items():
        b = eta.get(perm[r])
        if b:
            acc = acc + (a * b).mul_ipow(phase[r])
    if m.coeff != ONE:
        acc = acc * m.coeff
    return acc


def _spinor_spinor(xi: dict, eta: dict, half: int) -> dict:
    """-1/2 sum_{i<j} (xi C e^i e^j eta) x^{ij}."""
    out: dict = {}
    if not xi or not eta:
        return out
    mhalf = -HALF
    for pq, (_, _, _, cm) in _bivector_tables(half).items():
        v = _pair(xi, cm, eta)
        if v:
            out[pq] = v * mhalf
    return out


def _scalar_pair(xi: dict, eta: dict, half: int) -> ExtScalar:
    return _pair(xi, build_gamma(half).charge_conj, eta)


def _add_dicts(*terms):
    out: dict = {}
    for sign, d in terms:
        for k, v in d.items():
            _dict_add(out, k, v if sign > 0 else -v)
    return out


def _scale_dict(d: dict, c) -> dict:
    return {k: v * c for k, v in d.items()} if c else {}


def _assemble(algebra: str, so: dict, plus: dict, minus: dict, r) -> LieElement:
    n_so, half, _, _ = _LAYOUT[algebra]
    so_dim, pdim, mdim, rdim = _offsets(algebra)
    v = [ZERO] * ambient_dim(algebra)
    idx = _pair_index(n_so)
    for pq, c in so.items():
        v[idx[pq]] = c
    if pdim:
        rep = build_gamma(half)
        pos = {r_: j for j, r_ in enumerate(rep.plus_index)}
        for k, c in plus.items():
            v[so_dim + pos[k]] = c
        if mdim:
            posm = {r_: j for j, r_ in enumerate(rep.minus_index)}
            for k, c in minus.items():
                v[so_dim + pdim + posm[k]] = c
    if rdim:
        v[-1] = r
    return LieElement(algebra, v)


def f4_member(x: LieElement) -> bool:
    """x lies in the e6 layout with so part in so(9), rho = 0 and e^10 xi = i eta."""
    if x.algebra not in ("e6", "f4"):
        return False
    s = _Sparse(x)
    if s.r or any(q == 10 for (_, q) in s.so):
        return False
    rep = build_gamma(5)
    g10 = rep.gen(10)
    xi = [s.plus.get(r, ZERO) for r in range(rep.size)]
    eta = [s.minus.get(r, ZERO) for r in range(rep.size)]
    lhs = g10.apply(xi)
    return all(a == b * I for a, b in zip(lhs, eta))


def g2_member(x: LieElement) -> bool:
    """x fixes e^0 (index 1) and annihilates the triality spinor s."""
    from .octonion import triality
    if x.algebra != "g2":
        return False
    so = x.so_part
    if any(p == 1 for (p, _) in so):
        return False
    s = triality().s
    sd = {r: c for r, c in enumerate(s.coeffs) if c}
    return not _so_on_spinor(so, sd, 4)


def bracket(x: LieElement, y: LieElement, check_closure: bool = True) -> LieElement:
    if not isinstance(x, LieElement) or not isinstance(y, LieElement):
        raise TypeError("bracket needs two LieElements")
    if x.algebra != y.algebra:
        raise AlgebraMismatch(f"bracket of {x.algebra} with {y.algebra}")
    alg = x.algebra
    a, b = _Sparse(x), _Sparse(y)
    half = _LAYOUT[alg][1]
    so = _so_bracket(a.so, b.so)
    plus: dict = {}
    minus: dict = {}
    r = ZERO
    if alg == "e8":
        plus = _add_dicts((1, _so_on_spinor(a.so, b.plus, half)), (-1, _so_on_spinor(b.so, a.plus, half)))
        so = _add_dicts((1, so), (1, _spinor_spinor(a.plus, b.plus, half)))
    elif alg in ("e6", "f4"):
        three_i = ExtScalar(0, 3)
        plus = _add_dicts((1, _so_on_spinor(a.so, b.plus, half)), (-1, _so_on_spinor(b.so, a.plus, half)),
                          (1, _scale_dict(b.plus, a.r * three_i)), (-1, _scale_dict(a.plus, b.r * three_i)))
        minus = _add_dicts((1, _so_on_spinor(a.so, b.minus, half)), (-1, _so_on_spinor(b.so, a.minus, half)),
                           (-1, _scale_dict(b.minus, a.r * three_i)), (1, _scale_dict(a.minus, b.r * three_i)))
        so = _add_dicts((1, so), (1, _spinor_spinor(a.plus, b.minus, half)),
                        (-1, _spinor_spinor(b.plus, a.minus, half)))
        quarter_i = ExtScalar(0, Fraction(1, 4))
        r = (_scalar_pair(a.plus, b.minus, half) - _scalar_pair(b.plus, a.minus, half)) * quarter_i
    out = _assemble(alg, so, plus, minus, r)
    if check_closure:
        if alg == "f4" and not f4_member(out):
            raise ClosureError("f4 bracket left the constrained subspace")
        if alg == "g2" and not g2_member(out):
            raise ClosureError("g2 bracket left the stabiliser of s")
    return out


# bases ----------------------------------------------------------------------

def _f4_basis() -> List[LieElement]:
    out = [LieElement.from_so("f4", {pq: ONE}) for pq in so_pairs(9)]
    rep = build_gamma(5)
    g10 = rep.gen(10)
    for r in rep.plus_index:
        xi = [ZERO] * rep.size
        xi[r] = ONE
        eta = [c * -I for c in g10.apply(xi)]
        out.append(LieElement.from_parts("f4", plus=Spinor(5, tuple(xi), "+"),
                                         minus=Spinor(5, tuple(eta), "-")))
    return out


@lru_cache(maxsize=None)
def basis(algebra: str) -> Tuple[LieElement, ...]:
    """Canonical basis: coordinate units for e6/e8, constrained generators for f4, g2."""
    if algebra in ("e6", "e8"):
        return tuple(LieElement.unit(algebra, k) for k in range(ambient_dim(algebra)))
    if algebra == "f4":
        return tuple(_f4_basis())
    if algebra == "g2":
        from .octonion import g2_basis
        return tuple(g2_basis())
    raise ValueError(f"unknown algebra {algebra!r}")


class _Coords:
    """Coordinates of ambient vectors over a (linearly independent) basis."""

    def __init__(self, elems: Sequence[LieElement]):
        self.ech = Echelon(track=True)
        for e in elems:
            if not self.ech.add(e.to_vec()):
                raise ValueError("basis elements are linearly dependent")
        self.n = len(elems)

    def __call__(self, x: LieElement) -> Optional[Dict[int, ExtScalar]]:
        return self.ech.coords(x.to_vec())


@dataclass
class StructureConstants:
    algebra: str
    dim: int
    table: Dict[Tuple[int, int], Dict[int, ExtScalar]] = field(default_factory=dict)

    def get(self, i: int, j: int) -> Dict[int, ExtScalar]:
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return {k: -v for k, v in self.table.get((j, i), {}).items()}

    def bracket_coords(self, x: Dict[int, ExtScalar], y: Dict[int, ExtScalar]) -> Dict[int, ExtScalar]:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                c = a * b
                for k, v in self.get(i, j).items():
                    _dict_add(out, k, v * c)
        return out

    def to_json(self):
        rows = []
        for (i, j) in sorted(self.table):
            coeffs = self.table[(i, j)]
            rows.append({"i": i, "j": j, "coeffs": [[k, coeffs[k].to_json()] for k in sorted(coeffs)]})
        return {"algebra": self.algebra, "dim": self.dim, "brackets": rows}

    def ad_matrices(self):
        """Per basis element k, ad(b_k) as an integer pair (re, im) of CSR matrices, and the common denominator."""
        den = 1
        for coeffs in self.table.values():
            for v in coeffs.values():
                if not v.is_gaussian():
                    raise ArithmeticError("structure constants outside Q(i)")
                den = lcm(den, v.a_re.denominator, v.a_im.denominator)
        n = self.dim
        entries = [([], [], [], []) for _ in range(n)]
        for (i, j), coeffs in self.table.items():
            for m, v in coeffs.items():
                re, im = int(v.a_re * den), int(v.a_im * den)
                # ad(b_i)[m, j] = c, ad(b_j)[m, i] = -c
                for k, col, sg in ((i, j, 1), (j, i, -1)):
                    rows, cols, rv, iv = entries[k]
                    rows.append(m)
                    cols.append(col)
                    rv.append(sg * re)
                    iv.append(sg * im)
        mats = []
        for rows, cols, rv, iv in entries:
            shape = (n, n)
            mats.append((sparse.csr_matrix((np.array(rv, dtype=np.int64), (rows, cols)), shape=shape),
                         sparse.csr_matrix((np.array(iv, dtype=np.int64), (rows, cols)), shape=shape)))
        return mats, den


@lru_cache(maxsize=None)
def build_structure_constants(algebra: str) -> StructureConstants:
    elems = basis(algebra)
    n = len(elems)
    sc = StructureConstants(algebra, n)
    coords = None if algebra in ("e6", "e8") else _Coords(elems)
    for i in range(n):
        for j in range(i + 1, n):
            z = bracket(elems[i], elems[j], check_closure=False)
            if z.is_zero():
                continue
            if coords is None:
                vec = z.to_vec()
            else:
                vec = coords(z)
                if vec is None:
                    raise ClosureError(f"[b{i}, b{j}] is outside the span of the {algebra} basis")
            sc.table[(i, j)] = vec
    return sc


# Jacobi -------------------------------------------------------------------------

def _cmul(a, b):
    """(ar + i ai)(br + i bi) for pairs of sparse integer matrices."""
    ar, ai = a
    br, bi = b
    return ar @ br - ai @ bi, ar @ bi + ai @ br


def _nonzero(m) -> bool:
    m = m.tocsr()
    m.eliminate_zeros()
    return m.nnz > 0


def _jacobi_exhaustive(sc: StructureConstants) -> Tuple[bool, Optional[dict], int]:
    """Check ad([b_i, b_j]) = [ad b_i, ad b_j] for every i, j.

    With A_k = den * ad(b_k) this reads A_i A_j - A_j A_i = sum_m A_i[m, j] A_m,
    which is the Jacobi identity on every basis triple.  Rows of `big` hold the
    flattened A_m; kron(A_i, 1) - kron(1, A_i^T) maps vec(X) to vec([A_i, X]).
    """
    mats, den = sc.ad_matrices()
    n = sc.dim
    big_re = sparse.vstack([m[0].reshape(1, n * n) for m in mats]).tocsr()
    big_im = sparse.vstack([m[1].reshape(1, n * n) for m in mats]).tocsr()
    ident = sparse.identity(n, dtype=np.int64, format="csr")
    for i in range(n):
        ar, ai = mats[i]
        if ar.nnz == 0 and ai.nnz == 0:
            continue
        kr = (sparse.kron(ar, ident) - sparse.kron(ident, ar.T)).T.tocsr()
        ki = (sparse.kron(ai, ident) - sparse.kron(ident, ai.T)).T.tocsr()
        lhs = _cmul((big_re, big_im), (kr, ki))
        rhs = _cmul((ar.T.tocsr(), ai.T.tocsr()), (big_re, big_im))
        for part in (0, 1):
            diff = (lhs[part] - rhs[part]).tocoo()
            nz = diff.data != 0
            if nz.any():
                j = int(diff.row[nz][0])
                flat = int(diff.col[nz][0])
                return False, {"i": i, "j": j, "entry": [flat // n, flat % n]}, i
    return True, None, n


def _rand_coords(rng: Rng, n: int):
    re = np.array([int(rng.rational() * 6) for _ in range(n)], dtype=np.int64)
    im = np.array([int(rng.rational() * 6) for _ in range(n)], dtype=np.int64)
    return re, im


def _jacobi_sampled(sc: StructureConstants, budget: int, seed: int, batch: int = 64):
    """Random dense Gaussian-integer triples through G kron(x, y), G the flattened table."""
    mats, den = sc.ad_matrices()
    n = sc.dim
    # G[m, i*n + j] = ad(b_i)[m, j]
    g_re = sparse.hstack([m[0] for m in mats]).tocsr()
    g_im = sparse.hstack([m[1] for m in mats]).tocsr()
    rowsum = np.asarray(abs(g_re).sum(axis=1)).ravel() + np.asarray(abs(g_im).sum(axis=1)).ravel()
    gmax = int(rowsum.max(initial=0))
    rng = Rng(seed)
    done = 0

    def br(x, y):
        xr, xi = x
        yr, yi = y
        kr = (xr[:, :, None] * yr[:, None, :] - xi[:, :, None] * yi[:, None, :]).reshape(len(xr), -1)
        ki = (xr[:, :, None] * yi[:, None, :] + xi[:, :, None] * yr[:, None, :]).reshape(len(xr), -1)
        return ((g_re @ kr.T - g_im @ ki.T).T, (g_re @ ki.T + g_im @ kr.T).T)

    while done < budget:
        k = min(batch, budget - done)
        trip = [[_rand_coords(rng, n) for _ in range(k)] for _ in range(3)]
        xs = [(np.stack([t[0] for t in col]), np.stack([t[1] for t in col])) for col in trip]
        bound = max(int(np.abs(a).max(initial=0)) + int(np.abs(b).max(initial=0)) for a, b in xs)
        if (gmax * bound * bound) ** 2 * gmax * bound * 3 >= 1 << 62:
            raise OverflowError("sampled Jacobi entries would overflow int64")
        x, y, z = xs
        total = [np.zeros((k, n), dtype=np.int64), np.zeros((k, n), dtype=np.int64)]
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            t = br(a, br(b, c))
            total[0] += t[0]
            total[1] += t[1]
        bad = np.nonzero(total[0].any(axis=1) | total[1].any(axis=1))[0]
        if len(bad):
            return False, {"seed": seed, "sample": done + int(bad[0])}, done + int(bad[0]) + 1
        done += k
    return True, None, done


def jacobi_check(algebra: str, mode: str = "exhaustive", budget: int = 1000, seed: int = 0) -> Check:
    sc = build_structure_constants(algebra)
    if mode == "exhaustive":
        ok, witness, _ = _jacobi_exhaustive(sc)
        n = sc.dim
        trials = n * (n - 1) * (n - 2) // 6
    elif mode == "sampled":
        ok, witness, trials = _jacobi_sampled(sc, budget, seed)
    else:
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    return Check(f"liealg.{algebra}.jacobi.{mode}", ok, trials, witness=witness)


# centralizers --------------------------------------------------------------------

def _ad_rows(s: LieElement, sc: StructureConstants, rows: Dict[Tuple[int, int], dict], tag: int):
    """Rows (one per output coordinate) of X -> [s, X] in basis coordinates."""
    for j, a in enumerate(s.coords):
        if not a:
            continue
        for k in range(sc.dim):
            for m, v in sc.get(j, k).items():
                row = rows.setdefault((tag, m), {})
                _dict_add(row, k, a * v)


def centralizer(sub: Sequence[LieElement], ambient: str) -> List[LieElement]:
    """Basis of {X in ambient : [S, X] = 0 for all S in sub} (ambient is e6 or e8)."""
    if ambient not in ("e6", "e8"):
        raise ValueError("centralizers are computed inside e6 or e8")
    sc = build_structure_constants(ambient)
    ech = Echelon()
    for t, s in enumerate(sub):
        if s.algebra != ambient:
            raise AlgebraMismatch("sub-algebra element outside the ambient algebra")
        rows: Dict[Tuple[int, int], dict] = {}
        _ad_rows(s, sc, rows, t)
        for key in sorted(rows):
            if rows[key]:
                ech.add(rows[key])
            if ech.rank == sc.dim:
                return []
    basis_vecs = kernel(ech.rows.values(), sc.dim)
    out = []
    for v in basis_vecs:
        coords = [ZERO] * sc.dim
        for k, c in v.items():
            coords[k] = c
        out.append(LieElement(ambient, coords))
    return out


def span_equal(a: Sequence[LieElement], b: Sequence[LieElement]) -> bool:
    ea, eb = Echelon(), Echelon()
    for x in a:
        ea.add(x.to_vec())
    for y in b:
        eb.add(y.to_vec())
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(y.to_vec()) for y in b)


# embeddings ------------------------------------------------------------------------

def _embed_beta() -> ExtScalar:
    """The factor making [i(xi), i(eta)] = i([xi, eta]): 1/<+++|C_6-part|--->."""
    rep16 = build_gamma(8)
    # pair a test spinor xi = e_0 (10D index 0) with eta at 10D index r where (xi eta) != 0
    rep10 = build_gamma(5)
    c10 = rep10.charge_conj
    r = c10.perm[0]
    c10v = c10.value(0)
    c16 = rep16.charge_conj
    row = 8 * 0
    if c16.perm[row] != 8 * r + 7:
        raise ArithmeticError("unexpected charge conjugation block structure")
    return c10v / c16.value(row)


def embed_e6(x: LieElement) -> LieElement:
    """e6 (or f4) element as an element of e8 acting on R^10 + R^6."""
    if x.algebra not in ("e6", "f4"):
        raise AlgebraMismatch("only e6/f4 elements embed into e8")
    s = _Sparse(x)
    so = dict(s.so)
    if s.r:
        for a in (11, 13, 15):
            _dict_add(so, (a, a + 1), s.r * 2)
    beta = _embed_beta()
    plus = {8 * k: v for k, v in s.plus.items()}
    for k, v in s.minus.items():
        plus[8 * k + 7] = v * beta
    return _assemble("e8", so, plus, {}, ZERO)


def su3_in_e8() -> List[LieElement]:
    """su(3) acting on R^6 = C^3 at coordinates 11..16."""
    out = []
    pts = (11, 13, 15)
    for a in pts:
        for b in pts:
            if a == b:
                continue
            d: dict = {}
            _so_term(d, a, b, ONE)
            _so_term(d, a, b + 1, -I)
            _so_term(d, a + 1, b, I)
            _so_term(d, a + 1, b + 1, ONE)
            out.append(LieElement.from_so("e8", d))
    out.append(LieElement.from_so("e8", {(11, 12): ONE, (13, 14): -ONE}))
    out.append(LieElement.from_so("e8", {(13, 14): ONE, (15, 16): -ONE}))
    return out


def g2_in_e8() -> List[LieElement]:
    """g2 on the second R^8 factor: so(8) index c maps to 16D index c + 8."""
    return [LieElement.from_so("e8", {(p + 8, q + 8): c for (p, q), c in g.so_part.items()})
            for g in basis("g2")]


# Killing form -------------------------------------------------------------------

def killing(x: LieElement, y: LieElement) -> ExtScalar:
    """-(1/8) Tr[conj(x) y] + phi^dagger psi + 12 conj(r) s on e6.

    The trace is taken on the 32-dimensional Clifford module, where x^{pq}
    acts as (1/2) e^p e^q, so each so(10) coordinate enters with weight 1.
    """
    if x.algebra != y.algebra:
        raise AlgebraMismatch("Killing form of different algebras")
    if x.algebra not in ("e6", "f4"):
        raise NotImplementedError("the Hermitian form is only implemented for e6")
    so_dim = _offsets(x.algebra)[0]
    acc = ZERO
    for k, (a, b) in enumerate(zip(x.coords, y.coords)):
        if not (a and b):
            continue
        w = a.conjugate() * b
        if k < so_dim:
            acc = acc + w
        elif k == len(x.coords) - 1:
            acc = acc + w * 12
        else:
            acc = acc + w
    return acc


def compact_e6(so: dict, xi: Spinor, r) -> LieElement:
    """Element of the compact real form: real so(10) part, eta = C xi^*, real rho coefficient."""
    from .clifford import charge_conjugate
    if any(not as_scalar(c).is_real() for c in so.values()) or not as_scalar(r).is_real():
        raise ValueError("compact form needs real so and rho coefficients")
    return LieElement.from_parts("e6", so=so, plus=xi, minus=charge_conjugate(xi), u1=r)
