"""Clifford algebra Cl(2n) as abstract blades and as signed-permutation matrices.

Generators are numbered 1..2n.  A blade mask has bit (i-1) set when e^i is
present.  Matrices act on C^(2^n); the basis index is read as n bits with the
most significant bit belonging to the first tensor factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .scalar import ExtScalar, ONE, ZERO, HALF, as_scalar

__all__ = [
    "SignedPerm", "Blade", "CliffordElement", "GammaRep", "Spinor",
    "build_gamma", "blade_mul", "blade_matrix", "spin_act", "pair_bilinear",
    "pair_hermitian", "charge_conjugate", "vector_act", "bilinear_vector",
    "clifford_apply", "spin_conjugate", "grade_masks", "mask_of", "reorder_sign",
    "SelectionRuleError",
]


class SelectionRuleError(ValueError):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def reorder_sign(a: int, b: int) -> int:
    """Parity of transpositions needed to sort blade a followed by blade b."""
    s = 0
    a >>= 1
    while a:
        s += _popcount(a & b)
        a >>= 1
    return s & 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grade_masks(dim: int, k: int) -> list:
    """Grade-k masks in lexicographic order of ascending index tuples."""
    return [mask_of(c) for c in combinations(range(1, dim + 1), k)]


class SignedPerm:
    """Matrix with one nonzero per row: row r holds coeff * i**phase[r] at column perm[r]."""

    __slots__ = ("perm", "phase", "coeff")

    def __init__(self, perm: Sequence[int], phase: Sequence[int], coeff: ExtScalar = ONE):
        self.perm = tuple(perm)
        self.phase = tuple(p & 3 for p in phase)
        self.coeff = coeff

    @classmethod
    def identity(cls, size: int) -> "SignedPerm":
        return cls(range(size), [0] * size)

    @property
    def size(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "SignedPerm") -> "SignedPerm":
        op, oph = other.perm, other.phase
        perm = tuple(op[p] for p in self.perm)
        phase = tuple((a + oph[p]) & 3 for a, p in zip(self.phase, self.perm))
        return SignedPerm(perm, phase, self.coeff * other.coeff)

    def scaled(self, c) -> "SignedPerm":
        return SignedPerm(self.perm, self.phase, self.coeff * as_scalar(c))

    def __neg__(self):
        return SignedPerm(self.perm, [p + 2 for p in self.phase], self.coeff)

    def times_ipow(self, k: int) -> "SignedPerm":
        return SignedPerm(self.perm, [p + k for p in self.phase], self.coeff)

    def apply(self, vec: Sequence[ExtScalar]) -> list:
        c = self.coeff
        out = [vec[p].mul_ipow(ph) for p, ph in zip(self.perm, self.phase)]
        if c != ONE:
            out = [x * c for x in out]
        return out

    def entry(self, r: int, col: int) -> ExtScalar:
        if self.perm[r] != col:
            return ZERO
        return self.coeff.mul_ipow(self.phase[r])

    def value(self, r: int) -> ExtScalar:
        return self.coeff.mul_ipow(self.phase[r])

    def transpose(self) -> "SignedPerm":
        n = self.size
        perm = [0] * n
        phase = [0] * n
        for r, (p, ph) in enumerate(zip(self.perm, self.phase)):
            perm[p] = r
            phase[p] = ph
        return SignedPerm(perm, phase, self.coeff)

    def conj(self) -> "SignedPerm":
        return SignedPerm(self.perm, [-p for p in self.phase], self.coeff.conjugate())

    def adjoint(self) -> "SignedPerm":
        return self.transpose().conj()

    def inverse(self) -> "SignedPerm":
        t = self.transpose()
        return SignedPerm(t.perm, [-p for p in t.phase], self.coeff.inverse())

    def is_diagonal(self) -> bool:
        return all(p == r for r, p in enumerate(self.perm))

    def __eq__(self, other):
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if self.perm != other.perm:
            return False
        if self.coeff == other.coeff:
            return self.phase == other.phase
        return all(self.value(r) == other.value(r) for r in range(self.size))

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"SignedPerm(size={self.size}, coeff={self.coeff})"


@dataclass(frozen=True)
class Blade:
    mask: int
    coeff: ExtScalar
    dim: int

    @classmethod
    def unit(cls, dim: int) -> "Blade":
        return cls(0, ONE, dim)

    @classmethod
    def of(cls, dim: int, *indices: int, coeff=ONE) -> "Blade":
        """Blade for the product e^{i1} e^{i2} ... in the given (any) order."""
        b = cls(0, as_scalar(coeff), dim)
        for i in indices:
            b = blade_mul(b, cls(1 << (i - 1), ONE, dim))
        return b

    @property
    def grade(self) -> int:
        return _popcount(self.mask)

    @property
    def indices(self) -> tuple:
        return indices_of(self.mask)

    def reverse(self) -> "Blade":
        k = self.grade
        return Blade(self.mask, -self.coeff if (k * (k - 1) // 2) % 2 else self.coeff, self.dim)


def blade_mul(x: Blade, y: Blade) -> Blade:
    if x.dim != y.dim:
        raise ValueError("blades live in different Clifford algebras")
    c = x.coeff * y.coeff
    if reorder_sign(x.mask, y.mask):
        c = -c
    return Blade(x.mask ^ y.mask, c, x.dim)


class CliffordElement:
    __slots__ = ("terms", "dim")

    def __init__(self, dim: int, terms=None):
        self.dim = dim
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def from_blade(cls, b: Blade) -> "CliffordElement":
        return cls(b.dim, {b.mask: b.coeff})

    @classmethod
    def scalar(cls, dim: int, c) -> "CliffordElement":
        return cls(dim, {0: as_scalar(c)})

    @classmethod
    def vector(cls, coeffs: Sequence) -> "CliffordElement":
        return cls(len(coeffs), {1 << i: as_scalar(c) for i, c in enumerate(coeffs)})

    def blades(self):
        return [Blade(m, c, self.dim) for m, c in sorted(self.terms.items())]

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, ZERO) + c
        return CliffordElement(self.dim, t)

    def __neg__(self):
        return CliffordElement(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CliffordElement":
        c = as_scalar(c)
        return CliffordElement(self.dim, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return self.scale(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                if reorder_sign(m1, m2):
                    c = -c
                m = m1 ^ m2
                t[m] = t.get(m, ZERO) + c
        return CliffordElement(self.dim, t)

    def __rmul__(self, other):
        return self.scale(other)

    def reverse(self) -> "CliffordElement":
        return CliffordElement(self.dim, {b.mask: b.reverse().coeff for b in self.blades()})

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.terms)

    def scalar_part(self) -> ExtScalar:
        return self.terms.get(0, ZERO)

    def __eq__(self, other):
        return isinstance(other, CliffordElement) and self.dim == other.dim and self.terms == other.terms

    def __repr__(self):
        return f"CliffordElement(dim={self.dim}, terms={len(self.terms)})"


def spin_conjugate(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """x y x^{-1} for an even versor x (x x^t must be a nonzero scalar).

    The twisted adjoint agrees with this on even elements; odd x is not handled.
    """
    if not x.is_even():
        raise NotImplementedError("twisted adjoint is only implemented for even elements")
    n = x * x.reverse()
    if set(n.terms) - {0} or not n.scalar_part():
        raise ValueError("element is not an invertible versor")
    inv = x.reverse().scale(n.scalar_part().inverse())
    return x * y * inv


class GammaRep:
    """Tensor-product gamma matrices for Cl(2n) with chirality and charge conjugation."""

    def __init__(self, n: int):
        if not 1 <= n <= 8:
            raise ValueError(f"half-dimension {n} out of range 1..8")
        self.n = n
        self.dim = 2 * n
        self.size = 1 << n
        self.matrices = [self._generator(i) for i in range(1, self.dim + 1)]
        vol = SignedPerm.identity(self.size)
        for g in self.matrices:
            vol = vol @ g
        self.chirality = vol.times_ipow(3 * n)
        if n % 2 == 0:
            c = SignedPerm.identity(self.size)
            for i in range(2, self.dim + 1, 2):
                c = c @ self.matrices[i - 1]
        else:
            c = SignedPerm.identity(self.size)
            for i in range(1, self.dim, 2):
                c = c @ self.matrices[i - 1]
            if ((n - 1) // 2) % 2:
                c = -c
        self.charge_conj = c
        self.charge_conj_inv = c.inverse()
        self.plus_index = [r for r in range(self.size) if _popcount(r) % 2 == 0]
        self.minus_index = [r for r in range(self.size) if _popcount(r) % 2 == 1]
        self._blades = {}
        self._cblades = {}

    def _generator(self, i: int) -> SignedPerm:
        n = self.n
        m = (i - 1) // 2
        bit = n - 1 - m
        perm, phase = [], []
        for r in range(self.size):
            ph = 2 * _popcount(r >> (bit + 1))
            if i % 2 == 0:
                ph += 1 if (r >> bit) & 1 else 3
            perm.append(r ^ (1 << bit))
            phase.append(ph)
        return SignedPerm(perm, phase)

    def gen(self, i: int) -> SignedPerm:
        return self.matrices[i - 1]

    def blade(self, mask: int) -> SignedPerm:
        m = self._blades.get(mask)
        if m is None:
            m = SignedPerm.identity(self.size)
            for i in indices_of(mask):
                m = m @ self.matrices[i - 1]
            self._blades[mask] = m
        return m

    def cblade(self, mask: int) -> SignedPerm:
        """C times the unit blade, cached; the kernel of every bilinear pairing."""
        m = self._cblades.get(mask)
        if m is None:
            m = self.charge_conj @ self.blade(mask)
            self._cblades[mask] = m
        return m

    def chiral_index(self, sign: str) -> list:
        return self.plus_index if sign == "+" else self.minus_index


@lru_cache(maxsize=None)
def build_gamma(n: int) -> GammaRep:
    return GammaRep(n)


def blade_matrix(x: Blade, rep: GammaRep) -> SignedPerm:
    if x.dim != rep.dim:
        raise ValueError("blade dimension does not match the representation")
    return rep.blade(x.mask).scaled(x.coeff)


def clifford_apply(x: CliffordElement, vec: Sequence[ExtScalar], rep: GammaRep) -> list:
    out = [ZERO] * rep.size
    for m, c in x.terms.items():
        img = rep.blade(m).apply(vec)
        out = [a + b * c for a, b in zip(out, img)]
    return out


@dataclass(frozen=True)
class Spinor:
    dim_half: int
    coeffs: tuple
    chirality: str = "mixed"

    def __post_init__(self):
        if len(self.coeffs) != 1 << self.dim_half:
            raise ValueError("spinor length must be 2^n")
        if self.chirality in "+-":
            rep = build_gamma(self.dim_half)
            other = rep.chiral_index("-" if self.chirality == "+" else "+")
            if any(self.coeffs[r] for r in other):
                raise ValueError(f"coefficients violate chirality {self.chirality}")
        elif self.chirality != "mixed":
            raise ValueError("chirality must be '+', '-' or 'mixed'")

    @classmethod
    def zero(cls, n: int, chirality: str = "+") -> "Spinor":
        return cls(n, (ZERO,) * (1 << n), chirality)

    @classmethod
    def basis(cls, n: int, index: int) -> "Spinor":
        c = [ZERO] * (1 << n)
        c[index] = ONE
        return cls(n, tuple(c), "+" if _popcount(index) % 2 == 0 else "-")

    @classmethod
    def from_chiral(cls, n: int, sign: str, values: Sequence) -> "Spinor":
        rep = build_gamma(n)
        idx = rep.chiral_index(sign)
        if len(values) != len(idx):
            raise ValueError(f"expected {len(idx)} chiral coordinates")
        c = [ZERO] * (1 << n)
        for r, v in zip(idx, values):
            c[r] = as_scalar(v)
        return cls(n, tuple(c), sign)

    @classmethod
    def tagged(cls, n: int, coeffs: Sequence) -> "Spinor":
        """Spinor with the chirality tag inferred from its support."""
        coeffs = tuple(coeffs)
        plus = any(c for r, c in enumerate(coeffs) if _popcount(r) % 2 == 0)
        minus = any(c for r, c in enumerate(coeffs) if _popcount(r) % 2 == 1)
        tag = "mixed" if plus and minus else ("-" if minus else "+")
        return cls(n, coeffs, tag)

    def chiral(self, sign: str = None) -> list:
        sign = sign or self.chirality
        return [self.coeffs[r] for r in build_gamma(self.dim_half).chiral_index(sign)]

    def _like(self, coeffs, chirality=None):
        return Spinor(self.dim_half, tuple(coeffs), chirality or self.chirality)

    def __add__(self, other: "Spinor") -> "Spinor":
        tag = self.chirality if self.chirality == other.chirality else "mixed"
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)], tag)

    def __sub__(self, other: "Spinor") -> "Spinor":
        return self + (-other)

    def __neg__(self):
        return self._like([-a for a in self.coeffs])

    def scale(self, c) -> "Spinor":
        c = as_scalar(c)
        return self._like([a * c for a in self.coeffs])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def conj(self) -> "Spinor":
        return self._like([a.conjugate() for a in self.coeffs])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def _flip(tag: str) -> str:
    return {"+": "-", "-": "+"}.get(tag, "mixed")


def spin_act(p: int, q: int, psi: Spinor) -> Spinor:
    """x^{pq} acting on a spinor: (1/2) e^p e^q psi."""
    if p == q:
        raise ValueError("spin action needs distinct indices")
    rep = build_gamma(psi.dim_half)
    m = rep.gen(p) @ rep.gen(q)
    return psi._like([c * HALF for c in m.apply(psi.coeffs)])


def vector_act(v: Sequence, psi: Spinor) -> Spinor:
    """Clifford multiplication by the vector sum_i v_i e^i."""
    rep = build_gamma(psi.dim_half)
    out = [ZERO] * rep.size
    for i, c in enumerate(v):
        if c:
            img = rep.matrices[i].apply(psi.coeffs)
            out = [a + b * c for a, b in zip(out, img)]
    return Spinor(psi.dim_half, tuple(out), _flip(psi.chirality))


def _sp_pair(phi: Sequence, m: SignedPerm, psi: Sequence) -> ExtScalar:
    acc = ZERO
    for r, a in enumerate(phi):
        if a:
            b = psi[m.perm[r]]
            if b:
                acc = acc + (a * b).mul_ipow(m.phase[r])
    if m.coeff != ONE:
        acc = acc * m.coeff
    return acc


def _check_selection(rep: GammaRep, phi: Spinor, grade: int, psi: Spinor):
    if "mixed" in (phi.chirality, psi.chirality):
        return
    even = (rep.n + grade) % 2 == 0
    want = psi.chirality if even else _flip(psi.chirality)
    if phi.chirality != want:
        raise SelectionRuleError(
            f"selection rule: in dimension {rep.dim} a grade-{grade} pairing maps "
            f"chirality {psi.chirality} to {want}, got {phi.chirality}")


def pair_bilinear(phi: Spinor, blade: Blade, psi: Spinor) -> ExtScalar:
    """phi^T C (blade) psi, no conjugation."""
    rep = build_gamma(psi.dim_half)
    _check_selection(rep, phi, blade.grade, psi)
    return _sp_pair(phi.coeffs, rep.cblade(blade.mask), psi.coeffs) * blade.coeff


def bilinear_vector(phi: Spinor, psi: Spinor) -> list:
    """[(phi e^i psi) for i = 1..2n]."""
    rep = build_gamma(psi.dim_half)
    _check_selection(rep, phi, 1, psi)
    return [_sp_pair(phi.coeffs, rep.cblade(1 << i), psi.coeffs) for i in range(rep.dim)]


def pair_hermitian(phi: Spinor, psi: Spinor) -> ExtScalar:
    if "mixed" not in (phi.chirality, psi.chirality) and phi.chirality != psi.chirality:
        raise SelectionRuleError("Hermitian pairing needs equal chirality")
    acc = ZERO
    for a, b in zip(phi.coeffs, psi.coeffs):
        if a and b:
            acc = acc + a.conjugate() * b
    return acc


def charge_conjugate(psi: Spinor) -> Spinor:
    rep = build_gamma(psi.dim_half)
    out = rep.charge_conj.apply([c.conjugate() for c in psi.coeffs])
    tag = psi.chirality if rep.n % 2 == 0 else _flip(psi.chirality)
    return Spinor(psi.dim_half, tuple(out), tag)
