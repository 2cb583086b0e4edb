"""Complexified octonions from D = 8 triality.

The unit e^0 and imaginary units e^1..e^7 are the Clifford generators 1..8 of
Cl(8) with the index shifted down by one.  A fixed Majorana spinor s with
(ss) = 1 and t = e^0 s identify both chiral spinor spaces with the vectors,
and u * v := (t(u) e^i s(v)) e^i.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .clifford import Blade, Spinor, build_gamma, pair_bilinear, vector_act, spin_act
from .report import Check
from .rng import Rng
from .scalar import ExtScalar, ONE, ZERO, I, INV_SQRT2, HALF, as_scalar

__all__ = ["Octonion", "NonInvertibleError", "TrialityData", "triality", "star", "associator",
           "bar_inverse", "star_table", "PAPER_TABLE", "table_text", "dictionary_check",
           "g2_generators", "g2_basis", "so_act_vector"]


class NonInvertibleError(ArithmeticError):
    pass


class Octonion:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) != 8:
            raise ValueError("an octonion has 8 components")
        self.coeffs = tuple(as_scalar(c) for c in coeffs)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls([ZERO] * 8)

    @classmethod
    def unit(cls, k: int, c=ONE) -> "Octonion":
        v = [ZERO] * 8
        v[k] = as_scalar(c)
        return cls(v)

    @classmethod
    def real(cls, c) -> "Octonion":
        return cls.unit(0, c)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Octonion([-a for a in self.coeffs])

    def scale(self, c) -> "Octonion":
        c = as_scalar(c)
        return Octonion([a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return star(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def bar(self) -> "Octonion":
        return Octonion([self.coeffs[0]] + [-a for a in self.coeffs[1:]])

    def conj(self) -> "Octonion":
        """Complex conjugation of the coefficients (not the octonion bar)."""
        return Octonion([a.conjugate() for a in self.coeffs])

    def dot(self, other: "Octonion") -> ExtScalar:
        """Complex-bilinear Euclidean product."""
        acc = ZERO
        for a, b in zip(self.coeffs, other.coeffs):
            if a and b:
                acc = acc + a * b
        return acc

    def norm2(self) -> ExtScalar:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return "Octonion(" + ", ".join(str(c) for c in self.coeffs) + ")"


# the multiplication table as printed, row * column = sign * e^index
PAPER_TABLE = (
    ((1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (1, 7), (-1, 6)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1), (-1, 6), (1, 7), (1, 4), (-1, 5)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (1, 6), (-1, 5), (-1, 4)),
    ((1, 4), (-1, 5), (1, 6), (-1, 7), (-1, 0), (1, 1), (-1, 2), (1, 3)),
    ((1, 5), (1, 4), (-1, 7), (-1, 6), (-1, 1), (-1, 0), (1, 3), (1, 2)),
    ((1, 6), (-1, 7), (-1, 4), (1, 5), (1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 7), (1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (-1, 1), (-1, 0)),
)


def _gen(k: int) -> Blade:
    return Blade.of(8, k + 1)


class TrialityData:
    """The spinors s, t and the maps between V and the two chiral spaces."""

    def __init__(self):
        rep = build_gamma(4)
        c = [ZERO] * 16
        c[0] = c[15] = INV_SQRT2
        self.s = Spinor(4, tuple(c), "+")
        self.t = vector_act(Octonion.unit(0).coeffs, self.s)
        self.rep = rep

    def s_map(self, v: Octonion) -> Spinor:
        return vector_act(v.coeffs, self.s)

    def t_map(self, v: Octonion) -> Spinor:
        return vector_act(v.coeffs, self.t)

    def s_inv(self, eta: Spinor) -> Octonion:
        return Octonion([pair_bilinear(self.s, _gen(i), eta) for i in range(8)])

    def t_inv(self, xi: Spinor) -> Octonion:
        return Octonion([pair_bilinear(self.t, _gen(i), xi) for i in range(8)])

    def bar_plus(self, xi: Spinor) -> Spinor:
        return self.s.scale(pair_bilinear(self.s, Blade.unit(8), xi) * 2) - xi

    def bar_minus(self, eta: Spinor) -> Spinor:
        return self.t.scale(pair_bilinear(self.t, Blade.unit(8), eta) * 2) - eta

    def spinor_star(self, u: Octonion, v: Octonion) -> Octonion:
        """u * v evaluated through the spinor bilinears (slow reference path)."""
        tu, sv = self.t_map(u), self.s_map(v)
        return Octonion([pair_bilinear(tu, _gen(i), sv) for i in range(8)])


@lru_cache(maxsize=None)
def triality() -> TrialityData:
    return TrialityData()


@lru_cache(maxsize=None)
def star_table() -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Derive the 8x8 table from the spinor definition."""
    tri = triality()
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            p = tri.spinor_star(Octonion.unit(a), Octonion.unit(b))
            nz = [(k, c) for k, c in enumerate(p.coeffs) if c]
            if len(nz) != 1 or nz[0][1] not in (ONE, -ONE):
                raise ArithmeticError(f"e{a} * e{b} is not a signed unit")
            k, c = nz[0]
            row.append((1 if c == ONE else -1, k))
        rows.append(tuple(row))
    return tuple(rows)


def star(u: Octonion, v: Octonion) -> Octonion:
    table = star_table()
    out = [ZERO] * 8
    for a, x in enumerate(u.coeffs):
        if not x:
            continue
        row = table[a]
        for b, y in enumerate(v.coeffs):
            if y:
                sg, k = row[b]
                p = x * y
                out[k] = out[k] + p if sg > 0 else out[k] - p
    return Octonion(out)


def associator(u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    return star(u, star(v, w)) - star(star(u, v), w)


def bar_inverse(u: Octonion) -> Octonion:
    n = u.norm2()
    if not n:
        raise NonInvertibleError("octonion with u.u = 0 has no inverse")
    return u.bar().scale(n.inverse())


def table_text(table=None) -> str:
    table = table or star_table()
    head = ["*"] + [f"e{k}" for k in range(8)]
    lines = [" ".join(h.rjust(4) for h in head)]
    for a, row in enumerate(table):
        cells = [f"e{a}"] + [("-" if sg < 0 else "") + f"e{k}" for sg, k in row]
        lines.append(" ".join(c.rjust(4) for c in cells))
    return "\n".join(lines)


def _random_octonion(rng: Rng, kind: str = "gaussian") -> Octonion:
    return Octonion(rng.scalars(8, kind))


def _random_spinor(rng: Rng, sign: str) -> Spinor:
    return Spinor.from_chiral(4, sign, rng.scalars(8, "gaussian"))


def dictionary_check(trials: int = 20, seed: int = 0) -> List[Check]:
    """The eight identities tying the product to Clifford multiplication."""
    tri = triality()
    rng = Rng(seed)
    names = ["t(x*s^-1(eta))", "t(s^-1(eta)*x)", "s(t^-1(xi)*x)", "s(x*t^-1(xi))",
             "t^-1(xi)*s^-1(eta)", "s^-1(eta)*t^-1(xi)", "plus_symmetrised", "minus_symmetrised"]
    fails: Dict[str, int] = {}
    unit = Blade.unit(8)
    for trial in range(trials):
        x = _random_octonion(rng)
        xi, xi2 = _random_spinor(rng, "+"), _random_spinor(rng, "+")
        eta, eta2 = _random_spinor(rng, "-"), _random_spinor(rng, "-")
        xv, xbv = x.coeffs, x.bar().coeffs
        lhs_rhs = [
            (tri.t_map(star(x, tri.s_inv(eta))), vector_act(xv, tri.bar_minus(eta))),
            (tri.t_map(star(tri.s_inv(eta), x)), tri.bar_plus(vector_act(xbv, eta))),
            (tri.s_map(star(tri.t_inv(xi), x)), vector_act(xv, tri.bar_plus(xi))),
            (tri.s_map(star(x, tri.t_inv(xi))), tri.bar_minus(vector_act(xbv, xi))),
            (star(tri.t_inv(xi), tri.s_inv(eta)),
             Octonion([pair_bilinear(xi, _gen(i), eta) for i in range(8)])),
            (star(tri.s_inv(eta), tri.t_inv(xi)),
             Octonion([pair_bilinear(tri.bar_minus(eta), _gen(i), tri.bar_plus(xi))
                       for i in range(8)]).bar()),
            (star(tri.t_inv(tri.bar_plus(xi)), tri.t_inv(xi2))
             + star(tri.t_inv(tri.bar_plus(xi2)), tri.t_inv(xi)),
             Octonion.real(pair_bilinear(xi, unit, xi2) * 2)),
            (star(tri.s_inv(tri.bar_minus(eta)), tri.s_inv(eta2))
             + star(tri.s_inv(tri.bar_minus(eta2)), tri.s_inv(eta)),
             Octonion.real(pair_bilinear(eta, unit, eta2) * 2)),
        ]
        for name, (lhs, rhs) in zip(names, lhs_rhs):
            if lhs.coeffs != rhs.coeffs and name not in fails:
                fails[name] = trial
    return [Check(f"octonion.dictionary.{n}", n not in fails, trials,
                  witness={"trial": fails[n], "seed": seed} if n in fails else None)
            for n in names]


# g2 -----------------------------------------------------------------------

SoDict = Dict[Tuple[int, int], ExtScalar]


def _so_add(d: SoDict, p: int, q: int, c) -> None:
    """Add c x^{pq} (any order of p, q) into an antisymmetric coefficient dict keyed p<q."""
    c = as_scalar(c)
    if p > q:
        p, q, c = q, p, -c
    v = d.get((p, q), ZERO) + c
    if v:
        d[(p, q)] = v
    else:
        d.pop((p, q), None)


def _complex_wedge(a: int, sa, b: int, sb, coeff) -> SoDict:
    """coeff (e^a + sa e^{a+1}) ^ (e^b + sb e^{b+1}) as an so dict (octonion indices)."""
    d: SoDict = {}
    sa, sb, coeff = as_scalar(sa), as_scalar(sb), as_scalar(coeff)
    _so_add(d, a, b, coeff)
    _so_add(d, a, b + 1, coeff * sb)
    _so_add(d, a + 1, b, coeff * sa)
    _so_add(d, a + 1, b + 1, coeff * sa * sb)
    return d


def _merge(*ds: SoDict) -> SoDict:
    out: SoDict = {}
    for d in ds:
        for (p, q), c in d.items():
            _so_add(out, p, q, c)
    return out


def g2_generators() -> List[SoDict]:
    """14 so(8) elements over octonion indices 0..7, keyed (p, q) with p < q.

    Eight su(3) generators on the imaginary units 2..7 first, then the three
    extra complex generators and their complex conjugates.
    """
    gens: List[SoDict] = []
    pairs = (2, 4, 6)
    for a in pairs:
        for b in pairs:
            if a != b:
                gens.append(_complex_wedge(a, I, b, -I, ONE))
    gens.append(_merge({(2, 3): ONE}, {(4, 5): -ONE}))
    gens.append(_merge({(4, 5): ONE}, {(6, 7): -ONE}))
    extra = []
    for a, b, c in ((2, 4, 6), (4, 6, 2), (6, 2, 4)):
        # clifford (1/4)(e^a+ie^{a+1})(e^b+ie^{b+1}) - (i/2) e^1 (e^c - i e^{c+1}); x^{pq} = (1/2) e^p e^q
        part = _complex_wedge(a, I, b, I, HALF)
        tail: SoDict = {}
        _so_add(tail, 1, c, -I)
        _so_add(tail, 1, c + 1, -ONE)
        extra.append(_merge(part, tail))
    gens.extend(extra)
    gens.extend({k: v.conjugate() for k, v in g.items()} for g in extra)
    return gens


def so_act_vector(x: SoDict, v: Sequence[ExtScalar], offset: int = 0) -> list:
    """x^{pq} e^r = delta^{qr} e^p - delta^{pr} e^q, with indices shifted by offset."""
    out = [ZERO] * len(v)
    for (p, q), c in x.items():
        p0, q0 = p - offset, q - offset
        if v[q0]:
            out[p0] = out[p0] + c * v[q0]
        if v[p0]:
            out[q0] = out[q0] - c * v[p0]
    return out


def so_act_octonion(x: SoDict, u: Octonion) -> Octonion:
    return Octonion(so_act_vector(x, u.coeffs))


def so_act_spinor8(x: SoDict, psi: Spinor) -> Spinor:
    out = Spinor.zero(4, psi.chirality)
    for (p, q), c in x.items():
        out = out + spin_act(p + 1, q + 1, psi).scale(c)
    return out


def g2_basis():
    """The 14 g2 generators as LieElements of the g2 algebra (so(8) layout, indices 1..8)."""
    from .liealg import LieElement
    return [LieElement.from_so("g2", {(p + 1, q + 1): c for (p, q), c in g.items()})
            for g in g2_generators()]
