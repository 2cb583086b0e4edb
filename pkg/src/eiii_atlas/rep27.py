"""The 27 of e6 as V + Delta+ + C, its dual, and the cubic invariant.

A Vector27 is (v, psi, s) with v in C^10, psi in Delta+ of Cl(10), s in C; a
Covector27 is (u, phi, t) with phi in Delta-.  The pairing is
<Phi, Psi> = u.v + (phi psi) + t s, where (phi psi) = phi^T C psi.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .clifford import Blade, Spinor, build_gamma, pair_bilinear, vector_act, bilinear_vector
from .linalg import kernel
from .liealg import LieElement, basis as lie_basis
from .scalar import ExtScalar, ONE, ZERO, I, HALF, INV_SQRT2, as_scalar

__all__ = ["Vector27", "Covector27", "act27", "act27_dual", "pairing", "d_cubic", "d_dual",
           "diamond27", "diamond_dual", "stabilizer_psi0", "exp_nilpotent", "matrix27",
           "apply_matrix", "PSI0", "PHI0", "NilpotencyError"]


class NilpotencyError(ArithmeticError):
    pass


def _dot(a: Sequence[ExtScalar], b: Sequence[ExtScalar]) -> ExtScalar:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _vec(v) -> tuple:
    v = tuple(as_scalar(c) for c in v)
    if len(v) != 10:
        raise ValueError("vector part must have 10 components")
    return v


def _spinor(psi, sign: str) -> Spinor:
    if isinstance(psi, Spinor):
        if psi.dim_half != 5:
            raise ValueError("spinor part must live in Cl(10)")
        if psi.chirality != sign:
            psi = Spinor(5, psi.coeffs, sign)
        return psi
    return Spinor.from_chiral(5, sign, psi)


@dataclass(frozen=True)
class Vector27:
    v: tuple
    psi: Spinor
    s: ExtScalar

    def __init__(self, v, psi, s):
        object.__setattr__(self, "v", _vec(v))
        object.__setattr__(self, "psi", _spinor(psi, "+"))
        object.__setattr__(self, "s", as_scalar(s))

    @classmethod
    def zero(cls) -> "Vector27":
        return cls([ZERO] * 10, Spinor.zero(5, "+"), ZERO)

    def flat(self) -> list:
        return list(self.v) + self.psi.chiral("+") + [self.s]

    @classmethod
    def from_flat(cls, x: Sequence) -> "Vector27":
        if len(x) != 27:
            raise ValueError("need 27 coordinates")
        return cls(x[:10], Spinor.from_chiral(5, "+", x[10:26]), x[26])

    def __add__(self, o):
        return Vector27([a + b for a, b in zip(self.v, o.v)], self.psi + o.psi, self.s + o.s)

    def __sub__(self, o):
        return Vector27([a - b for a, b in zip(self.v, o.v)], self.psi - o.psi, self.s - o.s)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c) -> "Vector27":
        c = as_scalar(c)
        return Vector27([a * c for a in self.v], self.psi.scale(c), self.s * c)

    def conj(self) -> "Vector27":
        return Vector27([a.conjugate() for a in self.v], self.psi.conj(), self.s.conjugate())

    def is_zero(self) -> bool:
        return not any(self.flat())

    def to_json(self):
        return {"v": [c.to_json() for c in self.v],
                "psi": [c.to_json() for c in self.psi.chiral("+")], "s": self.s.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Vector27":
        psi = [ExtScalar.from_json(c) for c in obj["psi"]]
        if len(psi) == 32:
            sp = Spinor(5, tuple(psi), "+")
        else:
            sp = Spinor.from_chiral(5, "+", psi)
        return cls([ExtScalar.from_json(c) for c in obj["v"]], sp, ExtScalar.from_json(obj["s"]))


@dataclass(frozen=True)
class Covector27:
    u: tuple
    phi: Spinor
    t: ExtScalar

    def __init__(self, u, phi, t):
        object.__setattr__(self, "u", _vec(u))
        object.__setattr__(self, "phi", _spinor(phi, "-"))
        object.__setattr__(self, "t", as_scalar(t))

    @classmethod
    def zero(cls) -> "Covector27":
        return cls([ZERO] * 10, Spinor.zero(5, "-"), ZERO)

    def flat(self) -> list:
        return list(self.u) + self.phi.chiral("-") + [self.t]

    @classmethod
    def from_flat(cls, x: Sequence) -> "Covector27":
        return cls(x[:10], Spinor.from_chiral(5, "-", x[10:26]), x[26])

    def __add__(self, o):
        return Covector27([a + b for a, b in zip(self.u, o.u)], self.phi + o.phi, self.t + o.t)

    def __sub__(self, o):
        return Covector27([a - b for a, b in zip(self.u, o.u)], self.phi - o.phi, self.t - o.t)

    def scale(self, c) -> "Covector27":
        c = as_scalar(c)
        return Covector27([a * c for a in self.u], self.phi.scale(c), self.t * c)

    def is_zero(self) -> bool:
        return not any(self.flat())

    def to_json(self):
        return {"u": [c.to_json() for c in self.u],
                "phi": [c.to_json() for c in self.phi.chiral("-")], "t": self.t.to_json()}


PSI0 = Vector27([ZERO] * 10, Spinor.zero(5, "+"), ONE)
PHI0 = Covector27([ZERO] * 10, Spinor.zero(5, "-"), ONE)

_UNIT = Blade.unit(10)


def pairing(phi: Covector27, psi: Vector27) -> ExtScalar:
    return _dot(phi.u, psi.v) + pair_bilinear(phi.phi, _UNIT, psi.psi) + phi.t * psi.s


def _so_vec(so: dict, v: Sequence[ExtScalar]) -> list:
    """x^{pq} e^r = delta^{qr} e^p - delta^{pr} e^q."""
    out = [ZERO] * 10
    for (p, q), c in so.items():
        if v[q - 1]:
            out[p - 1] = out[p - 1] + c * v[q - 1]
        if v[p - 1]:
            out[q - 1] = out[q - 1] - c * v[p - 1]
    return out


def _so_spinor(so: dict, psi: Spinor) -> Spinor:
    rep = build_gamma(5)
    out = [ZERO] * rep.size
    for (p, q), c in so.items():
        img = rep.blade((1 << (p - 1)) | (1 << (q - 1))).apply(psi.coeffs)
        h = c * HALF
        out = [a + b * h for a, b in zip(out, img)]
    return Spinor(5, tuple(out), psi.chirality)


def _parts(x: LieElement):
    if x.algebra not in ("e6", "f4"):
        raise ValueError("the 27 is a representation of e6 (and f4)")
    return x.so_part, x.spinor_plus, x.spinor_minus, x.u1


def act27(x: LieElement, p: Vector27) -> Vector27:
    so, xi, eta, r = _parts(x)
    v = _so_vec(so, p.v)
    psi = _so_spinor(so, p.psi)
    s = ZERO
    if r:
        v = [a + b * (r * ExtScalar(0, 2)) for a, b in zip(v, p.v)]
        psi = psi + p.psi.scale(r * -I)
        s = s + p.s * r * ExtScalar(0, -4)
    if not xi.is_zero():
        bv = bilinear_vector(xi, p.psi)
        v = [a + b * INV_SQRT2 for a, b in zip(v, bv)]
        psi = psi + xi.scale(p.s)
    if not eta.is_zero():
        psi = psi - Spinor(5, vector_act(p.v, eta).coeffs, "+").scale(INV_SQRT2)
        s = s - pair_bilinear(eta, _UNIT, p.psi)
    return Vector27(v, psi, s)


def act27_dual(x: LieElement, f: Covector27) -> Covector27:
    """Contragredient action: <X Phi, Psi> = -<Phi, X Psi>."""
    so, xi, eta, r = _parts(x)
    u = _so_vec(so, f.u)
    phi = _so_spinor(so, f.phi)
    t = ZERO
    if r:
        u = [a + b * (r * ExtScalar(0, -2)) for a, b in zip(u, f.u)]
        phi = phi + f.phi.scale(r * I)
        t = t + f.t * r * ExtScalar(0, 4)
    if not xi.is_zero():
        phi = phi - Spinor(5, vector_act(f.u, xi).coeffs, "-").scale(INV_SQRT2)
        t = t - pair_bilinear(f.phi, _UNIT, xi)
    if not eta.is_zero():
        bv = bilinear_vector(f.phi, eta)
        u = [a + b * INV_SQRT2 for a, b in zip(u, bv)]
        phi = phi + eta.scale(f.t)
    return Covector27(u, phi, t)


def _cubic(v1, p1, s1, v2, p2, s2, v3, p3, s3) -> ExtScalar:
    def term(va, pa, sa, vb, pb, sb, vc, pc, sc):
        # (v_a . v_c) s_b - (1/sqrt2)(psi_a v_c psi_b)
        acc = _dot(va, vc) * sb
        if any(vc) and not pa.is_zero() and not pb.is_zero():
            acc = acc - _dot(vc, bilinear_vector(pa, pb)) * INV_SQRT2
        return acc
    return (term(v1, p1, s1, v2, p2, s2, v3, p3, s3) + term(v2, p2, s2, v3, p3, s3, v1, p1, s1)
            + term(v3, p3, s3, v1, p1, s1, v2, p2, s2))


def d_cubic(p1: Vector27, p2: Vector27, p3: Vector27) -> ExtScalar:
    return _cubic(p1.v, p1.psi, p1.s, p2.v, p2.psi, p2.s, p3.v, p3.psi, p3.s)


def d_dual(f1: Covector27, f2: Covector27, f3: Covector27) -> ExtScalar:
    """The cubic invariant of the dual, same block formula in (u, phi, t)."""
    return _cubic(f1.u, f1.phi, f1.t, f2.u, f2.phi, f2.t, f3.u, f3.phi, f3.t)


def _diamond(v1, p1, s1, v2, p2, s2):
    bv = bilinear_vector(p1, p2) if not (p1.is_zero() or p2.is_zero()) else [ZERO] * 10
    v = [a * s2 + b * s1 - c * INV_SQRT2 for a, b, c in zip(v1, v2, bv)]
    other = "-" if p1.chirality == "+" else "+"
    sp = vector_act(v1, p2) + vector_act(v2, p1)
    sp = Spinor(5, sp.coeffs, other).scale(-INV_SQRT2)
    return v, sp, _dot(v1, v2)


def diamond27(p1: Vector27, p2: Vector27) -> Covector27:
    """<P1 <> P2, P3> = d(P1, P2, P3)."""
    return Covector27(*_diamond(p1.v, p1.psi, p1.s, p2.v, p2.psi, p2.s))


def diamond_dual(f1: Covector27, f2: Covector27) -> Vector27:
    """Diamond of two covectors through the dual cubic: <Phi3, F1 <> F2> = d*(F1, F2, Phi3)."""
    return Vector27(*_diamond(f1.u, f1.phi, f1.t, f2.u, f2.phi, f2.t))


# matrices ------------------------------------------------------------------

def matrix27(x: LieElement) -> List[List[ExtScalar]]:
    """27x27 matrix of act27(x, .) in the flat (v, psi chiral, s) coordinates."""
    cols = []
    for k in range(27):
        e = [ZERO] * 27
        e[k] = ONE
        cols.append(act27(x, Vector27.from_flat(e)).flat())
    return [[cols[c][r] for c in range(27)] for r in range(27)]


def apply_matrix(m: List[List[ExtScalar]], p: Vector27) -> Vector27:
    x = p.flat()
    out = []
    for row in m:
        acc = ZERO
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return Vector27.from_flat(out)


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO)
             for j in range(n)] for i in range(n)]


def exp_nilpotent(z: LieElement) -> List[List[ExtScalar]]:
    """exp of a purely spinorial e6 element: Id + N + N^2/2, with N^3 = 0 asserted."""
    so, xi, eta, r = _parts(z)
    if so or r:
        raise ValueError("exp_nilpotent needs an element of Delta+ or Delta- alone")
    if not xi.is_zero() and not eta.is_zero():
        raise ValueError("exp_nilpotent needs an element of Delta+ or Delta- alone")
    n = matrix27(z)
    n2 = _matmul(n, n)
    if any(any(row) for row in _matmul(n2, n)):
        raise NilpotencyError("N^3 is nonzero")
    return [[(ONE if i == j else ZERO) + n[i][j] + n2[i][j] * HALF for j in range(27)]
            for i in range(27)]


def stabilizer_psi0() -> List[LieElement]:
    """Elements of e6 annihilating Psi0 in the 27 and its partner Phi0 in the dual.

    On the compact form eta is tied to xi, so the real stabiliser of Psi0 has
    xi = eta = 0; over C that condition is the joint annihilator.
    """
    elems = lie_basis("e6")
    rows = {}
    for k, x in enumerate(elems):
        img = act27(x, PSI0).flat() + act27_dual(x, PHI0).flat()
        for m, c in enumerate(img):
            if c:
                rows.setdefault(m, {})[k] = c
    out = []
    for vec in kernel(rows.values(), len(elems)):
        coords = [ZERO] * len(elems)
        for k, c in vec.items():
            coords[k] = c
        out.append(LieElement("e6", coords))
    return out


def annihilator_psi0() -> List[LieElement]:
    """Complex kernel of X -> X Psi0 alone (so(10) plus Delta-, dimension 61)."""
    elems = lie_basis("e6")
    rows = {}
    for k, x in enumerate(elems):
        for m, c in enumerate(act27(x, PSI0).flat()):
            if c:
                rows.setdefault(m, {})[k] = c
    out = []
    for vec in kernel(rows.values(), len(elems)):
        coords = [ZERO] * len(elems)
        for k, c in vec.items():
            coords[k] = c
        out.append(LieElement("e6", coords))
    return out
