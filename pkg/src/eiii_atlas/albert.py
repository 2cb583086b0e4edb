"""The Albert-algebra view of the 27: F4 pairing, diamond product, Jordan matrices.

Coordinates in the 8 + 2 split: v = (u, r/sqrt2, i t/sqrt2) with u in C^8,
psi = (xi, eta) as in `eiii.split_8_2`.  Two arrangements are used:

* `j_map` is the real arrangement with diagonal ((r-s)/2, (s-t)/2, -(r+s)/2);
  it carries the master identity with the diamond product.
* `j_map_complex` is the complexified arrangement with diagonal
  ((r+t)/2, s, -(r-t)/2) = j_map + (s+t)/2 Id; on the orbit of Psi0 it
  squares to (s+t) times itself.

xi, eta and u become octonions through t^{-1}, s^{-1} and the identity map.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .clifford import Blade, Spinor, build_gamma, charge_conjugate, pair_bilinear
from .eiii import NotInChart, split_8_2
from .octonion import NonInvertibleError, Octonion, bar_inverse, star, triality
from .rep27 import Covector27, Vector27, d_cubic, diamond27, pairing
from .scalar import ExtScalar, HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, as_scalar

__all__ = ["JordanMatrix", "Sqrt3", "sigma_iso", "sigma_inv", "f4_pairing", "diamond_f4",
           "j_map", "j_map_complex", "jordan_star", "jordan_det", "octonion_det", "det_explicit",
           "veronese_check", "veronese_from_jordan", "veronese_point", "projective_chart",
           "chart_transition_oct", "f4_orbit_project", "reality_check", "split_coords",
           "real_point", "PSI_O", "PSI_EMPTY", "PSI_EMPTY_UNIT", "StratumAtInfinity", "trace_coordinate"]


class StratumAtInfinity(ValueError):
    """s + t = 0: the point lies in the codimension-one F4 orbit."""


_UNIT8 = Blade.unit(8)
_E10 = 1 << 9


# sqrt3-graded values ------------------------------------------------------------

@dataclass(frozen=True)
class Sqrt3:
    """a + b sqrt3 with a, b ExtScalars or Vector27s of the same kind."""
    a: object
    b: object

    def __add__(self, o):
        return Sqrt3(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return Sqrt3(self.a - o.a, self.b - o.b)

    def scale(self, c) -> "Sqrt3":
        return Sqrt3(_sc(self.a, c), _sc(self.b, c))

    def times_sqrt3(self) -> "Sqrt3":
        return Sqrt3(_sc(self.b, 3), self.a)

    def rational_part(self):
        """The sqrt3-free value; raises if the sqrt3 component survives."""
        if _nonzero(self.b):
            raise ArithmeticError("value has a nonzero sqrt3 component")
        return self.a


def _sc(x, c):
    c = as_scalar(c)
    return x.scale(c) if hasattr(x, "scale") else x * c


def _nonzero(x) -> bool:
    if isinstance(x, ExtScalar):
        return bool(x)
    return not x.is_zero()


def _vec27(v10, psi=None, s=ZERO) -> Vector27:
    return Vector27(v10, psi if psi is not None else Spinor.zero(5, "+"), s)


def _e10(c) -> list:
    v = [ZERO] * 10
    v[9] = as_scalar(c)
    return v


# Psi_o = (-sqrt2 i e^10, 0, 0); Psi_empty = sqrt3 * (i sqrt2/3 e^10, 0, 1/3)
PSI_O = _vec27(_e10(-SQRT2 * I))
PSI_EMPTY_UNIT = _vec27(_e10(SQRT2 * I * ExtScalar(Fraction(1, 3))), None, ExtScalar(Fraction(1, 3)))
PSI_EMPTY = Sqrt3(Vector27.zero(), PSI_EMPTY_UNIT)


# sigma and the F4 pairing ---------------------------------------------------------

def _e10_spinor(psi: Spinor, c: ExtScalar, sign: str) -> Spinor:
    img = build_gamma(5).gen(10).apply(psi.coeffs)
    return Spinor(5, tuple(x * c for x in img), sign)


def sigma_iso(phi: Covector27) -> Vector27:
    """(u + w e^10, phi, t) -> (u - w e^10, i e^10 phi, t)."""
    v = list(phi.u)
    v[9] = -v[9]
    return Vector27(v, _e10_spinor(phi.phi, I, "+"), phi.t)


def sigma_inv(p: Vector27) -> Covector27:
    v = list(p.v)
    v[9] = -v[9]
    return Covector27(v, _e10_spinor(p.psi, -I, "-"), p.s)


def f4_pairing(p1: Vector27, p2: Vector27) -> ExtScalar:
    """<P1, P2> = natural pairing of sigma^{-1} P2 with P1."""
    return pairing(sigma_inv(p2), p1)


def diamond_f4(p1: Vector27, p2: Vector27) -> Vector27:
    return sigma_iso(diamond27(p1, p2))


def split_coords(p: Vector27) -> dict:
    """u (8), r, t, s, xi, eta of the 8 + 2 split."""
    xi, eta = split_8_2(p.psi)
    return {"u": list(p.v[:8]), "r": p.v[8] * SQRT2, "t": p.v[9] * SQRT2 * -I, "s": p.s,
            "xi": xi, "eta": eta}


def trace_coordinate(p: Vector27) -> ExtScalar:
    """s + t = 3 <P, Psi_empty/sqrt3>."""
    c = split_coords(p)
    return c["s"] + c["t"]


def reality_check(p: Vector27) -> bool:
    """u, r, s, t real and psi = i e^10 C psi*."""
    c = split_coords(p)
    if not all(x.is_real() for x in c["u"] + [c["r"], c["t"], c["s"]]):
        return False
    cc = charge_conjugate(p.psi)
    img = build_gamma(5).gen(10).apply(cc.coeffs)
    return tuple(x * I for x in img) == p.psi.coeffs


def real_point(u8: Sequence, r, t, s, chi: Spinor) -> Vector27:
    """Real point with coordinates (u8, r, t, s); psi = chi + i e^10 C chi* is real by construction."""
    r, t = as_scalar(r), as_scalar(t)
    v = [as_scalar(c) for c in u8] + [r * INV_SQRT2, t * I * INV_SQRT2]
    img = build_gamma(5).gen(10).apply(charge_conjugate(chi).coeffs)
    psi = Spinor(5, tuple(a + b * I for a, b in zip(chi.coeffs, img)), "+")
    return Vector27(v, psi, as_scalar(s))


# Jordan matrices -------------------------------------------------------------------

@dataclass(frozen=True)
class JordanMatrix:
    """Hermitian 3x3 octonion matrix: diagonal d and upper entries x12, x23, x13.

    The lower triangle is the complex-linear octonion bar of the upper one.
    """
    d: Tuple[ExtScalar, ExtScalar, ExtScalar]
    x12: Octonion
    x23: Octonion
    x13: Octonion

    def __init__(self, d, x12, x23, x13):
        object.__setattr__(self, "d", tuple(as_scalar(c) for c in d))
        object.__setattr__(self, "x12", x12)
        object.__setattr__(self, "x23", x23)
        object.__setattr__(self, "x13", x13)

    @classmethod
    def diag(cls, a, b, c) -> "JordanMatrix":
        z = Octonion.zero()
        return cls((a, b, c), z, z, z)

    @classmethod
    def identity(cls) -> "JordanMatrix":
        return cls.diag(ONE, ONE, ONE)

    def entry(self, i: int, j: int) -> Octonion:
        """Entry (i, j) with 1-based indices."""
        if i == j:
            return Octonion.real(self.d[i - 1])
        upper = {(1, 2): self.x12, (2, 3): self.x23, (1, 3): self.x13}
        if (i, j) in upper:
            return upper[(i, j)]
        return upper[(j, i)].bar()

    def trace(self) -> ExtScalar:
        return self.d[0] + self.d[1] + self.d[2]

    def __add__(self, o):
        return JordanMatrix([a + b for a, b in zip(self.d, o.d)], self.x12 + o.x12,
                            self.x23 + o.x23, self.x13 + o.x13)

    def __sub__(self, o):
        return self + o.scale(-ONE)

    def scale(self, c) -> "JordanMatrix":
        c = as_scalar(c)
        return JordanMatrix([a * c for a in self.d], self.x12.scale(c), self.x23.scale(c),
                            self.x13.scale(c))

    def __eq__(self, o):
        return (isinstance(o, JordanMatrix) and self.d == o.d and self.x12 == o.x12
                and self.x23 == o.x23 and self.x13 == o.x13)

    def __hash__(self):
        return hash((self.d, self.x12, self.x23, self.x13))

    def is_zero(self) -> bool:
        return not any(self.d) and all(x.is_zero() for x in (self.x12, self.x23, self.x13))

    def to_json(self):
        return {"diag": [c.to_json() for c in self.d],
                "oct": [x.to_json() for x in (self.x12, self.x23, self.x13)]}

    @classmethod
    def from_json(cls, obj) -> "JordanMatrix":
        sc = ExtScalar.from_json
        octs = [Octonion([sc(c) for c in row]) for row in obj["oct"]]
        return cls([sc(c) for c in obj["diag"]], *octs)


def _octonions(p: Vector27):
    c = split_coords(p)
    tri = triality()
    return c, tri.t_inv(c["xi"]), tri.s_inv(c["eta"]), Octonion(c["u"])


def j_map(p: Vector27) -> JordanMatrix:
    c, xi, eta, u = _octonions(p)
    r, s, t = c["r"], c["s"], c["t"]
    return JordanMatrix([(r - s) * HALF, (s - t) * HALF, -(r + s) * HALF],
                        xi.scale(INV_SQRT2), eta.scale(INV_SQRT2), u.scale(INV_SQRT2))


def j_map_complex(p: Vector27) -> JordanMatrix:
    c, xi, eta, u = _octonions(p)
    r, s, t = c["r"], c["s"], c["t"]
    return JordanMatrix([(r + t) * HALF, s, (t - r) * HALF],
                        xi.scale(INV_SQRT2), eta.scale(INV_SQRT2), u.scale(INV_SQRT2))


def jordan_star(a: JordanMatrix, b: JordanMatrix) -> JordanMatrix:
    """(AB + BA)/2 with octonion entry products."""
    def prod(i, j):
        acc = Octonion.zero()
        for k in (1, 2, 3):
            acc = acc + star(a.entry(i, k), b.entry(k, j)) + star(b.entry(i, k), a.entry(k, j))
        return acc.scale(HALF)
    diag = []
    for i in (1, 2, 3):
        m = prod(i, i)
        if any(m.coeffs[1:]):
            raise ArithmeticError("diagonal of a Jordan product is not a scalar")
        diag.append(m[0])
    return JordanMatrix(diag, prod(1, 2), prod(2, 3), prod(1, 3))


def octonion_det(m: JordanMatrix) -> ExtScalar:
    """abc - (a x.xbar + b y.ybar + c z.zbar) + 2 z.(x * y) for [[a, zbar, ybar], [z, b, x], [y, xbar, c]]."""
    a, b, c = m.d
    z = m.x12.bar()
    x = m.x23
    y = m.x13.bar()
    return (a * b * c - (a * x.norm2() + b * y.norm2() + c * z.norm2())
            + z.dot(star(x, y)) * 2)


def jordan_det(p: Vector27) -> ExtScalar:
    """-(1/6) d(P, P, P)."""
    return d_cubic(p, p, p) * ExtScalar(Fraction(-1, 6))


def det_explicit(p: Vector27) -> ExtScalar:
    """-(1/2) s v.v + (sqrt2/2)(eta u xi) + (1/4)(xi xi) t+ - (1/4)(eta eta) t-."""
    c = split_coords(p)
    xi, eta, u = c["xi"], c["eta"], c["u"]
    vv = sum((x * x for x in p.v), ZERO)
    rep = build_gamma(4)
    uxi = [ZERO] * 16
    for k, coef in enumerate(u):
        if coef:
            img = rep.gen(k + 1).apply(xi.coeffs)
            uxi = [acc + y * coef for acc, y in zip(uxi, img)]
    eux = pair_bilinear(eta, _UNIT8, Spinor(4, tuple(uxi), "-"))
    tp = c["r"] - c["t"]
    tm = c["r"] + c["t"]
    quarter = HALF * HALF
    return (-(c["s"] * vv * HALF) + eux * SQRT2 * HALF
            + pair_bilinear(xi, _UNIT8, xi) * tp * quarter
            - pair_bilinear(eta, _UNIT8, eta) * tm * quarter)


# Veronese vectors and projective charts -------------------------------------------------

def veronese_check(x3: Sequence[Octonion], lam3: Sequence) -> bool:
    """lam_i bar(x_i) = x_{i+1} * x_{i+2} and x_i.x_i = lam_{i+1} lam_{i+2}, cyclically."""
    lam = [as_scalar(c) for c in lam3]
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        if x3[i].bar().scale(lam[i]) != star(x3[j], x3[k]):
            return False
        if x3[i].norm2() != lam[j] * lam[k]:
            return False
    return True


def veronese_from_jordan(m: JordanMatrix):
    """(x; lam) = ((1,3), (3,2), (2,1) entries; diagonal (2,2), (1,1), (3,3))."""
    x = [m.x13, m.x23.bar(), m.x12.bar()]
    lam = [m.d[1], m.d[0], m.d[2]]
    return x, lam


def veronese_point(a: Octonion, b: Octonion, normalise: bool = True):
    """The Veronese vector with chart-1 coordinates (a, b)."""
    lam = [ONE, b.norm2(), a.norm2()]
    x = [star(a, b).bar(), a, b]
    if normalise:
        total = lam[0] + lam[1] + lam[2]
        if not total:
            raise ArithmeticError("Veronese vector has zero trace")
        inv = total.inverse()
        lam = [c * inv for c in lam]
        x = [o.scale(inv) for o in x]
    return x, lam


def projective_chart(i: int, x3: Sequence[Octonion], lam3: Sequence) -> Tuple[Octonion, Octonion]:
    """(a_i, b_i) = (x_{i+1}/lam_i, x_{i+2}/lam_i) on U_i = {lam_i != 0}."""
    if i not in (1, 2, 3):
        raise ValueError("chart index must be 1, 2 or 3")
    lam = as_scalar(lam3[i - 1])
    if not lam:
        raise NotInChart(f"lambda_{i} vanishes")
    inv = lam.inverse()
    return x3[i % 3].scale(inv), x3[(i + 1) % 3].scale(inv)


def chart_transition_oct(a: Octonion, b: Octonion) -> Tuple[Octonion, Octonion]:
    """U_i -> U_{i+1}: (bar(b)^{-1}, b^{-1} * bar(a)); isotropic b raises NonInvertibleError."""
    return bar_inverse(b.bar()), star(bar_inverse(b), a.bar())


def f4_orbit_project(p: Vector27, check: bool = True) -> JordanMatrix:
    """J_C(P)/(s + t), an idempotent of unit trace for P on the orbit of Psi0."""
    if check:
        from .eiii import residual_is_zero
        if not residual_is_zero(p):
            raise ValueError("point does not satisfy the Plücker relations")
    tau = trace_coordinate(p)
    if not tau:
        raise StratumAtInfinity("s + t = 0: point lies on the stratum at infinity")
    return j_map_complex(p).scale(tau.inverse())


__all__ += ["NonInvertibleError"]
