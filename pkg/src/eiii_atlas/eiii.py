"""Plücker relations of EIII in CP^26 and their solutions on four kinds of chart.

A point is a Vector27 (v, psi, s).  The relations are d(P, P, -) = 0, which
split into a vector, a spinor and a scalar block.  The charts solve them on
{s != 0}, {t+ != 0}, {t- != 0} (t± = sqrt2 (v9 ± i v10)), and on the locus
v = s = 0 through a reference pure spinor psi0 with <psi0, psi> != 0.

For the t± charts the D=10 spinor is split along the last tensor factor:
xi = psi[0::2] in Delta+ of Cl(8), eta = psi[1::2] in Delta- of Cl(8).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .clifford import Blade, Spinor, build_gamma, bilinear_vector, charge_conjugate, \
    grade_masks, indices_of, mask_of, pair_bilinear, reorder_sign, vector_act
from .liealg import LieElement
from .rep27 import PSI0, Vector27, act27
from .rng import Rng
from .scalar import ExtScalar, HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, as_scalar

__all__ = ["ChartPoint", "PureSpinorFrame", "NotInChart", "TypeConstraintWarning",
           "plucker_residual", "residual_is_zero", "chart_s", "chart_tpm", "rotate_frame",
           "blade_rotation", "rotate_into_chart", "is_pure", "pure_frame", "standard_frame",
           "pure_decompose", "chart_xinfty", "chart_transition", "assemble", "orbit_sample",
           "gr24_plucker", "gr24_relation", "proportional", "t_plus", "t_minus",
           "split_8_2", "join_8_2", "omega_contract", "project_types",
           "reconstruct", "exp_apply"]


class NotInChart(ValueError):
    """The coordinate that defines the requested chart vanishes."""


class TypeConstraintWarning(UserWarning):
    """An input tensor was projected onto its required J-type."""


_UNIT8 = Blade.unit(8)


def _dot(a, b) -> ExtScalar:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


# residual -----------------------------------------------------------------

def plucker_residual(p: Vector27) -> List[ExtScalar]:
    """[2 v s - (1/sqrt2)(psi e^i psi) e^i] + [v psi] + [v.v], 10 + 16 + 1 values."""
    bv = bilinear_vector(p.psi, p.psi)
    first = [a * p.s * 2 - b * INV_SQRT2 for a, b in zip(p.v, bv)]
    second = vector_act(p.v, p.psi).chiral("-")
    return first + second + [_dot(p.v, p.v)]


def residual_is_zero(p: Vector27) -> bool:
    return not any(plucker_residual(p))


def proportional(a: Sequence[ExtScalar], b: Sequence[ExtScalar]) -> bool:
    """True iff every 2x2 minor of the stacked rows vanishes."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ValueError("length mismatch")
    pivot = next((k for k, x in enumerate(a) if x), None)
    if pivot is None:
        return True
    return all(a[pivot] * y == x * b[pivot] for x, y in zip(a, b))


# 8 + 2 split ----------------------------------------------------------------

def split_8_2(psi: Spinor) -> Tuple[Spinor, Spinor]:
    c = psi.coeffs
    return Spinor(4, tuple(c[0::2]), "+"), Spinor(4, tuple(c[1::2]), "-")


def join_8_2(xi: Spinor, eta: Spinor) -> Spinor:
    c = [ZERO] * 32
    c[0::2] = xi.coeffs
    c[1::2] = eta.coeffs
    return Spinor(5, tuple(c), "+")


def t_plus(v: Sequence[ExtScalar]) -> ExtScalar:
    return (v[8] + I * v[9]) * SQRT2


def t_minus(v: Sequence[ExtScalar]) -> ExtScalar:
    return (v[8] - I * v[9]) * SQRT2


def _v_from_t(u8, tp, tm) -> list:
    v9 = (tp + tm) * INV_SQRT2 * HALF
    v10 = (tp - tm) * INV_SQRT2 * HALF * (-I)
    return list(u8) + [v9, v10]


# affine charts --------------------------------------------------------------

def chart_s(psi: Spinor, s) -> Vector27:
    s = as_scalar(s)
    if not s:
        raise NotInChart("s must be nonzero")
    bv = bilinear_vector(psi, psi)
    c = (s * 2 * SQRT2).inverse()
    return Vector27([b * c for b in bv], psi, s)


def chart_tpm(side: str, tcoord, spin8: Spinor, u8: Sequence) -> Vector27:
    """Solve the relations on {t+ != 0} (spin8 = eta) or {t- != 0} (spin8 = xi)."""
    t = as_scalar(tcoord)
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    if not t:
        raise NotInChart("tcoord must be nonzero")
    u8 = [as_scalar(c) for c in u8]
    if len(u8) != 8:
        raise ValueError("u8 must have 8 components")
    tinv = t.inverse()
    uu = _dot(u8, u8)
    if side == "plus":
        eta = Spinor(4, spin8.coeffs, "-")
        xi = Spinor(4, vector_act(u8, eta).coeffs, "+").scale(-SQRT2 * tinv)
        s = -pair_bilinear(eta, _UNIT8, eta) * tinv
        other = uu * tinv * -2
        v = _v_from_t(u8, t, other)
    else:
        xi = Spinor(4, spin8.coeffs, "+")
        eta = Spinor(4, vector_act(u8, xi).coeffs, "-").scale(SQRT2 * tinv)
        s = pair_bilinear(xi, _UNIT8, xi) * tinv
        other = uu * tinv * -2
        v = _v_from_t(u8, other, t)
    return Vector27(v, join_8_2(xi, eta), s)


# Spin(10) blade rotations ---------------------------------------------------

def blade_rotation(p: int, q: int, m, point: Vector27, norm=None) -> Vector27:
    """Apply R = (1 + m e^p e^q)/sqrt(1 + m^2) to a 27-vector.

    v_p -> c v_p + s v_q, v_q -> -s v_p + c v_q with c = (1-m^2)/(1+m^2),
    s = 2m/(1+m^2).  `norm` is sqrt(1+m^2) when the caller knows it exactly.
    """
    if not (1 <= p <= 10 and 1 <= q <= 10) or p == q:
        raise ValueError("rotation plane needs two distinct indices in 1..10")
    m = as_scalar(m)
    d = ONE + m * m
    if norm is None:
        if m * m != ONE:
            raise ValueError("pass norm = sqrt(1 + m^2) for m other than ±1")
        norm = SQRT2
    norm = as_scalar(norm)
    if norm * norm != d:
        raise ValueError("norm is not sqrt(1 + m^2)")
    dinv = d.inverse()
    c = (ONE - m * m) * dinv
    sn = m * 2 * dinv
    v = list(point.v)
    vp, vq = v[p - 1], v[q - 1]
    v[p - 1] = c * vp + sn * vq
    v[q - 1] = c * vq - sn * vp
    rep = build_gamma(5)
    rot = rep.gen(p) @ rep.gen(q)
    img = rot.apply(point.psi.coeffs)
    ninv = norm.inverse()
    psi = Spinor(5, tuple((a + b * m) * ninv for a, b in zip(point.psi.coeffs, img)), "+")
    return Vector27(v, psi, point.s)


def rotate_frame(a: int, point: Vector27) -> Vector27:
    """Rotate by (1 + e^a e^10)/sqrt2, which sends e^a to -e^10 and e^10 to e^a."""
    if not isinstance(a, int) or not 1 <= a <= 9:
        raise ValueError("rotation index must be in 1..9")
    return blade_rotation(a, 10, ONE, point, SQRT2)


def rotate_into_chart(point: Vector27) -> Optional[Tuple[int, Vector27]]:
    """Smallest a in 1..9 whose rotated point has t+ or t- nonzero; None if there is none."""
    for a in range(1, 10):
        q = rotate_frame(a, point)
        if t_plus(q.v) or t_minus(q.v):
            return a, q
    return None


# pure spinors -----------------------------------------------------------------

def _herm(phi: Sequence[ExtScalar], psi: Sequence[ExtScalar]) -> ExtScalar:
    acc = ZERO
    for a, b in zip(phi, psi):
        if a and b:
            acc = acc + a.conjugate() * b
    return acc


def _blade_apply(mask: int, coeffs) -> list:
    return build_gamma(5).blade(mask).apply(coeffs)


def is_pure(psi: Spinor) -> bool:
    return not any(bilinear_vector(psi, psi))


def _pf4(k, p, q, r, s) -> ExtScalar:
    return k[p][q] * k[r][s] - k[p][r] * k[q][s] + k[p][s] * k[q][r]


def omega_contract(omega_bar: Dict[int, ExtScalar], k) -> List[ExtScalar]:
    """w^i = Omegabar^{ipqrs} K^{pq} K^{rs} summed over all ordered p, q, r, s."""
    out = [ZERO] * 10
    for mask, c in omega_bar.items():
        if not c:
            continue
        idx = indices_of(mask)
        for i in idx:
            rest = [j for j in idx if j != i]
            pf = _pf4(k, *(j - 1 for j in rest))
            if not pf:
                continue
            sign = -8 if reorder_sign(1 << (i - 1), mask_of(rest)) else 8
            out[i - 1] = out[i - 1] + c * pf * sign
    return out


@dataclass(frozen=True)
class PureSpinorFrame:
    """Complex structure J and the forms Omega, Omegabar of a pure spinor.

    Omega and Omegabar are stored by ascending index set (bitmask over 1..10);
    the full antisymmetric array is recovered with `component`.
    """
    psi0: Spinor
    J: tuple
    Omega: Dict[int, ExtScalar] = field(compare=False)
    OmegaBar: Dict[int, ExtScalar] = field(compare=False)
    cpsi0: Spinor = field(compare=False, default=None)

    @staticmethod
    def component(form: Dict[int, ExtScalar], indices: Sequence[int]) -> ExtScalar:
        if len(set(indices)) != len(indices):
            return ZERO
        rest = list(indices)
        sign = 1
        for k in range(len(rest)):
            for l in range(len(rest) - 1 - k):
                if rest[l] > rest[l + 1]:
                    rest[l], rest[l + 1] = rest[l + 1], rest[l]
                    sign = -sign
        c = form.get(mask_of(rest), ZERO)
        return c if sign > 0 else -c

    def omega_pairing(self) -> ExtScalar:
        """(1/5!) Omega^{i1..i5} Omegabar^{i1..i5}."""
        return sum((c * self.OmegaBar.get(m, ZERO) for m, c in self.Omega.items()), ZERO)

    def apply_J(self, v: Sequence[ExtScalar]) -> list:
        return [_dot(row, v) for row in self.J]

    def projector(self, kind: str) -> list:
        """P01 = (1 + iJ)/2 onto Jv = -iv, P10 = (1 - iJ)/2 onto Jv = iv."""
        sgn = I if kind == "01" else -I
        return [[(HALF if r == c else ZERO) + self.J[r][c] * sgn * HALF for c in range(10)]
                for r in range(10)]

    def four_form(self) -> Dict[int, ExtScalar]:
        """<psi0 e^{ijkl} psi0> by ascending index set."""
        return {m: _herm(self.psi0.coeffs, _blade_apply(m, self.psi0.coeffs))
                for m in grade_masks(10, 4)}

    def j_wedge_j(self) -> Dict[int, ExtScalar]:
        """Components of J ^ J with J = sum_{i<j} J^{ij} e^i ^ e^j."""
        j = self.J
        return {m: _pf4(j, *(i - 1 for i in indices_of(m))) * 2 for m in grade_masks(10, 4)}


def pure_frame(psi0: Spinor) -> PureSpinorFrame:
    if psi0.dim_half != 5 or psi0.chirality != "+":
        raise ValueError("a pure spinor frame needs a D=10 Delta+ spinor")
    if not is_pure(psi0):
        raise ValueError("spinor is not pure")
    if _herm(psi0.coeffs, psi0.coeffs) != ONE:
        raise ValueError("spinor is not normalised")
    c = psi0.coeffs
    jm = [[ZERO] * 10 for _ in range(10)]
    for i, k in combinations(range(10), 2):
        val = _herm(c, _blade_apply((1 << i) | (1 << k), c)) * I
        jm[i][k] = val
        jm[k][i] = -val
    cpsi = charge_conjugate(psi0)
    norm = SQRT2 * ExtScalar(Fraction(1, 8))
    omega, omega_bar = {}, {}
    for m in grade_masks(10, 5):
        w = _herm(c, _blade_apply(m, cpsi.coeffs)) * norm
        if w:
            omega[m] = w
        wb = pair_bilinear(psi0, Blade(m, ONE, 10), psi0) * norm
        if wb:
            omega_bar[m] = wb
    return PureSpinorFrame(psi0, tuple(tuple(r) for r in jm), omega, omega_bar, cpsi)


@lru_cache(maxsize=None)
def standard_frame() -> PureSpinorFrame:
    """Frame of the basis spinor killed by every e^{2k-1} - i e^{2k}."""
    return pure_frame(Spinor.basis(5, 0))


def pure_decompose(psi: Spinor, frame: PureSpinorFrame):
    """(f, x, K) with f = <psi0 psi>, x^i = (psi0 e^i psi), K = Ktilde + i f J."""
    c0 = frame.psi0.coeffs
    f = _herm(c0, psi.coeffs)
    x = bilinear_vector(frame.psi0, psi)
    k = [[ZERO] * 10 for _ in range(10)]
    fi = f * I
    for i, j in combinations(range(10), 2):
        val = _herm(c0, _blade_apply((1 << i) | (1 << j), psi.coeffs)) + fi * frame.J[i][j]
        k[i][j] = val
        k[j][i] = -val
    return f, x, k


def _two_form_act(k, coeffs) -> list:
    """K^{ij} e^i e^j psi summed over ordered pairs."""
    out = [ZERO] * 32
    for i, j in combinations(range(10), 2):
        if k[i][j]:
            img = _blade_apply((1 << i) | (1 << j), coeffs)
            c = k[i][j] * 2
            out = [a + b * c for a, b in zip(out, img)]
    return out


def reconstruct(frame: PureSpinorFrame, f, x, k) -> Spinor:
    """psi0 f - (1/8) K psi0 + (1/2) x C psi0*."""
    c0 = frame.psi0.coeffs
    kp = _two_form_act(k, c0)
    xc = vector_act(x, frame.cpsi0).coeffs
    eighth = HALF * HALF * HALF
    out = [a * f - b * eighth + d * HALF for a, b, d in zip(c0, kp, xc)]
    return Spinor(5, tuple(out), "+")


def _matvec(m, v) -> list:
    return [_dot(row, v) for row in m]


def project_types(frame: PureSpinorFrame, k, ubar):
    """Return (K, ubar, projected) with K P10 = 0 and J ubar = -i ubar.

    K is replaced by P10 K P01, which is antisymmetric and kills the +i
    eigenvectors; ubar by P01 ubar.  `projected` reports whether anything moved.
    """
    p01 = frame.projector("01")
    p10 = frame.projector("10")
    projected = False
    if any(_matvec(p10, ubar)):
        ubar = _matvec(p01, ubar)
        projected = True
    if any(any(r) for r in _matmul(k, p10)):
        k = _matmul(_matmul(p10, k), p01)
        projected = True
    return k, ubar, projected


def _matmul(a, b) -> list:
    cols = list(zip(*b))
    return [[_dot(row, col) for col in cols] for row in a]


def chart_xinfty(frame: PureSpinorFrame, f, k, ubar, s, project: bool = False) -> Vector27:
    """Solve the relations on {<psi0, psi> != 0} from (f, K, ubar, s).

    K must kill the +i eigenvectors of J and ubar must satisfy J ubar = -i ubar.
    With project=True inputs are projected onto these types and a
    TypeConstraintWarning is issued; otherwise a violation raises ValueError.
    """
    f, s = as_scalar(f), as_scalar(s)
    if not f:
        raise NotInChart("f must be nonzero")
    k = [[as_scalar(c) for c in row] for row in k]
    ubar = [as_scalar(c) for c in ubar]
    if any(k[i][j] + k[j][i] for i in range(10) for j in range(10)):
        raise ValueError("K must be antisymmetric")
    k2, ubar2, projected = project_types(frame, k, ubar)
    if projected:
        if not project:
            raise ValueError("K or ubar violates its type constraint")
        warnings.warn("K/ubar projected onto their J-types", TypeConstraintWarning, stacklevel=2)
        k, ubar = k2, ubar2
    finv = f.inverse()
    kub = _matvec(k, ubar)
    v = [b - a * finv * HALF for a, b in zip(kub, ubar)]
    w = omega_contract(frame.OmegaBar, k)
    c32 = ExtScalar(Fraction(1, 32))
    vec = [a * s + b * c32 for a, b in zip(ubar, w)]
    tail = vector_act(vec, frame.cpsi0).coeffs
    eighth = HALF * HALF * HALF
    kp = _two_form_act(k, frame.psi0.coeffs)
    coef = INV_SQRT2 * finv
    psi = [a * f - b * eighth + d * coef for a, b, d in zip(frame.psi0.coeffs, kp, tail)]
    return Vector27(v, Spinor(5, tuple(psi), "+"), s)


# chart points and transitions -------------------------------------------------

CHARTS = ("s", "tplus", "tminus", "xinfty", "gr24")


@dataclass
class ChartPoint:
    chart: str
    params: dict
    frame: Optional[PureSpinorFrame] = None

    def __post_init__(self):
        if self.chart not in CHARTS:
            raise ValueError(f"unknown chart {self.chart!r}")

    def to_json(self):
        def enc(x):
            if isinstance(x, ExtScalar):
                return x.to_json()
            if isinstance(x, Spinor):
                return [c.to_json() for c in x.chiral()]
            if isinstance(x, (list, tuple)):
                return [enc(y) for y in x]
            return x
        params = {k: enc(v) for k, v in self.params.items()}
        if self.chart == "xinfty":
            params.setdefault("frame", "standard")
        return {"chart": self.chart, "params": params}

    @classmethod
    def from_json(cls, obj) -> "ChartPoint":
        chart, raw = obj["chart"], obj["params"]
        sc = ExtScalar.from_json

        def spinor(vals, n, sign):
            # {"basis": k} is the k-th chiral basis spinor
            if isinstance(vals, dict):
                vals = [1 if r == vals["basis"] else 0 for r in range(1 << (n - 1))]
            vals = [sc(c) for c in vals]
            if len(vals) == 1 << n:
                allowed = set(build_gamma(n).chiral_index(sign))
                if any(c for r, c in enumerate(vals) if r not in allowed):
                    raise ValueError(f"spinor must have chirality {sign}")
                return Spinor(n, tuple(vals), sign)
            return Spinor.from_chiral(n, sign, vals)

        if chart == "s":
            params = {"psi": spinor(raw["psi"], 5, "+"), "s": sc(raw["s"])}
        elif chart in ("tplus", "tminus"):
            sign = "-" if chart == "tplus" else "+"
            params = {"t": sc(raw["t"]), "spin8": spinor(raw["spin8"], 4, sign),
                      "u8": [sc(c) for c in raw["u8"]]}
        elif chart == "xinfty":
            if raw.get("frame", "standard") != "standard":
                raise ValueError("only the standard reference pure spinor is serialisable")
            params = {"f": sc(raw["f"]), "K": [[sc(c) for c in row] for row in raw["K"]],
                      "ubar": [sc(c) for c in raw["ubar"]], "s": sc(raw["s"])}
        else:
            params = {"g": [[sc(c) for c in row] for row in raw["g"]]}
        return cls(chart, params, standard_frame() if chart == "xinfty" else None)


def assemble(cp: ChartPoint):
    """The Vector27 of a chart point (a list of six minors for gr24)."""
    p = cp.params
    if cp.chart == "s":
        return chart_s(p["psi"], p["s"])
    if cp.chart == "tplus":
        return chart_tpm("plus", p["t"], p["spin8"], p["u8"])
    if cp.chart == "tminus":
        return chart_tpm("minus", p["t"], p["spin8"], p["u8"])
    if cp.chart == "xinfty":
        return chart_xinfty(cp.frame or standard_frame(), p["f"], p["K"], p["ubar"], p["s"])
    return gr24_plucker(p["g"])


def _read_chart(point: Vector27, target: str, frame: Optional[PureSpinorFrame]) -> ChartPoint:
    if target == "s":
        if not point.s:
            raise NotInChart("s vanishes at this point")
        return ChartPoint("s", {"psi": point.psi, "s": point.s})
    if target in ("tplus", "tminus"):
        xi, eta = split_8_2(point.psi)
        t = t_plus(point.v) if target == "tplus" else t_minus(point.v)
        if not t:
            raise NotInChart(f"{target} coordinate vanishes at this point")
        spin8 = eta if target == "tplus" else xi
        return ChartPoint(target, {"t": t, "spin8": spin8, "u8": list(point.v[:8])})
    if target == "xinfty":
        frame = frame or standard_frame()
        f, _, k = pure_decompose(point.psi, frame)
        if not f:
            raise NotInChart("<psi0, psi> vanishes at this point")
        ubar = _matvec(frame.projector("01"), point.v)
        return ChartPoint("xinfty", {"f": f, "K": k, "ubar": ubar, "s": point.s}, frame)
    raise ValueError(f"cannot transition into chart {target!r}")


def chart_transition(cp: ChartPoint, target: str, frame: Optional[PureSpinorFrame] = None) -> ChartPoint:
    """Re-express a chart point in another chart by reading off its free coordinates."""
    if cp.chart == "gr24" or target == "gr24":
        raise ValueError("gr24 points live in P^5, not in CP^26")
    return _read_chart(assemble(cp), target, frame or cp.frame)


# orbit sampling -----------------------------------------------------------------

def exp_apply(z: LieElement, point: Vector27) -> Vector27:
    """exp(z) on a 27-vector for z in Delta+ or Delta- (the series stops at N^2)."""
    n1 = act27(z, point)
    n2 = act27(z, n1)
    if not act27(z, n2).is_zero():
        raise ArithmeticError("exp_apply needs a nilpotent element of order 3")
    return point + n1 + n2.scale(HALF)


def _pythagorean(rng: Rng) -> Tuple[ExtScalar, ExtScalar]:
    """(m, sqrt(1+m^2)) with m = b/a from a Pythagorean triple, or m = ±1."""
    k = rng.below(4)
    if k == 0:
        m = ONE if rng.below(2) else -ONE
        return m, SQRT2
    p = 1 + rng.below(4)
    q = p + 1 + rng.below(3)
    a, b, c = q * q - p * p, 2 * p * q, q * q + p * p
    if rng.below(2):
        a, b = b, a
    sign = 1 if rng.below(2) else -1
    return ExtScalar(Fraction(sign * b, a)), ExtScalar(Fraction(c, a))


def _sparse_spinor(rng: Rng, sign: str) -> Spinor:
    vals = [ZERO] * 16
    for _ in range(1 + rng.below(3)):
        vals[rng.below(16)] = ExtScalar(rng.below(5) - 2, rng.below(3) - 1) or ONE
    return Spinor.from_chiral(5, sign, vals)


def orbit_sample(seed: int, word_length: int, letters: str = "xer") -> Vector27:
    """Apply a random word in exp(Delta+), exp(Delta-) and blade rotations to Psi0.

    `letters` restricts the alphabet: x = exp(xi), e = exp(eta), r = rotation.
    """
    if word_length < 1:
        raise ValueError("word_length must be at least 1")
    if not letters or set(letters) - set("xer"):
        raise ValueError("letters must be drawn from 'x', 'e', 'r'")
    rng = Rng(seed)
    point = PSI0
    for _ in range(word_length):
        kind = letters[rng.below(len(letters))]
        if kind == "x":
            point = exp_apply(LieElement.from_parts("e6", plus=_sparse_spinor(rng, "+")), point)
        elif kind == "e":
            point = exp_apply(LieElement.from_parts("e6", minus=_sparse_spinor(rng, "-")), point)
        else:
            p = 1 + rng.below(10)
            q = 1 + rng.below(9)
            q = q + 1 if q >= p else q
            m, norm = _pythagorean(rng)
            point = blade_rotation(p, q, m, point, norm)
    return point


# Gr(2,4) ----------------------------------------------------------------------------

GR24_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def gr24_plucker(g) -> List[ExtScalar]:
    """[z12, z13, z14, z23, z24, z34], minors of the first two columns."""
    g = [[as_scalar(c) for c in row] for row in g]
    if len(g) != 4 or any(len(r) != 4 for r in g):
        raise ValueError("g must be 4x4")
    return [g[i - 1][0] * g[j - 1][1] - g[j - 1][0] * g[i - 1][1] for i, j in GR24_PAIRS]


def gr24_relation(z: Sequence[ExtScalar]) -> ExtScalar:
    z12, z13, z14, z23, z24, z34 = z
    return z12 * z34 - z13 * z24 + z14 * z23
