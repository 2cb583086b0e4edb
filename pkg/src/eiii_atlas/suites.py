"""Invariant suites run by `eiii-atlas verify`, one function per module.

Each suite takes (seed, trials, jacobi) and returns a list of Checks.  Counts
of random instances scale with `trials`; the fixed-size sweeps (all basis
elements, all table entries) do not.
"""
from __future__ import annotations

import warnings
from typing import Callable, Dict, List

from .clifford import (Blade, CliffordElement, Spinor, blade_matrix, blade_mul, build_gamma,
                       clifford_apply, pair_bilinear, pair_hermitian,
                       vector_act)
from .report import Check
from .rng import Rng
from .scalar import HALF, I, ONE, ZERO, ExtScalar

SUITES = ("clifford", "fierz", "octonion", "liealg", "rep27", "eiii", "albert")


class _Tally:
    """Collects the first failing trial per check name."""

    def __init__(self, seed: int):
        self.seed = seed
        self.order: List[str] = []
        self.trials: Dict[str, int] = {}
        self.fail: Dict[str, dict] = {}

    def record(self, name: str, ok: bool, trial: int = 0, **extra):
        if name not in self.trials:
            self.order.append(name)
            self.trials[name] = 0
        self.trials[name] += 1
        if not ok and name not in self.fail:
            self.fail[name] = {"seed": self.seed, "trial": trial, **extra}

    def checks(self) -> List[Check]:
        return [Check(n, n not in self.fail, self.trials[n], witness=self.fail.get(n))
                for n in self.order]


# clifford ---------------------------------------------------------------------

def _random_blade(rng: Rng, dim: int) -> Blade:
    return Blade(rng.below(1 << dim), rng.nonzero(rng.gaussian), dim)


def _random_element(rng: Rng, dim: int, terms: int = 3) -> CliffordElement:
    out = CliffordElement(dim)
    for _ in range(terms):
        out = out + CliffordElement.from_blade(_random_blade(rng, dim))
    return out


def _random_chiral(rng: Rng, n: int, sign: str) -> Spinor:
    return Spinor.from_chiral(n, sign, rng.scalars(1 << (n - 1)))


def clifford_checks(seed: int = 0, trials: int = 50, pairs: int = None, blades: int = None,
                    dims=(8, 10, 16)) -> List[Check]:
    pairs = 20 * trials if pairs is None else pairs
    blades = 4 * trials if blades is None else blades
    rng = Rng(seed)
    tally = _Tally(seed)
    for dim in dims:
        rep = build_gamma(dim // 2)
        ident = rep.gen(1) @ rep.gen(1)
        tag = f"clifford.D{dim}"
        for i in range(1, dim + 1):
            gi = rep.gen(i)
            tally.record(f"{tag}.generator_hermitian", gi.adjoint() == gi, i)
            tally.record(f"{tag}.chirality_anticommutes",
                         rep.chirality @ gi == -(gi @ rep.chirality), i)
            for j in range(1, dim + 1):
                gj = rep.gen(j)
                ab, ba = gi @ gj, gj @ gi
                if i == j:
                    ok = ab == ident
                else:
                    ok = ab == -ba
                tally.record(f"{tag}.anticommutator", ok, (i, j))
        tally.record(f"{tag}.chirality_squares_to_one", rep.chirality @ rep.chirality == ident)
        for t in range(pairs):
            x, y = _random_blade(rng, dim), _random_blade(rng, dim)
            ok = blade_matrix(x, rep) @ blade_matrix(y, rep) == blade_matrix(blade_mul(x, y), rep)
            tally.record(f"{tag}.blade_matrix_homomorphism", ok, t)
        for t in range(max(1, trials // 5)):
            x, y = _random_element(rng, dim), _random_element(rng, dim)
            vec = rng.scalars(rep.size)
            ok = clifford_apply(x * y, vec, rep) == clifford_apply(x, clifford_apply(y, vec, rep), rep)
            tally.record(f"{tag}.element_action_multiplicative", ok, t)
        cinv, c = rep.charge_conj_inv, rep.charge_conj
        for t in range(blades):
            x = _random_blade(rng, dim)
            ok = cinv @ blade_matrix(x, rep).transpose() @ c == blade_matrix(x.reverse(), rep)
            tally.record(f"{tag}.charge_conj_transpose_is_reversal", ok, t)
        _bilinear_symmetry(rng, tally, dim, trials)
    return tally.checks()


def _bilinear_symmetry(rng: Rng, tally: _Tally, dim: int, trials: int):
    """(a e^I b) = eps (-1)^{k(k-1)/2} (b e^I a) with C^T = eps C."""
    rep = build_gamma(dim // 2)
    c = rep.charge_conj
    eps = ONE if c.transpose() == c else -ONE
    grades = (1, 3, 5) if dim == 10 else tuple(range(0, dim // 2 + 1, 2))
    for k in grades:
        sign = eps if (k * (k - 1) // 2) % 2 == 0 else -eps
        for t in range(max(1, trials // 10)):
            a, b = _random_chiral(rng, dim // 2, "+"), _random_chiral(rng, dim // 2, "+")
            blade = Blade(_random_grade_mask(rng, dim, k), ONE, dim)
            ok = pair_bilinear(a, blade, b) == pair_bilinear(b, blade, a) * sign
            tally.record(f"clifford.D{dim}.bilinear_symmetry_grade{k}", ok, t)


def _random_grade_mask(rng: Rng, dim: int, k: int) -> int:
    idx = list(range(dim))
    mask = 0
    for _ in range(k):
        j = idx.pop(rng.below(len(idx)))
        mask |= 1 << j
    return mask


def clifford_suite(seed, trials, jacobi) -> List[Check]:
    return clifford_checks(seed, trials)


# fierz ------------------------------------------------------------------------

def fierz_suite(seed, trials, jacobi) -> List[Check]:
    from .fierz import sectors_for, verify_derived, verify_table
    out = []
    for dim in (8, 10, 16):
        for sector in sectors_for(dim):
            out.extend(verify_table(dim, sector, trials, seed))
        out.extend(verify_derived(dim, trials, seed))
    return out


# octonion ---------------------------------------------------------------------

def random_octonion(rng: Rng, kind: str = "real"):
    from .octonion import Octonion
    return Octonion(rng.scalars(8, kind))


def octonion_checks(seed: int = 0, trials: int = 100) -> List[Check]:
    from .octonion import (PAPER_TABLE, Octonion, associator, dictionary_check, g2_basis,
                           g2_generators, so_act_octonion, star, star_table)
    from .liealg import ClosureError, bracket
    rng = Rng(seed)
    tally = _Tally(seed)
    table = star_table()
    for a in range(8):
        for b in range(8):
            tally.record("octonion.table_matches_reference", table[a][b] == PAPER_TABLE[a][b], (a, b))
    e = [Octonion.unit(k) for k in range(8)]
    tally.record("octonion.anchor_e2e3", star(e[2], e[3]) == e[1])
    tally.record("octonion.anchor_e3e7", star(e[3], e[7]) == -e[4])
    gens = g2_generators()
    for t in range(trials):
        u, v = random_octonion(rng), random_octonion(rng)
        tally.record("octonion.alternative_left", associator(u, u, v).is_zero(), t)
        tally.record("octonion.alternative_right", associator(u, v, v).is_zero(), t)
        tally.record("octonion.u_ubar_is_norm", star(u, u.bar()) == Octonion.real(u.dot(u)), t)
        lhs = star(u, v) + star(v, u)
        rhs = (v.scale(u[0]) + u.scale(v[0]) - Octonion.real(u.dot(v))).scale(2)
        tally.record("octonion.anticommutator_law", lhs == rhs, t)
        lhs = star(u, v.bar()) + star(v, u.bar())
        tally.record("octonion.bar_polarisation_law", lhs == Octonion.real(u.dot(v) * 2), t)
        tally.record("octonion.bar_reverses_product", star(u, v).bar() == star(v.bar(), u.bar()), t)
        if t < max(1, trials // 10):
            for k, g in enumerate(gens):
                lhs = so_act_octonion(g, star(u, v))
                rhs = star(so_act_octonion(g, u), v) + star(u, so_act_octonion(g, v))
                tally.record("octonion.g2_derivation", lhs == rhs, (t, k))
    g2 = g2_basis()
    tally.record("octonion.g2_dimension", len(g2) == 14)
    closed = True
    try:
        for i in range(len(g2)):
            for j in range(i + 1, len(g2)):
                bracket(g2[i], g2[j])
    except ClosureError:
        closed = False
    tally.record("octonion.g2_bracket_closed", closed)
    return tally.checks() + dictionary_check(max(1, trials // 5), seed)


def octonion_suite(seed, trials, jacobi) -> List[Check]:
    return octonion_checks(seed, trials)


# liealg -----------------------------------------------------------------------

def liealg_checks(seed: int = 0, trials: int = 50, jacobi: str = "exhaustive",
                  budget: int = 100_000) -> List[Check]:
    from . import liealg as L
    from .clifford import Spinor as Sp
    rng = Rng(seed)
    tally = _Tally(seed)
    expected = {"g2": 14, "f4": 52, "e6": 78, "e8": 248}
    out = []
    for alg in L.ALGEBRAS:
        sc = L.build_structure_constants(alg)
        tally.record(f"liealg.{alg}.dimension", sc.dim == expected[alg])
        anti = all(sc.get(j, k) == {m: -v for m, v in sc.get(k, j).items()}
                   for j in range(sc.dim) for k in range(j, sc.dim))
        tally.record(f"liealg.{alg}.antisymmetric", anti)
        out.append(L.jacobi_check(alg, jacobi, budget=budget, seed=seed))
    f4 = L.basis("f4")
    closed = all(L.f4_member(L.bracket(f4[i], f4[j], check_closure=False))
                 for i in range(len(f4)) for j in range(i + 1, len(f4)))
    tally.record("liealg.f4.constraint_bracket_closed", closed)
    e6_img = [L.embed_e6(b) for b in L.basis("e6")]
    f4_img = [L.embed_e6(b) for b in f4]
    cen_su3 = L.centralizer(L.su3_in_e8(), "e8")
    tally.record("liealg.centralizer_su3_dimension", len(cen_su3) == 78)
    tally.record("liealg.centralizer_su3_is_e6", L.span_equal(cen_su3, e6_img))
    cen_g2 = L.centralizer(L.g2_in_e8(), "e8")
    tally.record("liealg.centralizer_g2_dimension", len(cen_g2) == 52)
    tally.record("liealg.centralizer_g2_is_f4", L.span_equal(cen_g2, f4_img))
    for t in range(max(1, trials // 10)):
        x, y = L.LieElement("e6", rng.scalars(78)), L.LieElement("e6", rng.scalars(78))
        ok = L.embed_e6(L.bracket(x, y)) == L.bracket(L.embed_e6(x), L.embed_e6(y))
        tally.record("liealg.e6_embedding_homomorphism", ok, t)
        z = L.compact_e6({pq: rng.real() for pq in L.so_pairs(10)},
                         Sp.from_chiral(5, "+", rng.scalars(16)), rng.real())
        inv = L.killing(L.bracket(z, x), y) + L.killing(x, L.bracket(z, y))
        tally.record("liealg.killing_invariant", inv.is_zero(), t)
    return tally.checks() + out


def liealg_suite(seed, trials, jacobi) -> List[Check]:
    return liealg_checks(seed, trials, jacobi)


# rep27 ------------------------------------------------------------------------

def random_vector27(rng: Rng, kind: str = "gaussian"):
    from .rep27 import Vector27
    return Vector27(rng.scalars(10, kind), Spinor.from_chiral(5, "+", rng.scalars(16, kind)),
                    getattr(rng, kind)())


def random_covector27(rng: Rng):
    from .rep27 import Covector27
    return Covector27(rng.scalars(10), Spinor.from_chiral(5, "-", rng.scalars(16)), rng.gaussian())


def rep27_checks(seed: int = 0, trials: int = 20) -> List[Check]:
    from . import liealg as L
    from . import rep27 as R
    rng = Rng(seed)
    tally = _Tally(seed)
    e6 = L.basis("e6")
    for t in range(trials):
        p1, p2, p3 = random_vector27(rng), random_vector27(rng), random_vector27(rng)
        for k, x in enumerate(e6):
            tot = (R.d_cubic(R.act27(x, p1), p2, p3) + R.d_cubic(p1, R.act27(x, p2), p3)
                   + R.d_cubic(p1, p2, R.act27(x, p3)))
            tally.record("rep27.d_invariant_under_e6_basis", tot.is_zero(), (t, k))
    for t in range(max(1, trials // 4)):
        x = L.LieElement("e6", rng.scalars(78))
        y = L.LieElement("e6", rng.scalars(78))
        p1, p2, p3, p4 = (random_vector27(rng) for _ in range(4))
        f = random_covector27(rng)
        lhs = R.act27(L.bracket(x, y), p1)
        rhs = R.act27(x, R.act27(y, p1)) - R.act27(y, R.act27(x, p1))
        tally.record("rep27.action_is_representation", lhs == rhs, t)
        dual = R.pairing(R.act27_dual(x, f), p1) + R.pairing(f, R.act27(x, p1))
        tally.record("rep27.pairing_invariant", dual.is_zero(), t)
        d = R.d_cubic(p1, p2, p3)
        tally.record("rep27.d_symmetric", d == R.d_cubic(p2, p1, p3) == R.d_cubic(p1, p3, p2), t)
        tally.record("rep27.diamond_represents_d", R.pairing(R.diamond27(p1, p2), p3) == d, t)
        tot = R.Covector27.zero()
        for a, b, c in ((p1, p2, p3), (p2, p3, p1), (p3, p1, p2)):
            tot = tot + R.diamond27(a, R.diamond_dual(R.diamond27(b, c), f)) \
                - R.diamond27(a, b).scale(R.pairing(f, c))
        tally.record("rep27.second_diamond_identity", tot == f.scale(d), t)
        tot = R.Vector27.zero()
        for a, b, c in ((p1, p2, p3), (p2, p3, p1), (p3, p1, p2)):
            tot = tot + R.diamond_dual(R.diamond27(a, b), R.diamond27(c, p4)) \
                - c.scale(R.d_cubic(a, b, p4))
        tally.record("rep27.first_diamond_identity", tot == p4.scale(d), t)
        tot = ZERO
        for a, b, c in ((p1, p2, p4), (p2, p4, p1), (p4, p1, p2)):
            tot = tot + R.d_cubic(R.act27(x, a), b, c)
        tally.record("rep27.d_invariant_random_element", tot.is_zero(), t)
        r = R.act27(L.rho(), p1)
        want = R.Vector27([v * I * 2 for v in p1.v], p1.psi.scale(-I), p1.s * I * -4)
        tally.record("rep27.rho_weights", r == want, t)
        rd = R.act27_dual(L.rho(), f)
        want = R.Covector27([v * I * -2 for v in f.u], f.phi.scale(I), f.t * I * 4)
        tally.record("rep27.rho_weights_dual", rd == want, t)
    tally.record("rep27.psi0_diamond_psi0_zero", R.diamond27(R.PSI0, R.PSI0).is_zero())
    tally.record("rep27.phi0_dual_cubic_zero", R.diamond_dual(R.PHI0, R.PHI0).is_zero())
    stab = R.stabilizer_psi0()
    so10 = [x for x in e6 if _is_so_part(x)]
    tally.record("rep27.stabilizer_psi0_dimension", len(stab) == 45)
    tally.record("rep27.stabilizer_psi0_is_so10", L.span_equal(stab, so10))
    return tally.checks()


def _is_so_part(x) -> bool:
    return not any(x.coords[45:])


def rep27_suite(seed, trials, jacobi) -> List[Check]:
    return rep27_checks(seed, max(1, trials // 2))


# eiii -------------------------------------------------------------------------

def random_antisym(rng: Rng, n: int = 10):
    k = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.gaussian()
            k[i][j], k[j][i] = c, -c
    return k


def admissible_xinfty(rng: Rng, frame):
    """Random (f, K, ubar, s) with K of type (2,0) and ubar of type (0,1)."""
    from .eiii import project_types
    k, ubar, _ = project_types(frame, random_antisym(rng), rng.scalars(10))
    return rng.nonzero(), k, ubar, rng.gaussian()


def eiii_checks(seed: int = 0, trials: int = 100, samples: int = None) -> List[Check]:
    from . import eiii as E
    from .linalg import dense_rank
    samples = trials if samples is None else samples
    rng = Rng(seed)
    tally = _Tally(seed)
    frame = E.standard_frame()
    for t in range(trials):
        p = E.chart_s(_random_chiral(rng, 5, "+"), rng.nonzero())
        tally.record("eiii.chart_s_residual_zero", E.residual_is_zero(p), t)
        for side, spin in (("plus", "-"), ("minus", "+")):
            p = E.chart_tpm(side, rng.nonzero(), _random_chiral(rng, 4, spin), rng.scalars(8))
            tally.record(f"eiii.chart_t{side}_residual_zero", E.residual_is_zero(p), t)
        f, k, ubar, s = admissible_xinfty(rng, frame)
        p = E.chart_xinfty(frame, f, k, ubar, s)
        tally.record("eiii.chart_xinfty_residual_zero", E.residual_is_zero(p), t)
        psi = _random_chiral(rng, 5, "+")
        f, x, k = E.pure_decompose(psi, frame)
        tally.record("eiii.pure_spinor_reconstruction", E.reconstruct(frame, f, x, k) == psi, t)
    _frame_checks(tally, frame, dense_rank)
    for t in range(max(1, trials // 10)):
        cp = E.ChartPoint("s", {"psi": _random_chiral(rng, 5, "+"), "s": rng.nonzero()})
        pt = E.assemble(cp)
        ok = True
        for target in ("tplus", "tminus", "xinfty"):
            try:
                other = E.chart_transition(cp, target, frame)
            except E.NotInChart:
                continue
            back = E.chart_transition(other, "s", frame)
            ok &= E.proportional(E.assemble(other).flat(), pt.flat())
            ok &= E.proportional(E.assemble(back).flat(), pt.flat())
        tally.record("eiii.chart_transitions_round_trip", ok, t)
        _equivariance(rng, tally, t)
    for t in range(samples):
        p = E.orbit_sample(seed * 1000 + t, 1 + t % 5)
        tally.record("eiii.orbit_sample_residual_zero", E.residual_is_zero(p), t)
        covered = bool(p.s) or bool(E.t_plus(p.v)) or bool(E.t_minus(p.v)) \
            or E.rotate_into_chart(p) is not None or bool(E.pure_decompose(p.psi, frame)[0])
        tally.record("eiii.chart_cover", covered, t)
    for t in range(max(1, trials // 10)):
        f, k, ubar, _ = admissible_xinfty(rng, frame)
        pure = E.chart_xinfty(frame, f, k, [ZERO] * 10, ZERO)
        tally.record("eiii.xinfty_point_has_pure_spinor",
                     not any(pure.v) and not pure.s and E.is_pure(pure.psi), t)
        p = E.chart_s(_random_chiral(rng, 5, "+"), rng.nonzero())
        tally.record("eiii.generic_spinor_not_pure", not E.is_pure(p.psi), t)
    for t in range(trials):
        g = [rng.scalars(4, "real") for _ in range(4)]
        tally.record("eiii.gr24_relation_zero", not E.gr24_relation(E.gr24_plucker(g)), t)
    _chart_dimensions(tally, frame, dense_rank)
    return tally.checks()


def _frame_checks(tally: _Tally, frame, dense_rank):
    j = frame.J
    jj = [[sum((j[a][c] * j[c][b] for c in range(10)), ZERO) for b in range(10)] for a in range(10)]
    tally.record("eiii.frame_J_squared_minus_one",
                 all(jj[a][b] == (-ONE if a == b else ZERO) for a in range(10) for b in range(10)))
    shifted = [[j[a][b] - (I if a == b else ZERO) for b in range(10)] for a in range(10)]
    tally.record("eiii.frame_J_minus_i_rank_5", dense_rank(shifted) == 5)
    tally.record("eiii.frame_omega_pairing_one", frame.omega_pairing() == ONE)
    four, jwj = frame.four_form(), frame.j_wedge_j()
    tally.record("eiii.frame_four_form_is_minus_half_JJ",
                 set(four) | set(jwj) == set(jwj) | set(four)
                 and all(four.get(m, ZERO) == -jwj.get(m, ZERO) * HALF for m in set(four) | set(jwj)))
    tally.record("eiii.frame_psi0_unit_norm", pair_hermitian(frame.psi0, frame.psi0) == ONE)


def _equivariance(rng: Rng, tally: _Tally, t: int):
    """Residual of a rotated point is the rotated residual (vector, Delta-, scalar blocks)."""
    from . import eiii as E
    rep = build_gamma(5)
    p = random_vector27(rng)
    a = 1 + rng.below(9)
    q = E.rotate_frame(a, p)
    r, rq = E.plucker_residual(p), E.plucker_residual(q)
    vec = list(r[:10])
    va, vb = vec[a - 1], vec[9]
    vec[a - 1], vec[9] = vb, -va
    full = vector_act(p.v, p.psi).coeffs
    img = (rep.gen(a) @ rep.gen(10)).apply(full)
    from .scalar import INV_SQRT2
    rot = Spinor(5, tuple((x + y) * INV_SQRT2 for x, y in zip(full, img)), "-").chiral("-")
    ok = rq[:10] == vec and rq[10:26] == list(rot) and rq[26] == r[26]
    tally.record("eiii.rotation_equivariance", ok, t)


def _chart_dimensions(tally: _Tally, frame, dense_rank):
    """X-infinity chart parameters: f, K of type (2,0), ubar of type (0,1), s; 17 in all."""
    from . import eiii as E
    p01 = frame.projector("01")
    ubar_dim = dense_rank(p01)
    images = []
    for a in range(10):
        for b in range(a + 1, 10):
            k = [[ZERO] * 10 for _ in range(10)]
            k[a][b], k[b][a] = ONE, -ONE
            proj, _, _ = E.project_types(frame, k, [ZERO] * 10)
            images.append([c for row in proj for c in row])
    k_dim = dense_rank(images)
    tally.record("eiii.xinfty_parameter_count_17", 1 + k_dim + ubar_dim + 1 == 17,
                 k_dim=k_dim, ubar_dim=ubar_dim)


def eiii_suite(seed, trials, jacobi) -> List[Check]:
    return eiii_checks(seed, trials)


# albert -----------------------------------------------------------------------

def real_orbit_point(seed: int, word_length: int = 5):
    from .eiii import orbit_sample
    return orbit_sample(seed, word_length)


def albert_checks(seed: int = 0, trials: int = 100, samples: int = None) -> List[Check]:
    from . import albert as A
    from . import eiii as E
    from . import liealg as L
    from .octonion import Octonion, NonInvertibleError
    from .rep27 import Vector27, act27
    samples = trials if samples is None else samples
    rng = Rng(seed)
    tally = _Tally(seed)
    ident = A.JordanMatrix.identity()
    f4 = L.basis("f4")
    tally.record("albert.psi_o_real", A.reality_check(A.PSI_O))
    tally.record("albert.psi_o_norm_two", A.f4_pairing(A.PSI_O, A.PSI_O) == ExtScalar(2))
    rhs = (A.Sqrt3(A.PSI_O.scale(-2), Vector27.zero())
           - A.PSI_EMPTY.times_sqrt3().scale(2)).rational_part()
    tally.record("albert.psi_o_diamond", A.diamond_f4(A.PSI_O, A.PSI_O) == rhs)
    tally.record("albert.psi_empty_f4_invariant",
                 all(act27(x, A.PSI_EMPTY_UNIT).is_zero() for x in f4))
    for t in range(trials):
        p, q = _real_pair(rng)
        lhs = A.jordan_star(A.j_map(p), A.j_map(q))
        rhs = A.j_map(A.diamond_f4(p, q)).scale(-HALF) + ident.scale(A.f4_pairing(p, q) * HALF * HALF)
        tally.record("albert.master_identity_real", lhs == rhs, t)
        r = random_vector27(rng)
        tally.record("albert.det_is_cubic", A.jordan_det(r) == A.octonion_det(A.j_map_complex(r))
                     and A.jordan_det(r) == A.det_explicit(r), t)
    for t in range(max(1, trials // 10)):
        p, q = random_vector27(rng), random_vector27(rng)
        lhs = A.jordan_star(A.j_map(p), A.j_map(q))
        rhs = A.j_map(A.diamond_f4(p, q)).scale(-HALF) + ident.scale(A.f4_pairing(p, q) * HALF * HALF)
        tally.record("albert.master_identity_complex", lhs == rhs, t)
    for t in range(max(1, trials // 10)):
        p = random_vector27(rng)
        tau = A.trace_coordinate(p)
        pair = A.Sqrt3(ZERO, A.f4_pairing(p, A.PSI_EMPTY_UNIT))
        main = pair.times_sqrt3().rational_part()
        tally.record("albert.trace_complex_arrangement_is_sqrt3_pairing",
                     A.j_map_complex(p).trace() == tau == main, t)
        tally.record("albert.trace_real_arrangement_is_minus_half",
                     A.j_map(p).trace() == -main * HALF, t)
    p = random_vector27(rng)
    for k, x in enumerate(f4):
        tally.record("albert.trace_f4_invariant", A.j_map(act27(x, p)).trace() == ZERO, k)
    for t in range(trials):
        a, b = Octonion(rng.scalars(8, "real")), Octonion(rng.scalars(8, "real"))
        x, lam = A.veronese_point(a, b)
        tally.record("albert.veronese_point_valid", A.veronese_check(x, lam), t)
        try:
            c1 = A.projective_chart(1, x, lam)
            c2 = A.chart_transition_oct(*c1)
            c3 = A.chart_transition_oct(*c2)
            back = A.chart_transition_oct(*c3)
        except (A.NotInChart, NonInvertibleError):
            tally.record("albert.chart_transitions", False, t)
            continue
        ok = (c1 == (a, b) and c2 == A.projective_chart(2, x, lam)
              and c3 == A.projective_chart(3, x, lam))
        tally.record("albert.chart_transitions", ok, t)
        tally.record("albert.chart_cocycle", back == c1, t)
    inf = 0
    for t in range(samples):
        pt = real_orbit_point(seed * 1000 + t, 1 + t % 5)
        tau = A.trace_coordinate(pt)
        jc = A.j_map_complex(pt)
        tally.record("albert.orbit_jordan_square_is_trace_multiple",
                     A.jordan_star(jc, jc) == jc.scale(tau), t)
        x, lam = A.veronese_from_jordan(jc)
        tally.record("albert.plucker_gives_veronese", A.veronese_check(x, lam), t)
        tally.record("albert.plucker_8d_consequences", _veronese_c(pt), t)
        if not tau:
            inf += 1
            try:
                A.f4_orbit_project(pt)
                ok = False
            except A.StratumAtInfinity:
                ok = True
            tally.record("albert.stratum_rejected", ok, t)
            continue
        m = A.f4_orbit_project(pt)
        tally.record("albert.orbit_projection_idempotent", A.jordan_star(m, m) == m, t)
        tally.record("albert.orbit_projection_unit_trace", m.trace() == ONE, t)
    witness = real_orbit_point(270, 5)
    rejected = False
    try:
        A.f4_orbit_project(witness)
    except A.StratumAtInfinity:
        rejected = True
    tally.record("albert.stratum_rejected", rejected
                 and A.f4_pairing(witness, A.PSI_EMPTY_UNIT) == ZERO)
    off = random_vector27(rng)
    x, lam = A.veronese_from_jordan(A.j_map_complex(off))
    tally.record("albert.non_plucker_not_veronese",
                 not E.residual_is_zero(off) and not A.veronese_check(x, lam))
    return tally.checks()


def random_real_point(rng: Rng):
    from .albert import real_point
    return real_point(rng.scalars(8, "real"), rng.real(), rng.real(), rng.real(),
                      _random_chiral(rng, 5, "+"))


def _real_pair(rng: Rng):
    return random_real_point(rng), random_real_point(rng)


def _veronese_c(p) -> bool:
    """The 8-dimensional consequences of the Plucker relations in (u, r, t, s, xi, eta)."""
    from .albert import split_coords
    from .eiii import split_8_2
    from .scalar import INV_SQRT2, SQRT2
    c = split_coords(p)
    u, r, t, s = c["u"], c["r"], c["t"], c["s"]
    xi, eta = split_8_2(p.psi)
    unit = Blade.unit(8)
    uu = sum((a * a for a in u), ZERO)
    ueta = vector_act(u, eta).coeffs
    uxi = vector_act(u, xi).coeffs
    mixed = [pair_bilinear(xi, Blade.of(8, i + 1), eta) for i in range(8)]
    return (pair_bilinear(xi, unit, xi) == s * (r + t)
            and pair_bilinear(eta, unit, eta) == -s * (r - t)
            and uu == -HALF * (r * r - t * t)
            and list(ueta) == [-INV_SQRT2 * (r - t) * a for a in xi.coeffs]
            and list(uxi) == [INV_SQRT2 * (r + t) * a for a in eta.coeffs]
            and mixed == [SQRT2 * s * a for a in u])


def albert_suite(seed, trials, jacobi) -> List[Check]:
    return albert_checks(seed, trials)


REGISTRY: Dict[str, Callable[[int, int, str], List[Check]]] = {
    "clifford": clifford_suite,
    "fierz": fierz_suite,
    "octonion": octonion_suite,
    "liealg": liealg_suite,
    "rep27": rep27_suite,
    "eiii": eiii_suite,
    "albert": albert_suite,
}


def run_suite(name: str, seed: int = 0, trials: int = 50, jacobi: str = "exhaustive") -> List[Check]:
    if name not in REGISTRY:
        raise KeyError(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return REGISTRY[name](seed, trials, jacobi)
