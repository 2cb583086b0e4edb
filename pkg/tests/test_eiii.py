import warnings
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

import oracles
from eiii_atlas import eiii as E
from eiii_atlas import liealg as L
from eiii_atlas import rep27 as R
from eiii_atlas.clifford import (Blade, Spinor, bilinear_vector, build_gamma, pair_bilinear,
                                 vector_act)
from eiii_atlas.rng import Rng
from eiii_atlas.scalar import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, ExtScalar
from eiii_atlas.suites import _random_chiral, admissible_xinfty, random_antisym, random_vector27

FRAME = E.standard_frame()


def dense_matrix(rows) -> np.ndarray:
    return np.array([[c.to_complex() for c in r] for r in rows])


# residual -------------------------------------------------------------------

def test_psi0_residual_zero():
    assert E.residual_is_zero(R.PSI0)
    assert len(E.plucker_residual(R.PSI0)) == 27


def test_null_vector_failure_shows_in_last_component():
    p = R.Vector27([ONE] + [ZERO] * 9, Spinor.zero(5), ZERO)
    res = E.plucker_residual(p)
    assert res[26] == ONE and not any(res[:26])


def test_exponential_words_stay_on_the_orbit():
    rng = Rng(1)
    p = R.PSI0
    for k in range(4):
        sign = "+" if k % 2 == 0 else "-"
        kw = {"plus" if sign == "+" else "minus": _random_chiral(rng, 5, sign)}
        p = R.apply_matrix(R.exp_nilpotent(L.LieElement.from_parts("e6", **kw)), p)
        assert E.residual_is_zero(p)


# affine charts ----------------------------------------------------------------

def test_chart_s_examples():
    pure = Spinor.basis(5, 0)
    p = E.chart_s(pure, ONE)
    assert not any(p.v) and E.residual_is_zero(p)
    s = ExtScalar(3, 1)
    assert E.chart_s(Spinor.zero(5), s) == R.PSI0.scale(s)
    with pytest.raises(E.NotInChart, match="s must be nonzero"):
        E.chart_s(pure, ZERO)


def test_chart_s_random():
    rng = Rng(2)
    for _ in range(30):
        assert E.residual_is_zero(E.chart_s(_random_chiral(rng, 5, "+"), rng.nonzero()))


def test_chart_tplus_with_zero_eta():
    rng = Rng(3)
    t, u = rng.nonzero(), rng.scalars(8)
    p = E.chart_tpm("plus", t, Spinor.zero(4, "-"), u)
    assert p.psi.is_zero() and p.s == ZERO
    uu = sum((a * a for a in u), ZERO)
    assert E.t_plus(p.v) == t
    assert E.t_minus(p.v) == uu * t.inverse() * -2
    assert E.residual_is_zero(p)


def test_chart_tminus_formulas():
    rng = Rng(4)
    t, u = rng.nonzero(), rng.scalars(8)
    xi = _random_chiral(rng, 4, "+")
    p = E.chart_tpm("minus", t, xi, u)
    got_xi, got_eta = E.split_8_2(p.psi)
    tinv = t.inverse()
    uu = sum((a * a for a in u), ZERO)
    assert got_xi == xi
    assert got_eta.coeffs == vector_act(u, xi).scale(SQRT2 * tinv).coeffs
    assert p.s == pair_bilinear(xi, Blade.unit(8), xi) * tinv
    assert E.t_minus(p.v) == t and E.t_plus(p.v) == uu * tinv * -2
    assert list(p.v[:8]) == u


@pytest.mark.parametrize("side,sign", [("plus", "-"), ("minus", "+")])
def test_chart_tpm_random(side, sign):
    rng = Rng(5)
    for _ in range(30):
        p = E.chart_tpm(side, rng.nonzero(), _random_chiral(rng, 4, sign), rng.scalars(8))
        assert E.residual_is_zero(p)


def test_chart_tpm_errors():
    with pytest.raises(E.NotInChart, match="tcoord must be nonzero"):
        E.chart_tpm("plus", ZERO, Spinor.zero(4, "-"), [ZERO] * 8)
    with pytest.raises(ValueError):
        E.chart_tpm("sideways", ONE, Spinor.zero(4, "-"), [ZERO] * 8)
    with pytest.raises(ValueError):
        E.chart_tpm("plus", ONE, Spinor.zero(4, "-"), [ZERO] * 7)


def test_split_join_round_trip():
    rng = Rng(6)
    psi = _random_chiral(rng, 5, "+")
    xi, eta = E.split_8_2(psi)
    assert E.join_8_2(xi, eta) == psi


# rotations --------------------------------------------------------------------

def _rotation_dense(a):
    return (np.eye(32) + oracles.blade(5, (a, 10))) / np.sqrt(2)


def test_rotation_equivariance_against_dense_oracle():
    rng = Rng(7)
    for _ in range(20):
        p = random_vector27(rng)
        a = 1 + rng.below(9)
        q = E.rotate_frame(a, p)
        omega = _rotation_dense(a)
        assert np.allclose(oracles.vec(q.psi.coeffs), omega @ oracles.vec(p.psi.coeffs))
        r, rq = E.plucker_residual(p), E.plucker_residual(q)
        vec = np.array([c.to_complex() for c in r[:10]])
        rot = vec.copy()
        rot[a - 1], rot[9] = vec[9], -vec[a - 1]
        assert np.allclose([c.to_complex() for c in rq[:10]], rot)
        full = oracles.vec(vector_act(p.v, p.psi).coeffs)
        want = (omega @ full)[build_gamma(5).chiral_index("-")]
        assert np.allclose([c.to_complex() for c in rq[10:26]], want)
        assert rq[26] == r[26]


def test_double_rotation_is_a_half_turn():
    rng = Rng(8)
    p = random_vector27(rng)
    for a in (1, 5, 9):
        q = E.rotate_frame(a, E.rotate_frame(a, p))
        v = list(p.v)
        v[a - 1], v[9] = -v[a - 1], -v[9]
        assert list(q.v) == v
        want = oracles.blade(5, (a, 10)) @ oracles.vec(p.psi.coeffs)
        assert np.allclose(oracles.vec(q.psi.coeffs), want)


def test_hatted_spinor():
    rng = Rng(9)
    psi = _random_chiral(rng, 5, "+")
    xi, eta = E.split_8_2(psi)
    for a in range(1, 9):
        q = E.rotate_frame(a, R.Vector27([ZERO] * 10, psi, ZERO))
        hx, he = E.split_8_2(q.psi)
        ea = [ONE if k == a - 1 else ZERO for k in range(8)]
        want_x = (xi + Spinor(4, vector_act(ea, eta).coeffs, "+").scale(I)).scale(INV_SQRT2)
        want_e = (eta + Spinor(4, vector_act(ea, xi).coeffs, "-").scale(I)).scale(INV_SQRT2)
        assert hx == want_x and he == want_e


def test_rotation_moves_point_into_a_t_chart():
    v = [ZERO] * 10
    v[2] = ONE
    v[3] = I
    p = R.Vector27(v, Spinor.zero(5), ZERO)
    assert not E.t_plus(p.v) and not E.t_minus(p.v)
    a, q = E.rotate_into_chart(p)
    assert a == 3 and (E.t_plus(q.v) or E.t_minus(q.v))


def test_rotate_frame_range():
    for bad in (0, 10):
        with pytest.raises(ValueError):
            E.rotate_frame(bad, R.PSI0)


# pure spinors -------------------------------------------------------------------

def test_purity():
    assert E.is_pure(Spinor.basis(5, 0))
    assert E.is_pure(Spinor.zero(5))
    assert not E.is_pure(_random_chiral(Rng(10), 5, "+"))


def test_frame_complex_structure():
    j = dense_matrix(FRAME.J)
    assert np.allclose(j @ j, -np.eye(10))
    assert np.allclose(j.T @ j, np.eye(10))
    assert oracles.numeric_rank(j - 1j * np.eye(10)) == 5
    assert oracles.numeric_rank(j + 1j * np.eye(10)) == 5
    assert FRAME.omega_pairing() == ONE


def test_four_form_is_minus_half_j_wedge_j():
    four, jwj = FRAME.four_form(), FRAME.j_wedge_j()
    for m in set(four) | set(jwj):
        assert four.get(m, ZERO) == -jwj.get(m, ZERO) * HALF


def test_antiholomorphic_vectors_kill_psi0():
    p01 = FRAME.projector("01")
    for col in range(10):
        u = [p01[r][col] for r in range(10)]
        assert E._matvec(FRAME.J, u) == [c * -I for c in u]
        assert vector_act(u, FRAME.psi0).is_zero()


def test_pure_frame_errors():
    with pytest.raises(ValueError, match="not pure"):
        E.pure_frame(_random_chiral(Rng(11), 5, "+"))
    with pytest.raises(ValueError, match="normalised"):
        E.pure_frame(Spinor.basis(5, 0).scale(2))


def test_decompose_psi0():
    f, x, k = E.pure_decompose(FRAME.psi0, FRAME)
    assert f == ONE and not any(x) and not any(any(r) for r in k)


def test_decompose_and_reconstruct():
    rng = Rng(12)
    p10 = FRAME.projector("10")
    for _ in range(15):
        psi = _random_chiral(rng, 5, "+")
        f, x, k = E.pure_decompose(psi, FRAME)
        assert E.reconstruct(FRAME, f, x, k) == psi
        assert E._matvec(FRAME.J, x) == [c * -I for c in x]
        assert not any(any(r) for r in E._matmul(k, p10))
        bv = bilinear_vector(psi, psi)
        kx = E._matvec(k, x)
        w = E.omega_contract(FRAME.OmegaBar, k)
        c = INV_SQRT2 * ExtScalar(Fraction(1, 8))
        assert bv == [a * f * 2 - b - d * c for a, b, d in zip(x, kx, w)]


# X-infinity chart -------------------------------------------------------------------

def test_xinfty_trivial_parameters():
    f, s = ExtScalar(2, 1), ExtScalar(-1)
    zero_k = [[ZERO] * 10 for _ in range(10)]
    p = E.chart_xinfty(FRAME, f, zero_k, [ZERO] * 10, s)
    assert p == R.Vector27([ZERO] * 10, FRAME.psi0.scale(f), s)


def test_xinfty_random_parameters():
    rng = Rng(13)
    for _ in range(15):
        p = E.chart_xinfty(FRAME, *admissible_xinfty(rng, FRAME))
        assert E.residual_is_zero(p)


def test_xinfty_errors_and_projection():
    rng = Rng(14)
    k, ubar = random_antisym(rng), rng.scalars(10)
    with pytest.raises(E.NotInChart, match="f must be nonzero"):
        E.chart_xinfty(FRAME, ZERO, k, ubar, ONE)
    with pytest.raises(ValueError, match="type constraint"):
        E.chart_xinfty(FRAME, ONE, k, ubar, ONE)
    bad = [[ZERO] * 10 for _ in range(10)]
    bad[0][1] = ONE
    with pytest.raises(ValueError, match="antisymmetric"):
        E.chart_xinfty(FRAME, ONE, bad, [ZERO] * 10, ONE)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = E.chart_xinfty(FRAME, ONE, k, ubar, ONE, project=True)
    assert any(issubclass(w.category, E.TypeConstraintWarning) for w in caught)
    assert E.residual_is_zero(p)


def _levi_civita(perm) -> int:
    sign, p = 1, list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def test_epsilon_contraction_lies_in_kernel_of_k():
    rng = Rng(15)
    for _ in range(5):
        k = [[Fraction(0)] * 5 for _ in range(5)]
        for a in range(5):
            for b in range(a + 1, 5):
                k[a][b] = rng.rational()
                k[b][a] = -k[a][b]
        w = [Fraction(0)] * 5
        for perm in permutations(range(5)):
            a0, a1, a2, a3, a4 = perm
            w[a4] += _levi_civita(perm) * k[a0][a1] * k[a2][a3]
        assert all(sum(w[a] * k[a][b] for a in range(5)) == 0 for b in range(5))


def test_xinfty_parameter_count():
    p01 = dense_matrix(FRAME.projector("01"))
    images = []
    for a in range(10):
        for b in range(a + 1, 10):
            k = [[ZERO] * 10 for _ in range(10)]
            k[a][b], k[b][a] = ONE, -ONE
            proj, _, _ = E.project_types(FRAME, k, [ZERO] * 10)
            images.append(dense_matrix(proj).ravel())
    k_dim, u_dim = oracles.numeric_rank(np.array(images)), oracles.numeric_rank(p01)
    assert (k_dim, u_dim) == (10, 5)
    assert 1 + k_dim + u_dim + 1 == 17


def test_infinity_locus_is_pure_spinors():
    rng = Rng(16)
    for _ in range(5):
        f, k, _, _ = admissible_xinfty(rng, FRAME)
        p = E.chart_xinfty(FRAME, f, k, [ZERO] * 10, ZERO)
        assert not any(p.v) and p.s == ZERO and E.is_pure(p.psi)
        assert E.residual_is_zero(p)
        q = R.Vector27([ZERO] * 10, _random_chiral(rng, 5, "+"), ZERO)
        assert not E.is_pure(q.psi) and not E.residual_is_zero(q)


# transitions --------------------------------------------------------------------------

def test_s_tplus_s_round_trip():
    rng = Rng(17)
    for _ in range(10):
        cp = E.ChartPoint("s", {"psi": _random_chiral(rng, 5, "+"), "s": rng.nonzero()})
        mid = E.chart_transition(cp, "tplus")
        back = E.chart_transition(mid, "s")
        assert E.proportional(E.assemble(back).flat(), E.assemble(cp).flat())
        assert E.proportional(E.assemble(mid).flat(), E.assemble(cp).flat())


def test_transition_into_vanishing_chart():
    cp = E.ChartPoint("s", {"psi": Spinor.zero(5), "s": ONE})
    with pytest.raises(E.NotInChart):
        E.chart_transition(cp, "tplus")
    with pytest.raises(ValueError):
        E.chart_transition(cp, "gr24")


def test_xinfty_point_in_s_chart_iff_s_nonzero():
    rng = Rng(18)
    for s in (ZERO, ExtScalar(2)):
        f, k, ubar, _ = admissible_xinfty(rng, FRAME)
        cp = E.ChartPoint("xinfty", {"f": f, "K": k, "ubar": ubar, "s": s}, FRAME)
        if s:
            other = E.chart_transition(cp, "s")
            assert E.proportional(E.assemble(other).flat(), E.assemble(cp).flat())
        else:
            with pytest.raises(E.NotInChart):
                E.chart_transition(cp, "s")


def test_proportional():
    a = [ONE, ExtScalar(2), ZERO]
    assert E.proportional(a, [c * I for c in a])
    assert not E.proportional(a, [ONE, ONE, ZERO])
    assert E.proportional([ZERO] * 3, a)


# orbit samples -------------------------------------------------------------------------

def test_orbit_sample_single_xi():
    for seed in range(5):
        p = E.orbit_sample(seed, 1, "x")
        assert p == E.chart_s(p.psi, ONE)


def test_orbit_samples_on_the_variety():
    for seed in range(20):
        p = E.orbit_sample(seed, 5)
        assert E.residual_is_zero(p)
        covered = bool(p.s) or bool(E.t_plus(p.v)) or bool(E.t_minus(p.v)) \
            or E.rotate_into_chart(p) is not None or bool(E.pure_decompose(p.psi, FRAME)[0])
        assert covered


def test_orbit_sample_leaves_s_chart():
    p = E.orbit_sample(2, 5)
    assert p.s == ZERO and E.residual_is_zero(p) and not p.is_zero()


def test_orbit_sample_is_deterministic_and_validated():
    assert E.orbit_sample(7, 4) == E.orbit_sample(7, 4)
    with pytest.raises(ValueError):
        E.orbit_sample(0, 0)
    with pytest.raises(ValueError):
        E.orbit_sample(0, 2, "xq")


# Gr(2,4) ---------------------------------------------------------------------------------

def test_gr24():
    ident = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    assert E.gr24_plucker(ident) == [ONE, ZERO, ZERO, ZERO, ZERO, ZERO]
    rng = Rng(19)
    for _ in range(50):
        g = [rng.scalars(4, "real") for _ in range(4)]
        assert E.gr24_relation(E.gr24_plucker(g)) == ZERO
    col = rng.scalars(4)
    flat = [[c, c * 3, ONE, ZERO] for c in col]
    assert not any(E.gr24_plucker(flat))
    with pytest.raises(ValueError):
        E.gr24_plucker([[ONE] * 3] * 4)


# JSON ----------------------------------------------------------------------------------------

def test_chart_point_json_round_trip():
    rng = Rng(20)
    points = [
        E.ChartPoint("s", {"psi": _random_chiral(rng, 5, "+"), "s": rng.nonzero()}),
        E.ChartPoint("tplus", {"t": rng.nonzero(), "spin8": _random_chiral(rng, 4, "-"),
                               "u8": rng.scalars(8)}),
        E.ChartPoint("tminus", {"t": rng.nonzero(), "spin8": _random_chiral(rng, 4, "+"),
                                "u8": rng.scalars(8)}),
    ]
    f, k, ubar, s = admissible_xinfty(rng, FRAME)
    points.append(E.ChartPoint("xinfty", {"f": f, "K": k, "ubar": ubar, "s": s}, FRAME))
    for cp in points:
        back = E.ChartPoint.from_json(cp.to_json())
        assert E.assemble(back) == E.assemble(cp)


def test_chart_point_json_shorthand_and_errors():
    cp = E.ChartPoint.from_json({"chart": "s", "params": {"psi": {"basis": 0}, "s": 1}})
    assert cp.params["psi"] == Spinor.basis(5, 0)
    wrong = [0] * 32
    wrong[1] = 1
    with pytest.raises(ValueError, match="chirality"):
        E.ChartPoint.from_json({"chart": "s", "params": {"psi": wrong, "s": 1}})
    with pytest.raises(ValueError):
        E.ChartPoint("cone", {})
