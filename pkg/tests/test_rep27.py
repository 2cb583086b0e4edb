import pytest

from eiii_atlas import liealg as L
from eiii_atlas import rep27 as R
from eiii_atlas.clifford import Spinor
from eiii_atlas.rng import Rng
from eiii_atlas.scalar import I, ONE, ZERO, ExtScalar
from eiii_atlas.suites import random_covector27, random_vector27

E6 = L.basis("e6")


def _xi(rng):
    return L.LieElement.from_parts("e6", plus=Spinor.from_chiral(5, "+", rng.scalars(16)))


def _eta(rng):
    return L.LieElement.from_parts("e6", minus=Spinor.from_chiral(5, "-", rng.scalars(16)))


def test_rho_weights():
    rng = Rng(1)
    p, f = random_vector27(rng), random_covector27(rng)
    assert R.act27(L.rho(), p) == R.Vector27([v * I * 2 for v in p.v], p.psi.scale(-I),
                                             p.s * I * -4)
    assert R.act27_dual(L.rho(), f) == R.Covector27([u * I * -2 for u in f.u], f.phi.scale(I),
                                                    f.t * I * 4)


def test_xi_on_psi0():
    rng = Rng(2)
    x = _xi(rng)
    assert R.act27(x, R.PSI0) == R.Vector27([ZERO] * 10, x.spinor_plus, ZERO)


def test_representation_property():
    rng = Rng(3)
    for _ in range(20):
        x, y = L.LieElement("e6", rng.scalars(78)), L.LieElement("e6", rng.scalars(78))
        p = random_vector27(rng)
        lhs = R.act27(L.bracket(x, y), p)
        assert lhs == R.act27(x, R.act27(y, p)) - R.act27(y, R.act27(x, p))


def test_pairing_invariance():
    rng = Rng(4)
    for _ in range(30):
        x = L.LieElement("e6", rng.scalars(78))
        p, f = random_vector27(rng), random_covector27(rng)
        assert (R.pairing(R.act27_dual(x, f), p) + R.pairing(f, R.act27(x, p))).is_zero()


def test_so10_keeps_phi0_t_component():
    for x in E6[:45]:
        assert R.act27_dual(x, R.PHI0).t == ZERO


def test_d_is_totally_symmetric():
    rng = Rng(5)
    for _ in range(20):
        a, b, c = (random_vector27(rng) for _ in range(3))
        d = R.d_cubic(a, b, c)
        assert d == R.d_cubic(b, a, c) == R.d_cubic(a, c, b) == R.d_cubic(c, b, a)
        assert d == R.d_cubic(b, c, a) == R.d_cubic(c, a, b)


def test_d_invariant_under_every_generator():
    rng = Rng(6)
    for _ in range(3):
        a, b, c = (random_vector27(rng) for _ in range(3))
        for x in E6:
            tot = (R.d_cubic(R.act27(x, a), b, c) + R.d_cubic(a, R.act27(x, b), c)
                   + R.d_cubic(a, b, R.act27(x, c)))
            assert tot.is_zero()


def test_dual_cubic_invariant_under_every_generator():
    rng = Rng(7)
    f, g, h = (random_covector27(rng) for _ in range(3))
    for x in E6:
        tot = (R.d_dual(R.act27_dual(x, f), g, h) + R.d_dual(f, R.act27_dual(x, g), h)
               + R.d_dual(f, g, R.act27_dual(x, h)))
        assert tot.is_zero()


def test_psi0_is_a_null_direction_of_d():
    rng = Rng(8)
    assert R.diamond27(R.PSI0, R.PSI0).is_zero()
    for _ in range(5):
        assert R.d_cubic(R.PSI0, R.PSI0, random_vector27(rng)) == ZERO
    assert R.diamond_dual(R.PHI0, R.PHI0).is_zero()


def test_diamond_represents_d():
    rng = Rng(9)
    for _ in range(30):
        a, b, c = (random_vector27(rng) for _ in range(3))
        assert R.pairing(R.diamond27(a, b), c) == R.d_cubic(a, b, c)
        f, g, h = (random_covector27(rng) for _ in range(3))
        assert R.pairing(h, R.diamond_dual(f, g)) == R.d_dual(f, g, h)


def _cyc(a, b, c):
    return ((a, b, c), (b, c, a), (c, a, b))


def test_first_diamond_identity():
    rng = Rng(10)
    for _ in range(10):
        p1, p2, p3, p4 = (random_vector27(rng) for _ in range(4))
        tot = R.Vector27.zero()
        for a, b, c in _cyc(p1, p2, p3):
            tot = tot + R.diamond_dual(R.diamond27(a, b), R.diamond27(c, p4)) \
                - c.scale(R.d_cubic(a, b, p4))
        assert tot == p4.scale(R.d_cubic(p1, p2, p3))


def test_second_diamond_identity():
    rng = Rng(11)
    for _ in range(10):
        p1, p2, p3 = (random_vector27(rng) for _ in range(3))
        f = random_covector27(rng)
        tot = R.Covector27.zero()
        for a, b, c in _cyc(p1, p2, p3):
            tot = tot + R.diamond27(a, R.diamond_dual(R.diamond27(b, c), f)) \
                - R.diamond27(a, b).scale(R.pairing(f, c))
        assert tot == f.scale(R.d_cubic(p1, p2, p3))


def test_stabilizer_is_so10():
    stab = R.stabilizer_psi0()
    assert len(stab) == 45
    assert L.span_equal(stab, E6[:45])
    for x in E6[:45]:
        assert R.act27(x, R.PSI0).is_zero()
    rho_img = R.act27(L.rho(), R.PSI0)
    assert rho_img == R.PSI0.scale(I * -4)


def test_complex_annihilator_is_larger():
    # over C the Delta- sector also kills Psi0; only the joint condition with Phi0 gives so(10)
    assert len(R.annihilator_psi0()) == 61


def test_exp_nilpotent():
    rng = Rng(12)
    ident = [[ONE if i == j else ZERO for j in range(27)] for i in range(27)]
    for make in (_xi, _eta):
        for _ in range(10):
            z = make(rng)
            m, minv = R.exp_nilpotent(z), R.exp_nilpotent(z.scale(-1))
            assert R._matmul(m, minv) == ident
            n = R.matrix27(z)
            assert not any(any(r) for r in R._matmul(R._matmul(n, n), n))


def test_exp_nilpotent_rejects_mixed_elements():
    rng = Rng(13)
    with pytest.raises(ValueError):
        R.exp_nilpotent(_xi(rng) + _eta(rng))
    with pytest.raises(ValueError):
        R.exp_nilpotent(L.rho())


def test_matrix27_matches_action():
    rng = Rng(14)
    x, p = L.LieElement("e6", rng.scalars(78)), random_vector27(rng)
    assert R.apply_matrix(R.matrix27(x), p) == R.act27(x, p)


def test_vector27_json_round_trip():
    rng = Rng(15)
    p = random_vector27(rng)
    js = p.to_json()
    assert set(js) == {"v", "psi", "s"} and len(js["v"]) == 10 and len(js["psi"]) == 16
    assert R.Vector27.from_json(js) == p
    assert R.Vector27.from_flat(p.flat()) == p


def test_vector27_validation():
    with pytest.raises(ValueError):
        R.Vector27([ZERO] * 9, Spinor.zero(5), ONE)
    with pytest.raises(ValueError):
        R.act27(L.basis("e8")[0], R.PSI0)
    assert R.pairing(R.PHI0, R.PSI0) == ExtScalar(1)
