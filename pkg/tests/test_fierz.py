from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest

import oracles
from eiii_atlas import fierz
from eiii_atlas.fierz import (REFERENCE_TABLES, SECTORS, derive_table, sectors_for, table_product,
                              verify_derived, verify_table)
from eiii_atlas.rng import Rng
from eiii_atlas.scalar import ZERO

ALL_SECTORS = [(d, s) for d in (8, 10, 16) for s in sectors_for(d)]


@pytest.fixture(scope="module")
def tables():
    return {key: derive_table(*key) for key in ALL_SECTORS}


@pytest.mark.parametrize("key", ALL_SECTORS, ids=lambda k: f"D{k[0]}-{k[1]}")
def test_derived_table_matches_reference(tables, key):
    assert [list(r) for r in tables[key].matrix] == REFERENCE_TABLES[key]


def test_named_rows(tables):
    assert tables[(8, "even")].matrix[0] == (F(1, 8), F(-1, 8), F(1, 16))
    assert tables[(8, "even")].matrix[2] == (F(35, 4), F(5, 4), F(3, 8))
    assert tables[(16, "even")].matrix[0] == (F(1, 128), F(-1, 128), F(1, 128), F(-1, 128),
                                               F(1, 256))
    assert tables[(10, "odd")].matrix[0] == (F(-1, 2), F(1, 4))


def test_d8_mixed_sector_has_no_grade4(tables):
    for s in ("b_even", "b_odd"):
        t = tables[(8, s)]
        assert 4 not in t.grades and 4 not in t.col_grades


@pytest.mark.parametrize("key", ALL_SECTORS, ids=lambda k: f"D{k[0]}-{k[1]}")
def test_tables_are_involutions(tables, key):
    partner = fierz.PARTNER[key[1]]
    prod = table_product(tables[key], tables[(key[0], partner)])
    n = len(prod)
    assert prod == [[F(int(i == j)) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("key", [(8, "even"), (8, "b_odd"), (10, "odd"), (10, "b_even")],
                         ids=lambda k: f"D{k[0]}-{k[1]}")
def test_float_least_squares_oracle(tables, key):
    dim, sector = key
    rows, cols, chis = SECTORS[dim][sector]
    sol = oracles.fierz_table_lstsq(dim // 2, rows, cols, chis, samples=30, seed=dim)
    want = np.array([[float(x) for x in r] for r in tables[key].matrix])
    assert np.allclose(sol, want, atol=1e-8)


@pytest.mark.parametrize("key", [k for k in ALL_SECTORS if k[0] != 16],
                         ids=lambda k: f"D{k[0]}-{k[1]}")
def test_verify_table_rows(key):
    checks = verify_table(*key, trials=20, seed=3)
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_verify_table_d16(tables):
    checks = verify_table(16, "even", trials=2, seed=1, table=tables[(16, "even")])
    assert all(c.passed for c in checks)


def test_zero_spinors_give_zero():
    z = fierz._IntSpinor([ZERO] * 16)
    for k in (0, 2, 4):
        assert fierz._grade_value(8, k, z, z, z, z) == (0, 0)


def test_wrong_table_is_reported_not_raised(tables):
    t = tables[(8, "odd")]
    bad = fierz.FierzTable(8, "odd", t.grades, t.col_grades,
                           ((F(1), F(0)), (F(0), F(1))))
    checks = verify_table(8, "odd", trials=3, table=bad)
    by_name = {c.name: c for c in checks}
    assert not by_name["fierz.D8.odd.rows"].passed
    assert not by_name["fierz.D8.odd.reference"].passed


def test_invalid_sector():
    with pytest.raises(ValueError):
        derive_table(16, "odd")
    with pytest.raises(ValueError):
        derive_table(12, "even")
    with pytest.raises(ValueError):
        sectors_for(9)


@pytest.mark.parametrize("dim", [8, 10, 16])
def test_derived_identities(dim):
    checks = verify_derived(dim, trials=20, seed=7)
    assert checks and all(c.passed for c in checks)


def test_d16_cyclic_with_equal_spinors():
    rng = Rng(9)
    psi = fierz._IntSpinor(fierz._random_chiral(rng, 8, "+"))
    term = fierz._act_sum(16, 2, psi, psi, psi)
    total = fierz._lin((3, term))
    assert fierz._is_zero(total)


def test_d8_identity_two_with_zero_eta():
    rng = Rng(4)
    phi = fierz._IntSpinor(fierz._random_chiral(rng, 4, "+"))
    psi = fierz._IntSpinor(fierz._random_chiral(rng, 4, "+"))
    eta = fierz._IntSpinor([ZERO] * 16)
    assert fierz._is_zero(fierz._act_sum(8, 1, psi, phi, eta))
    assert fierz._is_zero(fierz._smul(fierz._scalar_pair(8, phi, psi), eta))


def _act_sum_dense(n, k, x, y, z):
    out = np.zeros(1 << n, dtype=complex)
    for idx in combinations(range(1, 2 * n + 1), k):
        m = oracles.blade(n, idx)
        out += (m @ x) * (y @ oracles.charge(n) @ m @ z)
    return out


def test_d8_identity_one_dense_oracle():
    rng = np.random.default_rng(0)
    xi, phi, psi = (oracles.random_chiral(rng, 4, 1) for _ in range(3))
    c = oracles.charge(4)
    lhs = _act_sum_dense(4, 2, xi, phi, psi)
    rhs = 4 * phi * (psi @ c @ xi) - 4 * psi * (phi @ c @ xi)
    assert np.allclose(lhs, rhs)


def test_d10_cyclic_dense_oracle():
    rng = np.random.default_rng(1)
    p1, p2, p3 = (oracles.random_chiral(rng, 5, 1) for _ in range(3))
    tot = (_act_sum_dense(5, 1, p1, p2, p3) + _act_sum_dense(5, 1, p2, p3, p1)
           + _act_sum_dense(5, 1, p3, p1, p2))
    assert np.allclose(tot, 0)


def test_table_serialization(tables):
    t = tables[(10, "odd")]
    js = t.to_json()
    assert js == {"dim": 10, "sector": "odd", "grades": [1, 3], "col_grades": [1, 3],
                  "matrix": [["-1/2", "1/4"], ["3", "1/2"]]}
    text = t.to_text().splitlines()
    assert text[0] == "D=10 sector=odd"
    assert text[1].split() == ["A1^T", "A3^T"]
    assert text[2].split() == ["A1", "-1/2", "1/4"]
