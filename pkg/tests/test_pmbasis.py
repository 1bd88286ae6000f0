import numpy as np
import pytest

from appbasis.forms import check_form, normalize_to_popov, pivot_profile
from appbasis.mbasis import mbasis1
from appbasis.oracle import oracle_popov
from appbasis.pmbasis import pad_orders, pm_basis, popov_pm_basis
from appbasis.polymat import PolyMat, residual

from conftest import P, P7, pm, rand_instance

HAND_F = pm(P7, [[[1]], [[1, 1]]])  # [[1], [1 + X]]
HAND_POPOV = pm(P7, [[[1, 1], [6]], [[1], [6, 1]]])  # [[X+1, 6], [1, X+6]]


def test_sigma_one_delegates_to_base_case():
    F = rand_instance(0, 3, 2, (1, 1), P7)
    B = pm_basis(1, F, [1, 0, -1])
    M = mbasis1(F.coeff(0), [1, 0, -1], P7)
    assert B.matrix == M.matrix
    assert B.pivot_degree == M.pivot_degree


def test_unit_series_forces_power():
    F = pm(P7, [[[1]]])
    B = pm_basis(3, F, [0])
    assert B.matrix == pm(P7, [[[0, 0, 0, 1]]])  # X^3


def test_hand_instance_owp():
    B = pm_basis(2, HAND_F, [0, 0])
    assert B.pivot_degree == (1, 1)
    assert check_form(B.matrix, [0, 0], "owp")
    assert normalize_to_popov(B.matrix, (1, 1)) == HAND_POPOV


def test_rejects_overweight_input():
    F = pm(P7, [[[1, 2, 3]]])
    with pytest.raises(ValueError):
        pm_basis(2, F, [0])


def test_degree_bound_and_approximant_property():
    rng = np.random.default_rng(2)
    for seed in range(40):
        m, n = (int(x) for x in rng.integers(1, 6, size=2))
        sigma = int(rng.integers(1, 25))
        F = rand_instance(seed, m, n, (sigma,) * n)
        s = [int(x) for x in rng.integers(-6, 7, size=m)]
        B = pm_basis(sigma, F, s)
        assert B.matrix.deg <= sigma
        assert check_form(B.matrix, s, "owp")
        assert residual(B.matrix, F, (sigma,) * n, strategy="naive").is_zero()


def test_carried_shift_degree_property():
    # rdeg_s(P2 P1) = rdeg_{rdeg_s(P1)}(P2)
    rng = np.random.default_rng(3)
    for seed in range(15):
        F = rand_instance(200 + seed, 3, 2, (8, 8))
        s = [int(x) for x in rng.integers(-4, 5, size=3)]
        P1 = pm_basis(4, F.truncate(4), s)
        G = residual(P1.matrix, F, (8, 8), offsets=(4, 4))
        s2 = [a + b for a, b in zip(s, P1.pivot_degree)]
        P2 = pm_basis(4, G, s2)
        whole = P2.matrix @ P1.matrix
        assert whole.rdeg(s) == P2.matrix.rdeg(s2)


def test_pad_orders_uniform_unchanged():
    F = rand_instance(4, 2, 2, (3, 3), P7)
    sigma, G = pad_orders((3, 3), F)
    assert sigma == 3 and G == F


def test_pad_orders_scales_columns():
    F = rand_instance(5, 2, 2, (2, 1), P7)
    sigma, G = pad_orders((2, 1), F)
    assert sigma == 2
    assert G.take_cols([1]) == F.take_cols([1]).shift_cols(1)


def test_pad_orders_preserves_module():
    rng = np.random.default_rng(6)
    for seed in range(20):
        m, n = (int(x) for x in rng.integers(1, 5, size=2))
        d = tuple(int(x) for x in rng.integers(1, 8, size=n))
        F = rand_instance(300 + seed, m, n, d)
        s = [int(x) for x in rng.integers(-4, 5, size=m)]
        assert popov_pm_basis(d, F, s).matrix == oracle_popov(d, F, s).matrix


def test_popov_zero_input():
    B = popov_pm_basis((3, 3), PolyMat.zeros(P7, 2, 2), [0, 0])
    assert B.matrix == PolyMat.identity(P7, 2)
    assert B.pivot_degree == (0, 0)


def test_popov_hand_instance():
    B = popov_pm_basis((2,), HAND_F, [0, 0])
    assert B.matrix == HAND_POPOV
    assert B.pivot_degree == (1, 1)
    assert B.form == "popov"


def test_popov_matches_oracle():
    rng = np.random.default_rng(7)
    for seed in range(30):
        m, n = (int(x) for x in rng.integers(1, 6, size=2))
        d = tuple(int(x) for x in rng.integers(1, 10, size=n))
        F = rand_instance(400 + seed, m, n, d)
        s = [int(x) for x in rng.integers(-8, 9, size=m)]
        got = popov_pm_basis(d, F, s)
        ref = oracle_popov(d, F, s)
        assert got.matrix == ref.matrix and got.pivot_degree == ref.pivot_degree
        assert check_form(got.matrix, s, "popov")


def test_popov_canonical_under_column_shuffle():
    rng = np.random.default_rng(8)
    F = rand_instance(9, 3, 3, (4, 2, 5))
    s = [1, -2, 0]
    ref = popov_pm_basis((4, 2, 5), F, s)
    for _ in range(5):
        perm = rng.permutation(3)
        got = popov_pm_basis(tuple((4, 2, 5)[j] for j in perm), F.take_cols(perm), s)
        assert got.matrix == ref.matrix


def test_delta_read_equals_final_delta():
    F = rand_instance(10, 4, 2, (6, 6))
    s = [3, -1, 0, 2]
    first = pm_basis(6, F, s)
    final = popov_pm_basis((6, 6), F, s)
    assert pivot_profile(first.matrix, s).degree == final.pivot_degree
