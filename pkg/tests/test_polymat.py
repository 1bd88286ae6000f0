import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from appbasis.polymat import NEG_INF, PolyMat, check_orders, drop_zero_orders, residual

from conftest import P, P7, pm, rand_instance


def test_zero_degree_sentinel():
    Z = PolyMat.zeros(P7, 2, 2)
    assert Z.deg is NEG_INF
    assert Z.is_zero()
    assert Z.rdeg() == [NEG_INF, NEG_INF]
    assert NEG_INF < -10**9


def test_identity_and_eq():
    I = PolyMat.identity(P7, 3)
    assert I @ I == I
    assert I.deg == 0


def test_mul_identity():
    B = rand_instance(1, 2, 3, (5, 5, 5), P7)
    assert PolyMat.identity(P7, 2) @ B == B


def test_mul_1x1_hand():
    a = pm(P7, [[[1, 1]]])  # X + 1
    b = pm(P7, [[[6, 1]]])  # X + 6
    assert a @ b == pm(P7, [[[6, 0, 1]]])  # X^2 + 6


def test_mul_degree_bound():
    A = rand_instance(2, 2, 2, (4, 4))
    B = rand_instance(3, 2, 2, (3, 3))
    assert (A @ B).deg <= A.deg + B.deg


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_mul_associative_distributive(seed):
    rng = np.random.default_rng(seed)
    dims = [int(x) for x in rng.integers(1, 4, size=4)]
    degs = [int(x) for x in rng.integers(1, 7, size=3)]
    A = PolyMat.random(P7, dims[0], dims[1], (degs[0],) * dims[1], rng)
    B = PolyMat.random(P7, dims[1], dims[2], (degs[1],) * dims[2], rng)
    C = PolyMat.random(P7, dims[2], dims[3], (degs[2],) * dims[3], rng)
    D = PolyMat.random(P7, dims[2], dims[3], (degs[2],) * dims[3], rng)
    assert (A @ B) @ C == A @ (B @ C)
    assert B @ (C + D) == B @ C + B @ D


def test_rdeg_cdeg_shifts():
    M = pm(P7, [[[0, 1], [3]], [[0], [1]]])  # [[X, 3], [0, 1]]
    assert M.rdeg() == [1, 0]
    assert M.rdeg((0, 5)) == [5, 5]
    assert M.cdeg() == [1, 0]


def test_truncate_and_shift_cols():
    M = pm(P7, [[[1, 2, 3, 4]]])
    assert M.truncate(2) == pm(P7, [[[1, 2]]])
    assert M.truncate((10,)) == M
    assert M.shift_cols(1) == pm(P7, [[[0, 1, 2, 3, 4]]])
    assert M.shift_cols(-2) == pm(P7, [[[3, 4]]])
    assert M.shift_cols(-2).shift_cols(2).truncate(4) != M  # low coeffs lost


def test_shift_rows():
    M = pm(P7, [[[1]], [[2]]])
    S = M.shift_rows((1, 0))
    assert S == pm(P7, [[[0, 1]], [[2]]])
    with pytest.raises(ValueError):
        M.shift_rows((-1, 0))


def test_stacking_and_take():
    A = rand_instance(5, 2, 2, (3, 3), P7)
    B = rand_instance(6, 2, 2, (5, 5), P7)
    H = PolyMat.hstack([A, B])
    V = PolyMat.vstack([A, B])
    assert (H.m, H.n) == (2, 4)
    assert (V.m, V.n) == (4, 2)
    assert H.take_cols([2, 3]) == B
    assert V.take_rows([0, 1]) == A
    assert A.take([1], [0]) == A.row(1).take_cols([0])


def test_check_orders():
    assert check_orders((3, 1)) == (3, 1)
    with pytest.raises(ValueError):
        check_orders((3, 0))


def test_drop_zero_orders():
    F = rand_instance(7, 2, 3, (2, 2, 2), P7)
    d, G = drop_zero_orders((2, 0, 1), F)
    assert d == (2, 1)
    assert G == F.take_cols([0, 2])


def test_residual_identity():
    F = rand_instance(8, 2, 2, (4, 3), P7)
    R = residual(PolyMat.identity(P7, 2), F, (4, 3))
    assert R == F.truncate((4, 3))


def test_residual_hand():
    Pm = pm(P7, [[[0, 1], [0]], [[6], [1]]])  # [[X, 0], [6, 1]]
    F = pm(P7, [[[1]], [[1, 1]]])  # [[1], [1 + X]]
    R = residual(Pm, F, (2,), offsets=(1,))
    assert R == pm(P7, [[[1]], [[1]]])  # P F = [X, X]^T; X^{-1} trunc -> [1, 1]


def test_residual_strategies_agree():
    rng = np.random.default_rng(3)
    for _ in range(30):
        m, k, n = (int(x) for x in rng.integers(1, 5, size=3))
        d = tuple(int(x) for x in rng.integers(1, 12, size=n))
        offs = tuple(int(rng.integers(0, dj + 1)) for dj in d)
        Pm = PolyMat.random(P, m, k, (int(rng.integers(1, 9)),) * k, rng)
        F = PolyMat.random(P, k, n, d, rng)
        ref = residual(Pm, F, d, offsets=offs, strategy="naive")
        assert residual(Pm, F, d, offsets=offs, strategy="split_rhs") == ref
        assert residual(Pm, F, d, offsets=offs, strategy="split_lhs") == ref


def test_residual_bad_offsets():
    F = rand_instance(9, 2, 1, (2,), P7)
    with pytest.raises(ValueError):
        residual(PolyMat.identity(P7, 2), F, (2,), offsets=(3,))


def test_random_instance_respects_orders():
    F = rand_instance(10, 3, 3, (4, 2, 1))
    degs = F.entry_degrees()
    assert (degs[:, 0] < 4).all() and (degs[:, 1] < 2).all() and (degs[:, 2] < 1).all()
