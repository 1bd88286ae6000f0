import pytest
from hypothesis import given, strategies as st

from appbasis import config
from appbasis.field import (
    field_arith,
    inv_mod,
    is_prime,
    root_of_unity,
    two_adicity,
    validate_modulus,
)


def test_add_mod7():
    assert field_arith(3, 5, "add", 7) == 1


def test_inv_mod7():
    assert field_arith(3, None, "inv", 7) == 5
    assert 3 * 5 % 7 == 1


def test_neg_zero():
    assert field_arith(0, None, "neg", 7) == 0


def test_sub_mul():
    assert field_arith(2, 5, "sub", 7) == 4
    assert field_arith(4, 5, "mul", 7) == 6


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inv_mod(0, 7)


def test_unknown_op():
    with pytest.raises(ValueError):
        field_arith(1, 1, "div", 7)


@given(st.integers(1, 6))
def test_inverse_property_mod7(a):
    assert a * inv_mod(a, 7) % 7 == 1


def test_validate_modulus_accepts_defaults():
    assert validate_modulus(7) == 7
    assert validate_modulus(config.DEFAULT_MODULUS) == config.DEFAULT_MODULUS
    assert validate_modulus((1 << 61) - 1) == (1 << 61) - 1


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 1 << 62, (1 << 62) + 1, 6])
def test_validate_modulus_rejects(bad):
    with pytest.raises(ValueError):
        validate_modulus(bad)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 998244353, (1 << 61) - 1}
    for q in primes:
        assert is_prime(q)
    for q in (0, 1, 4, 91, 561, 998244353 * 3):
        assert not is_prime(q)


def test_two_adicity_default_modulus():
    assert two_adicity(998244353) == 23


def test_root_of_unity_orders():
    for L in (1, 2, 8, 1024):
        w = root_of_unity(998244353, L)
        assert pow(w, L, 998244353) == 1
        if L > 1:
            assert pow(w, L // 2, 998244353) == 998244353 - 1


def test_root_of_unity_unavailable():
    with pytest.raises(ValueError):
        root_of_unity(7, 4)  # 7 - 1 = 6 has 2-adicity 1
    with pytest.raises(ValueError):
        root_of_unity(998244353, 3)  # not a power of two
