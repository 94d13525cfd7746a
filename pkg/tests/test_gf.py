import numpy as np
import pytest

from hirzcodes import errors
from hirzcodes.gf import Field, field_new, field_of_size


def test_gf4_multiplication_table():
    f = field_new(2, 2)
    # indices: 0, 1, x -> 2, x+1 -> 3, modulo x^2 + x + 1
    assert f.mul(2, 2) == 3
    assert f.mul(2, 3) == 1
    assert f.mul(3, 3) == 2
    assert f.add(2, 3) == 1
    assert f.inv(2) == 3 and f.inv(3) == 2


def test_gf9_uses_x_squared_plus_one():
    f = field_new(3, 2)
    assert f.modulus == (1, 0, 1)
    # element 3 is x; x^2 = -1 = 2
    assert f.mul(3, 3) == 2


def test_prime_field_arithmetic_matches_integers_mod_p():
    f = field_new(7, 1)
    for x in range(7):
        for y in range(7):
            assert f.add(x, y) == (x + y) % 7
            assert f.mul(x, y) == (x * y) % 7


def test_log_tables_match_polynomial_oracle():
    for (p, m) in [(2, 3), (3, 2), (5, 2)]:
        f = field_new(p, m)
        rng = np.random.default_rng(0)
        for _ in range(50):
            x, y = (int(v) for v in rng.integers(0, f.q, 2))
            assert f.mul(x, y) == f._mul_slow(x, y)


def test_vectorized_ops_match_scalar():
    for (p, m) in [(2, 2), (3, 2), (2, 3), (5, 1)]:
        f = field_new(p, m)
        xs = np.arange(f.q, dtype=np.int64)
        for y in range(f.q):
            got = f.add_arr(xs, np.int64(y))
            want = np.array([f.add(int(x), y) for x in xs])
            assert np.array_equal(got, want)
            got = f.mul_arr(xs, np.int64(y))
            want = np.array([f.mul(int(x), y) for x in xs])
            assert np.array_equal(got, want)


def test_power_convention_zero_to_zero_is_one():
    f = field_new(2, 2)
    assert f.pow_conv(0, 0) == 1
    assert f.pow_conv(0, 3) == 0
    assert np.array_equal(f.pow_arr(np.array([0, 1, 2]), 0), np.array([1, 1, 1]))
    with pytest.raises(errors.ZeroToNegativePower):
        f.pow_conv(0, -1)


def test_inverse_of_zero_raises():
    f = field_new(3, 1)
    with pytest.raises(errors.DivisionByZero):
        f.inv(0)
    with pytest.raises(errors.DivisionByZero):
        f.inv_arr(np.array([1, 0]))


def test_element_order_starts_zero_one():
    f = field_new(2, 2)
    assert f.alpha(1) == 0 and f.alpha(2) == 1
    assert list(f.element_order) == [0, 1, 2, 3]


def test_invalid_parameters():
    with pytest.raises(errors.NotPrime):
        Field(4, 1)
    with pytest.raises(errors.FieldTooLarge):
        Field(2, 17)
    with pytest.raises(errors.NotPrime):
        field_of_size(6)


def test_field_of_size_and_cache():
    assert field_of_size(8).q == 8
    assert field_of_size(49).q == 49
    assert field_new(2, 2) is field_new(2, 2)


def test_modulus_search_matches_table():
    from hirzcodes.gf import _search_modulus

    assert _search_modulus(2, 2) == (1, 1, 1)
    assert _search_modulus(3, 2) == (1, 0, 1)
    assert _search_modulus(2, 4) == (1, 1, 0, 0, 1)


def test_custom_modulus_gives_distinct_field():
    f1 = Field(3, 2)
    f2 = Field(3, 2, modulus=(2, 2, 1))  # x^2 + 2x + 2, also irreducible
    assert f1 != f2
    assert f1 == Field(3, 2)
    assert f1.serialize() == "3 2 1-0-1"


def test_reducible_modulus_rejected():
    with pytest.raises(errors.FieldTooLarge):
        Field(2, 2, modulus=(0, 1, 1))  # x^2 + x = x(x+1)


def test_generator_has_full_order():
    for q in (4, 8, 9, 25):
        f = field_of_size(q)
        seen = set()
        acc = 1
        for _ in range(q - 1):
            seen.add(acc)
            acc = f.mul(acc, f.generator)
        assert len(seen) == q - 1 and acc == 1
