import itertools

import numpy as np
import pytest

from weighcodes.errors import (
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    NotPrimePower,
)
from weighcodes.finite_field import (
    FiniteField,
    PrimePower,
    add,
    chi,
    factor_prime_power,
    field_new,
    inv,
    mul,
    neg,
    smallest_irreducible,
)

from conftest import ODD_PRIME_POWERS


@pytest.mark.parametrize(
    "q, expected",
    [(9, PrimePower(9, 3, 2)), (3, PrimePower(3, 3, 1)), (2, PrimePower(2, 2, 1)),
     (243, PrimePower(243, 3, 5)), (49, PrimePower(49, 7, 2))],
)
def test_factor_prime_power(q, expected):
    assert factor_prime_power(q) == expected


@pytest.mark.parametrize("q", [12, 6, 1, 0, -9, 15, 100])
def test_factor_rejects_non_prime_powers(q):
    with pytest.raises(NotPrimePower):
        factor_prime_power(q)


def test_field_new_rejects_six():
    with pytest.raises(NotPrimePower):
        field_new(6)


def test_prime_field_arithmetic():
    f = field_new(3)
    assert f.modulus == (0, 1)
    assert add(f(1), f(2)) == f(0)
    assert inv(f(2)) == f(2)
    assert mul(f(2), f(2)) == f(1)
    assert neg(f(1)) == f(2)
    for a, b in itertools.product(range(3), repeat=2):
        assert (f(a) + f(b)).index == (a + b) % 3
        assert (f(a) * f(b)).index == (a * b) % 3


def test_gf9_modulus_matches_enumeration_oracle():
    # first monic quadratic over GF(3), constant term compared first, without a root
    for c0, c1 in itertools.product(range(3), repeat=2):
        if all((x * x + c1 * x + c0) % 3 for x in range(3)):
            oracle = (c0, c1, 1)
            break
    assert field_new(9).modulus == oracle == (1, 0, 1)


def _gf9_mul_oracle(a, b):
    """Multiply a0 + a1 i and b0 + b1 i with i^2 = -1 over GF(3)."""
    a0, a1 = a % 3, a // 3
    b0, b1 = b % 3, b // 3
    c0 = (a0 * b0 - a1 * b1) % 3
    c1 = (a0 * b1 + a1 * b0) % 3
    return c0 + 3 * c1


def test_gf9_multiplication_against_oracle():
    f = field_new(9)
    for a, b in itertools.product(range(9), repeat=2):
        assert (f(a) * f(b)).index == _gf9_mul_oracle(a, b)


def test_gf9_squares():
    f = field_new(9)
    squares = {mul(a, a) for a in f.elements}
    assert len(squares) == (9 + 1) // 2
    assert f.zero in squares


def test_chi_small_values():
    f3 = field_new(3)
    assert chi(f3, f3(1)) == 1
    assert chi(f3, f3(2)) == -1
    assert chi(f3, f3(0)) == 0
    f9 = field_new(9)
    assert chi(f9, neg(f9.one)) == 1


@pytest.mark.parametrize("q", [5, 7, 9, 25, 27])
def test_chi_matches_brute_force_squares(q):
    f = field_new(q)
    squares = {(a * a).index for a in f.elements if a.index}
    for x in f.elements:
        want = 0 if x.index == 0 else (1 if x.index in squares else -1)
        assert chi(f, x) == want


@pytest.mark.parametrize("q", ODD_PRIME_POWERS)
def test_chi_multiplicative_and_balanced(q):
    f = field_new(q)
    idx = np.arange(q)
    a, b = np.meshgrid(idx, idx)
    assert np.array_equal(f.chi_idx(f.mul_idx(a, b)), f.chi_idx(a) * f.chi_idx(b))
    values = f.chi_idx(idx)
    assert values.sum() == 0
    assert np.count_nonzero(values == 1) == np.count_nonzero(values == -1) == (q - 1) // 2


@pytest.mark.parametrize("q", [3, 5, 9, 25, 27, 49])
def test_field_axioms(q):
    f = field_new(q)
    els = f.elements
    assert f(0).index == 0 and f(1).index == 1
    for x in els:
        assert x ** q == x
        assert x + f.zero == x and x * f.one == x
        assert x + (-x) == f.zero
        if x.index:
            assert x * x.inverse() == f.one
    rng = np.random.default_rng(0)
    for a, b, c in rng.integers(0, q, size=(200, 3)):
        x, y, z = f(a), f(b), f(c)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_inverse_of_zero():
    f = field_new(5)
    with pytest.raises(ZeroDivisionError):
        inv(f.zero)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        field_new(3)(1) + field_new(5)(1)
    with pytest.raises(FieldMismatch):
        chi(field_new(3), field_new(5)(1))


def test_even_characteristic_has_no_character():
    f = field_new(4)
    with pytest.raises(EvenCharacteristic):
        chi(f, f(1))


def test_construction_is_deterministic():
    a, b = FiniteField(27), FiniteField(27)
    assert a.modulus == b.modulus
    assert np.array_equal(a._exp, b._exp)
    idx = np.arange(27)
    x, y = np.meshgrid(idx, idx)
    assert np.array_equal(a.mul_idx(x, y), b.mul_idx(x, y))
    assert np.array_equal(a.add_idx(x, y), b.add_idx(x, y))


def test_field_cap():
    with pytest.raises(FieldTooLarge):
        FiniteField(27, cap=25)


def test_smallest_irreducible_degree_three():
    poly = smallest_irreducible(3, 3)
    # no root in GF(3) means irreducible for a cubic
    assert all(sum(c * x**k for k, c in enumerate(poly)) % 3 for x in range(3))
    earlier = [
        low + (1,) for low in itertools.product(range(3), repeat=3) if low + (1,) < poly
    ]
    for cand in earlier:
        assert any(sum(c * x**k for k, c in enumerate(cand)) % 3 == 0 for x in range(3))
