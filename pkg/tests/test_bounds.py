from fractions import Fraction

import pytest

from weighcodes.bounds import (
    bw_derived_bound,
    bw_distances,
    bw_params,
    bw_range,
    family_chain,
    family_upper,
    johnson_restricted,
    johnson_step,
    t1_upper,
)
from weighcodes.errors import ConditionViolated, NonIntegerLambda, NotOddPrimePower

PRIMES_UP_TO_13 = [3, 5, 7, 9, 11, 13]


def test_johnson_restricted_examples():
    r = johnson_restricted(12, 9, 8)
    assert (r.value, r.numerator, r.denominator) == (9, 216, 24)
    r = johnson_restricted(9, 6, 8)
    assert (r.value, r.denominator) == (9, 9 + 3)
    r = johnson_restricted(13, 9, 9)
    assert (r.applicable, r.value, r.numerator, r.denominator) == (True, 26, 234, 9)


def test_johnson_restricted_not_applicable():
    r = johnson_restricted(10, 1, 5)
    assert not r.applicable and r.value is None
    assert "not applicable" in r.detail


def test_johnson_step_examples():
    assert johnson_step(13, 9, 9, 9) == 26
    assert johnson_step(10, 6, 9, 9) == 20
    assert johnson_step(7, 3, 4, 0) == 0
    assert johnson_step(5, 3, 3, 4) == 13  # floor(40/3)


def _eq1_oracle(n, d, w):
    den = Fraction(3 * w * w - 4 * n * w + 2 * n * d)
    if den <= 0:
        return None
    q = Fraction(2 * n * d) / den
    return q.numerator // q.denominator


def test_johnson_non_increasing_in_d():
    for n in range(1, 61):
        for w in range(0, n + 1):
            prev = None
            for d in range(0, 2 * w + 1):
                r = johnson_restricted(n, d, w)
                assert r.value == _eq1_oracle(n, d, w)
                if r.applicable and prev is not None:
                    assert r.value <= prev
                if r.applicable:
                    prev = r.value


@pytest.mark.parametrize("p, m, value", [(3, 1, 9), (3, 2, 27), (5, 1, 25)])
def test_t1_upper(p, m, value):
    assert t1_upper(p, m) == value


def test_t1_parameters_for_five():
    assert johnson_restricted(30, 20, 24).value == 25
    assert johnson_restricted(39, 27, 26).value == 27


@pytest.mark.parametrize("p, m, value", [(3, 2, 26), (3, 3, 80), (5, 1, 12), (3, 1, 8), (9, 1, 20)])
def test_family_upper(p, m, value):
    assert family_upper(p, m) == value


def test_family_chain_shape():
    first, step = family_chain(3, 2)
    assert (first.name, first.n, first.d, first.w, first.value) == ("johnson_restricted", 12, 9, 8, 9)
    assert (step.name, step.n, step.d, step.w, step.inner, step.value) == ("johnson_step", 13, 9, 9, 9, 26)


@pytest.mark.parametrize("p", PRIMES_UP_TO_13)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_closed_forms_hold(p, m):
    n = (p ** (m + 1) - 1) // (p - 1)
    assert t1_upper(p, m) == p ** (m + 1)
    assert family_upper(p, m) == 2 * n


@pytest.mark.parametrize("p", [2, 4, 6, 1])
def test_family_rejects_even(p):
    with pytest.raises(NotOddPrimePower):
        family_upper(p, 1)
    with pytest.raises(NotOddPrimePower):
        t1_upper(p, 1)


def test_bw_params():
    assert bw_params(19, 9).lam == 4
    assert bw_params(12, 1).lam == 0
    assert bw_params(10, 9).lam == 8
    assert not bw_params(7, 3).lam_even  # (7,3,1) is a design but cannot be signed
    with pytest.raises(NonIntegerLambda):
        bw_params(20, 9)
    with pytest.raises(ValueError):
        bw_params(3, 3)


def test_bw_distances():
    assert bw_distances(19, 9) == (10, 12)
    assert bw_distances(10, 9)[1] == 6 == (9 + 3) // 2
    assert bw_distances(8, 1) == (2, 2)
    assert bw_distances(13, 9) == (6, 9)


def test_bw_derived_bound():
    assert bw_derived_bound(19, 9) == 9
    assert bw_derived_bound(10, 9) == 9
    # family member m = 1 of the 9-power series: v = 1 + 18 * (81 - 1) / 8
    v, k = 1 + 18 * (9**2 - 1) // 8, 9**2
    assert (v, bw_distances(v, k)[1]) == (181, 12 * 9)
    assert bw_derived_bound(v, k) == 81


def test_bw_range():
    assert bw_range(19, 9) == (19, 30)
    with pytest.raises(ConditionViolated):
        bw_range(4, 3)
    # (3k - 1)/2 = 13 exactly, so the condition fails at v = 13
    with pytest.raises(ConditionViolated):
        bw_range(13, 9)


@pytest.mark.parametrize("v, k", [(19, 9), (10, 9), (6, 5), (31, 25), (121, 81)])
def test_bw_range_below_twice_v(v, k):
    if 2 * v > 3 * k - 1:
        lo, hi = bw_range(v, k)
        assert lo == v <= hi < 2 * v
