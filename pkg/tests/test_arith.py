"""Integer plumbing: frozen values and algebraic properties."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dccc import RangeError, divisors, factorize, gcd, is_prime_power, lcm, lcm_range

# lcm(1..k-1) for k = 3..15
LCM_RANGE_TABLE = {
    3: 2, 4: 6, 5: 12, 6: 60, 7: 60, 8: 420, 9: 840,
    10: 2520, 11: 2520, 12: 27720, 13: 27720, 14: 360360, 15: 360360,
}


def test_factorize_known_values():
    assert factorize(1) == {}
    assert factorize(840) == {2: 3, 3: 1, 5: 1, 7: 1}
    assert factorize(27720) == {2: 3, 3: 2, 5: 1, 7: 1, 11: 1}
    assert factorize(2) == {2: 1}


def test_factorize_rejects_out_of_range():
    with pytest.raises(RangeError):
        factorize(0)
    with pytest.raises(RangeError):
        factorize(2**63)


@given(st.integers(1, 10**6))
@settings(max_examples=200)
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac.items()) == n
    assert all(e >= 1 for e in fac.values())
    primes = list(fac)
    assert primes == sorted(primes)
    assert all(factorize(p) == {p: 1} for p in primes)


def test_divisors_known_values():
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


@given(st.integers(1, 10**6))
@settings(max_examples=200)
def test_divisors_properties(n):
    divs = divisors(n)
    assert divs == sorted(set(divs))
    assert all(n % d == 0 for d in divs)
    assert len(divs) == math.prod(e + 1 for e in factorize(n).values())


def test_is_prime_power_known_values():
    assert is_prime_power(8)
    assert not is_prime_power(6)
    assert not is_prime_power(1)


@given(st.integers(1, 10**5))
@settings(max_examples=200)
def test_is_prime_power_matches_factorization(n):
    assert is_prime_power(n) == (len(factorize(n)) == 1)


def test_lcm_range_table():
    for k, expected in LCM_RANGE_TABLE.items():
        assert lcm_range(k) == expected
    assert lcm_range(2) == 1


def test_lcm_range_bounds():
    with pytest.raises(RangeError):
        lcm_range(1)
    with pytest.raises(RangeError):
        lcm_range(32)


def test_lcm_range_monotone_and_divisible():
    previous = 0
    for k in range(2, 32):
        value = lcm_range(k)
        assert value >= previous
        assert all(value % d == 0 for d in range(1, k))
        previous = value


@given(st.integers(1, 10**9), st.integers(1, 10**9))
@settings(max_examples=200)
def test_gcd_lcm_product_identity(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b
