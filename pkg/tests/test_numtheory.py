import math

import pytest
from hypothesis import given, strategies as st

from balgroups.numtheory import (
    carmichael_lambda,
    euler_phi,
    factorize,
    factorize_spf,
    is_prime,
    multiplicative_order,
    spf_sieve,
    v2,
    v2_pow_minus_one,
    valuation,
)

from conftest import brute_order, units


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(24).factors == ((2, 3), (3, 1))
    assert factorize(30031).factors == ((59, 1), (509, 1))


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-5)


def test_factorize_large_semiprime():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q).factors == ((p, 1), (q, 1))


@given(st.integers(1, 10**12))
def test_factorize_product(n):
    f = factorize(n)
    assert math.prod(r**e for r, e in f.factors) == n
    assert all(is_prime(r) for r in f.primes)
    assert list(f.primes) == sorted(f.primes)


def test_spf_matches_trial_division():
    spf = spf_sieve(5000)
    for n in range(1, 5001):
        assert factorize_spf(n, spf) == factorize(n).factors


def test_phi_and_lambda_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(5040) == 1152
    assert carmichael_lambda(8) == 2
    assert carmichael_lambda(24) == 2
    assert carmichael_lambda(60) == 4


@pytest.mark.parametrize("n", range(1, 400))
def test_phi_lambda_brute(n):
    us = units(n) if n > 1 else [0]
    assert euler_phi(n) == (len(us) if n > 1 else 1)
    if n > 2:
        assert carmichael_lambda(n) == max(brute_order(a, n) for a in us)


def test_order_examples():
    assert multiplicative_order(3, 8) == 2
    assert multiplicative_order(3, 5) == 4
    assert multiplicative_order(81, 5) == 1
    assert multiplicative_order(-3, 7) == brute_order(-3, 7)
    with pytest.raises(ValueError):
        multiplicative_order(2, 8)


@given(st.integers(3, 3000), st.integers(-10**6, 10**6))
def test_order_brute(n, a):
    if math.gcd(a, n) != 1:
        return
    assert multiplicative_order(a, n) == brute_order(a, n)


def test_valuation_examples():
    assert valuation(2, 80) == 4
    assert valuation(2, 7) == 0
    assert valuation(3, 54) == 3
    assert v2_pow_minus_one(3, 4) == 4
    assert v2_pow_minus_one(3, 6) == 3
    assert v2_pow_minus_one(3, 5) == 1


def test_v2_pow_minus_one_rejects_even_base():
    with pytest.raises(ValueError):
        v2_pow_minus_one(4, 3)


@given(st.integers(-101, 101).filter(lambda p: p % 2 and abs(p) > 1), st.integers(1, 200))
def test_v2_closed_form(p, k):
    n = abs(p**k - 1)
    assert v2_pow_minus_one(p, k) == (n & -n).bit_length() - 1
    assert v2(p**k - 1) == v2_pow_minus_one(p, k)
