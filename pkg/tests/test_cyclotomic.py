import cmath

from hypothesis import given, strategies as st

from balgroups.cyclotomic import CyclotomicInteger, cyclotomic_polynomial


def _numeric(z):
    return sum(c * cmath.exp(2j * cmath.pi * k / z.order) for k, c in enumerate(z.coeffs))


def test_small_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_phi_105_has_a_minus_two():
    assert -2 in cyclotomic_polynomial(105)


def test_sum_of_roots_is_zero():
    for n in (2, 3, 6, 12, 30):
        assert CyclotomicInteger.from_exponents(n, range(n)).is_zero
    assert not CyclotomicInteger.root(7, 3).is_zero


coeffs = st.integers(-3, 3)


@given(st.sampled_from([3, 4, 5, 8, 12, 15, 24]), st.data())
def test_zero_test_matches_numerics(n, data):
    c = data.draw(st.lists(coeffs, min_size=n, max_size=n))
    z = CyclotomicInteger(n, tuple(c))
    # integer combinations of roots of unity: a tiny modulus means zero
    assert z.is_zero == (abs(_numeric(z)) < 1e-9)


@given(st.sampled_from([4, 6, 12]), st.data())
def test_ring_identities(n, data):
    a, b, c = (CyclotomicInteger(n, tuple(data.draw(st.lists(coeffs, min_size=n, max_size=n)))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero
    assert a * b == b * a
    assert a.lift(2 * n) == a
    assert abs(_numeric(a * b) - _numeric(a) * _numeric(b)) < 1e-6
