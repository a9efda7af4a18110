import cmath
import math

import pytest

from balgroups.characters import (
    all_characters,
    c_chi,
    c_chi_nonvanishing,
    c_chi_via_reduction,
    character,
    conductor,
    evaluate,
    induce,
    is_odd,
    is_primitive,
    is_trivial_on,
    primitive_inducing,
    trivial_character,
)
from balgroups.unitgroup import cyclic_subgroup

from conftest import units


def quadratic(r):
    return character(r, [(r - 1) // 2])


def test_counts():
    assert len(all_characters(3)) == 2
    assert len(all_characters(8)) == 4
    chars = all_characters(24)
    assert len(chars) == 8
    assert all(chi.value_order == 2 for chi in chars)
    assert chars[0].is_trivial


def test_evaluate_examples():
    assert evaluate(trivial_character(15), 7) == 0
    chi = character(4, [1])
    assert evaluate(chi, 3) == chi.value_order // 2
    assert evaluate(character(15, [1, 1]), 5) is None


def test_parity_examples():
    assert not is_odd(trivial_character(7))
    assert is_odd(character(4, [1]))
    assert is_odd(character(5, [1]))


def test_trivial_on_examples():
    H1 = cyclic_subgroup(24, 1)
    for chi in all_characters(24):
        assert is_trivial_on(chi, H1)
        assert is_trivial_on(trivial_character(24), cyclic_subgroup(24, chi.modulus - 1))
    H = cyclic_subgroup(24, 17)
    flip = [chi for chi in all_characters(24) if evaluate(chi, 17) == 1]
    assert flip and not any(is_trivial_on(chi, H) for chi in flip)


@pytest.mark.parametrize("d", range(3, 120))
def test_characters_are_homomorphisms(d):
    us = units(d)
    for chi in all_characters(d):
        n = chi.value_order
        for a in us[:6]:
            for b in us[-6:]:
                assert evaluate(chi, a * b) == (evaluate(chi, a) + evaluate(chi, b)) % n


@pytest.mark.parametrize("d", [5, 7, 8, 9, 12, 16, 21, 45])
def test_orthogonality(d):
    chars = all_characters(d)
    for a in units(d)[1:]:
        s = sum(cmath.exp(2j * cmath.pi * evaluate(chi, a) / chi.value_order) for chi in chars)
        assert abs(s) < 1e-9


def test_conductor_examples():
    assert conductor(trivial_character(12)) == 1
    chi = induce(quadratic(3), 12)
    assert conductor(chi) == 3
    assert is_primitive(character(5, [1]))
    assert conductor(character(5, [1])) == 5


def test_primitive_inducing_examples():
    chi = character(5, [1])
    assert primitive_inducing(chi) == chi
    base = primitive_inducing(induce(quadratic(3), 12))
    assert base.modulus == 3 and base.exponents == (1,)
    assert primitive_inducing(trivial_character(12)).modulus == 1


@pytest.mark.parametrize("d", range(3, 80))
def test_induced_agrees_on_units(d):
    for chi in all_characters(d):
        p = primitive_inducing(chi)
        assert d % p.modulus == 0
        for a in units(d):
            if p.modulus > 1:
                assert evaluate(chi, a) * p.value_order == evaluate(p, a) * chi.value_order
            else:
                assert evaluate(chi, a) == 0


def test_c_chi_examples():
    assert c_chi(character(4, [1])) == 1
    for chi in all_characters(20):
        if not chi.is_trivial and not is_odd(chi):
            assert c_chi(chi).is_zero


def test_reduction_examples():
    chi = character(7, [1])
    assert c_chi_via_reduction(chi) == c_chi(chi)
    # induced from mod 3 up to mod 12: the a = 1, 5 terms cancel
    chi12 = induce(quadratic(3), 12)
    assert c_chi(chi12).is_zero
    assert c_chi_via_reduction(chi12).is_zero
    # induced from the quadratic character mod 11, which is 1 at 5
    chi55 = induce(quadratic(11), 55)
    assert is_odd(chi55) and evaluate(quadratic(11), 5) == 0
    assert c_chi(chi55).is_zero
    assert c_chi_via_reduction(chi55).is_zero


def test_nonvanishing_examples():
    assert c_chi_nonvanishing(character(5, [1]))
    assert not c_chi_nonvanishing(induce(quadratic(3), 12))
    assert not c_chi_nonvanishing(induce(quadratic(11), 55))
    with pytest.raises(ValueError):
        c_chi_nonvanishing(trivial_character(7))


@pytest.mark.parametrize("d", range(3, 130))
def test_nonvanishing_predicate_exact(d):
    for chi in all_characters(d):
        if is_odd(chi):
            assert c_chi_nonvanishing(chi) == (not c_chi(chi).is_zero)
            assert c_chi_via_reduction(chi) == c_chi(chi)


def test_numeric_value_of_c_chi():
    # c_chi as a complex number equals the half-range sum of values
    for chi in all_characters(21):
        z = c_chi(chi)
        num = sum(c * cmath.exp(2j * cmath.pi * k / z.order) for k, c in enumerate(z.coeffs))
        direct = sum(
            cmath.exp(2j * cmath.pi * evaluate(chi, a) / chi.value_order)
            for a in range(1, 11)
            if math.gcd(a, 21) == 1
        )
        assert abs(num - direct) < 1e-9
