import math

import pytest
from hypothesis import given, strategies as st

from balgroups.unitgroup import (
    all_subgroups,
    check_structure,
    cosets,
    cyclic_subgroup,
    discrete_log,
    full_group,
    subgroup_generated,
    unit_group,
)

from conftest import units


def test_structure_examples():
    assert [(c.prime_power, c.generator, c.order) for c in unit_group(8).components] == [(8, 7, 2), (8, 5, 2)]
    assert [(c.prime_power, c.generator, c.order) for c in unit_group(5).components] == [(5, 2, 4)]
    assert [(c.prime_power, c.generator, c.order) for c in unit_group(12).components] == [(4, 3, 2), (3, 2, 2)]


def test_structure_rejects_small():
    with pytest.raises(ValueError):
        unit_group(2)


@pytest.mark.parametrize("d", range(3, 300))
def test_structure_is_a_basis(d):
    s = unit_group(d)
    check_structure(s)
    assert s.order == len(units(d))
    assert sorted(s.units()) == units(d)


def test_discrete_log_examples():
    assert discrete_log(unit_group(5), 1) == (0,)
    assert discrete_log(unit_group(5), 4) == (2,)
    assert discrete_log(unit_group(8), 7) == (1, 0)


@given(st.integers(3, 2000), st.integers(1, 10**6))
def test_discrete_log_roundtrip(d, a):
    if math.gcd(a, d) != 1:
        return
    s = unit_group(d)
    assert s.element(discrete_log(s, a)) == a % d


def test_cyclic_examples():
    assert set(cyclic_subgroup(8, 3).elements) == {1, 3}
    H = cyclic_subgroup(44, 3)
    assert len(H) == 10 and 23 in H
    assert set(cyclic_subgroup(4, -1).elements) == {1, 3}


def test_generated_examples():
    assert len(subgroup_generated(13, [3, -1])) == 6
    assert set(subgroup_generated(9, [1]).elements) == {1}
    assert set(subgroup_generated(5, [2]).elements) == {1, 2, 3, 4}


def test_coset_examples():
    got = [set(c) for c in cosets(24, cyclic_subgroup(24, 17))]
    assert got == [{1, 17}, {5, 13}, {7, 23}, {11, 19}]
    assert [set(c) for c in cosets(8, cyclic_subgroup(8, 3))] == [{1, 3}, {5, 7}]
    assert len(cosets(15, full_group(15))) == 1


@given(st.integers(3, 500), st.lists(st.integers(1, 10**4), min_size=1, max_size=3))
def test_subgroup_closure(d, gens):
    gens = [g for g in gens if math.gcd(g, d) == 1] or [1]
    H = subgroup_generated(d, gens)
    els = set(H.elements)
    assert 1 in els
    assert all(a * b % d in els for a in els for b in els)
    assert len(units(d)) % len(H) == 0
    cs = cosets(d, H)
    assert sorted(x for c in cs for x in c) == units(d)


@pytest.mark.parametrize("d", [8, 15, 16, 24, 40, 48, 63, 72, 105])
def test_all_subgroups_complete(d):
    subs = all_subgroups(d)
    sets = {H.elements for H in subs}
    assert len(sets) == len(subs)
    # every pair of cyclic subgroups generates something on the list
    us = units(d)
    for a in us:
        for b in us[:8]:
            assert subgroup_generated(d, [a, b]).elements in sets
