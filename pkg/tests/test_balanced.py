import math

import pytest
from hypothesis import given, strategies as st

from balgroups.balanced import (
    HYPOTHESES_NOT_MET,
    IN_BP0,
    NOT_BALANCED,
    cyclic_verdict,
    is_balanced_characters,
    is_balanced_definition,
    is_balanced_fast,
    order2_scan,
    order_two_elements,
    prime_power_type,
    prop_crit_conclusion,
    subgroup_verdict,
)
from balgroups.census import in_B_p0
from balgroups.characters import evaluate, is_odd
from balgroups.unitgroup import all_subgroups, cyclic_subgroup, subgroup_generated

from conftest import units

DECIDERS = (is_balanced_definition, is_balanced_characters, is_balanced_fast)


def test_definition_examples():
    assert is_balanced_definition(24, cyclic_subgroup(24, 17)).balanced
    v = is_balanced_definition(8, cyclic_subgroup(8, 3))
    assert not v.balanced and set(v.witness) == {1, 3}
    for d in range(3, 101):
        assert is_balanced_definition(d, cyclic_subgroup(d, -1)).balanced


def test_character_examples():
    assert is_balanced_characters(4, cyclic_subgroup(4, 3)).balanced
    v = is_balanced_characters(8, cyclic_subgroup(8, 3))
    assert not v.balanced
    chi = v.witness
    assert is_odd(chi) and evaluate(chi, 3) == 0
    assert is_balanced_characters(60, cyclic_subgroup(60, 49)).balanced


def test_fast_examples():
    assert is_balanced_fast(12, cyclic_subgroup(12, 7)).balanced
    assert is_balanced_fast(24, cyclic_subgroup(24, 19)).balanced
    assert not is_balanced_fast(8, cyclic_subgroup(8, 3)).balanced


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        is_balanced_definition(8, cyclic_subgroup(16, 3))
    with pytest.raises(ValueError):
        cyclic_verdict(2, 1)


@pytest.mark.parametrize("d", range(3, 90))
def test_three_deciders_on_all_subgroups(d):
    for H in all_subgroups(d):
        verdicts = {f(d, H).balanced for f in DECIDERS}
        assert len(verdicts) == 1


@given(st.integers(3, 400), st.lists(st.integers(-500, 500), min_size=1, max_size=2))
def test_three_deciders_random(d, gens):
    gens = [g for g in gens if math.gcd(g, d) == 1] or [-1]
    results = {subgroup_verdict(d, gens, m).balanced for m in ("definition", "characters", "fast")}
    assert len(results) == 1


def test_order_two_elements():
    assert order_two_elements(24) == [5, 7, 11, 13, 17, 19, 23]
    assert order_two_elements(7) == [6]


def test_order2_scan_examples():
    assert order2_scan(20) == []
    assert order2_scan(24) == [(24, 17), (24, 19)]
    assert order2_scan(2000) == [(24, 17), (24, 19), (60, 41), (60, 49)]


def test_order2_scan_against_definition():
    found = []
    for d in range(3, 130):
        for h in order_two_elements(d):
            if h in (d - 1, d // 2 + 1):
                continue
            if is_balanced_definition(d, cyclic_subgroup(d, h)).balanced:
                found.append((d, h))
    assert found == order2_scan(129)


def test_types():
    assert prime_power_type(3, 5, 1) == 1
    assert prime_power_type(3, 13, 1) == 4
    assert prime_power_type(3, 37, 1) == 3


def test_prop_crit_examples():
    assert prop_crit_conclusion(3, 5) == HYPOTHESES_NOT_MET
    assert prop_crit_conclusion(3, 481) == HYPOTHESES_NOT_MET
    # 4 * 13 * 37: l_3 = lcm(2, 3, 18) = 18, so the order condition fails
    assert prop_crit_conclusion(3, 1924) == HYPOTHESES_NOT_MET
    # 5 * 13 * 37: l_3 = lcm(4, 3, 18) = 36
    got = prop_crit_conclusion(3, 2405)
    assert got in (IN_BP0, NOT_BALANCED)
    truth = is_balanced_definition(2405, cyclic_subgroup(2405, 3)).balanced
    assert got == NOT_BALANCED and not truth


@pytest.mark.parametrize("p", [3, 5, 7])
def test_prop_crit_never_contradicted(p):
    for d in range(3, 3000):
        if math.gcd(d, p) != 1:
            continue
        got = prop_crit_conclusion(p, d)
        if got == NOT_BALANCED:
            assert not is_balanced_definition(d, cyclic_subgroup(d, p)).balanced
        elif got == IN_BP0:
            assert in_B_p0(p, d)


@pytest.mark.parametrize("d", range(3, 120))
def test_structure_of_balanced(d):
    subs = all_subgroups(d)
    flags = {H.elements: is_balanced_definition(d, H).balanced for H in subs}
    for H in subs:
        if flags[H.elements]:
            assert len(H) % 2 == 0
    for H in subs:
        if not flags[H.elements]:
            continue
        for K in subs:
            if set(H.elements) <= set(K.elements):
                assert flags[K.elements]


def test_half_plus_one_balanced():
    for d in range(4, 2001, 4):
        assert is_balanced_definition(d, cyclic_subgroup(d, d // 2 + 1)).balanced


def test_verdict_methods():
    for m in ("definition", "characters", "fast"):
        v = cyclic_verdict(24, 17, m)
        assert v.balanced and v.method == m
    assert set(subgroup_verdict(13, [3, -1], "fast").subgroup.elements) == set(
        subgroup_generated(13, [3, -1]).elements
    )
    assert len(units(13)) == 12
