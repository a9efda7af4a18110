import math

import pytest
from hypothesis import given, strategies as st

from balgroups.balanced import is_balanced_definition
from balgroups.cyclic_fast import cyclic_witness_counts, is_balanced_cyclic, lattice_index
from balgroups.numtheory import factorize
from balgroups.unitgroup import cyclic_subgroup


@pytest.mark.parametrize("d", range(3, 260))
def test_counting_decider_matches_definition(d):
    seen = set()
    for h in range(1, d):
        if math.gcd(h, d) != 1:
            continue
        H = cyclic_subgroup(d, h)
        if H.elements in seen:
            continue
        seen.add(H.elements)
        truth = is_balanced_definition(d, H).balanced
        assert is_balanced_cyclic(h, d) == truth
        assert is_balanced_cyclic(h, d, shortcuts=False) == truth


@given(st.integers(3, 3000), st.integers(-10**5, 10**5))
def test_counting_decider_random(d, g):
    if math.gcd(g, d) != 1:
        return
    assert is_balanced_cyclic(g, d) == is_balanced_definition(d, cyclic_subgroup(d, g)).balanced


def test_witness_counts_are_positive():
    for d in (8, 15, 39, 56, 91):
        fac = factorize(d).factors
        counts = list(cyclic_witness_counts(2 if d % 2 else 3, d, fac))
        assert all(c > 0 for _, c in counts)


def test_lattice_index():
    # <(1, 1)> inside Z/2 x Z/4 has index 2
    assert lattice_index((2, 4), [(1, 1)]) == 2
    assert lattice_index((6,), [(2,)]) == 2
    assert lattice_index((3, 3), []) == 9
    assert lattice_index((4, 6), [(2, 3), (0, 2)]) == 4
