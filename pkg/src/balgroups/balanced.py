"""Deciding whether a subgroup H of (Z/dZ)^x is balanced.

Three independent routes are provided:

``is_balanced_definition``
    count, coset by coset, the members below and above d/2;
``is_balanced_characters``
    every odd character trivial on H must have c_chi = 0, tested exactly
    in Z[zeta_n];
``is_balanced_fast``
    the same characters, but c_chi != 0 is decided by the conductor test of
    ``c_chi_nonvanishing`` with no cyclotomic arithmetic.

For cyclic subgroups at scale use ``is_balanced_cyclic`` (re-exported from
``cyclic_fast``), which counts admissible characters instead of listing them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .characters import (
    DirichletCharacter,
    all_characters,
    c_chi,
    c_chi_nonvanishing,
    evaluate,
    is_odd,
)
from .cyclic_fast import is_balanced_cyclic
from .numtheory import factorize, multiplicative_order
from .unitgroup import Subgroup, cosets, cyclic_subgroup, subgroup_generated

__all__ = [
    "BalancedVerdict",
    "is_balanced_definition",
    "is_balanced_characters",
    "is_balanced_fast",
    "is_balanced_cyclic",
    "order2_scan",
    "order_two_elements",
    "prime_power_type",
    "prop_crit_conclusion",
    "IN_BP0",
    "NOT_BALANCED",
    "HYPOTHESES_NOT_MET",
]


@dataclass(frozen=True)
class BalancedVerdict:
    d: int
    subgroup: Subgroup
    balanced: bool
    method: str
    witness: Optional[object] = None

    def __bool__(self):
        return self.balanced


def _check(d: int, H: Subgroup) -> int:
    d = int(d)
    if d < 3:
        raise ValueError(f"balancedness needs d >= 3, got {d}")
    if H.modulus != d:
        raise ValueError(f"subgroup lives modulo {H.modulus}, not {d}")
    return d


def is_balanced_definition(d: int, H: Subgroup) -> BalancedVerdict:
    """Ground truth: every coset has as many members in (0, d/2) as in (d/2, d)."""
    d = _check(d, H)
    for cos in cosets(d, H):
        low = sum(1 for a in cos if 2 * a < d)
        if 2 * low != len(cos):
            return BalancedVerdict(d, H, False, "definition", cos)
    return BalancedVerdict(d, H, True, "definition")


class _CharacterData:
    """All characters mod d with parity, exact c_chi zero test and fast predicate."""

    def __init__(self, d: int):
        self.d = d
        self.chars = all_characters(d)
        self.odd = [chi for chi in self.chars if is_odd(chi)]
        self._zero: dict[tuple, bool] = {}
        self._nonvan: dict[tuple, bool] = {}

    def c_is_zero(self, chi: DirichletCharacter) -> bool:
        got = self._zero.get(chi.exponents)
        if got is None:
            got = self._zero[chi.exponents] = c_chi(chi).is_zero
        return got

    def nonvanishing(self, chi: DirichletCharacter) -> bool:
        got = self._nonvan.get(chi.exponents)
        if got is None:
            got = self._nonvan[chi.exponents] = c_chi_nonvanishing(chi)
        return got

    def odd_trivial_on(self, H: Subgroup):
        gens = H.generators
        for chi in self.odd:
            if all(evaluate(chi, h) == 0 for h in gens):
                yield chi


@lru_cache(maxsize=64)
def _character_data(d: int) -> _CharacterData:
    return _CharacterData(d)


def is_balanced_characters(d: int, H: Subgroup) -> BalancedVerdict:
    """Balanced iff c_chi = 0 for every odd chi trivial on H (exact zero test)."""
    d = _check(d, H)
    data = _character_data(d)
    for chi in data.odd_trivial_on(H):
        if not data.c_is_zero(chi):
            return BalancedVerdict(d, H, False, "characters", chi)
    return BalancedVerdict(d, H, True, "characters")


def is_balanced_fast(d: int, H: Subgroup) -> BalancedVerdict:
    """Balanced iff no odd chi trivial on H passes the conductor non-vanishing test."""
    d = _check(d, H)
    data = _character_data(d)
    for chi in data.odd_trivial_on(H):
        if data.nonvanishing(chi):
            return BalancedVerdict(d, H, False, "fast", chi)
    return BalancedVerdict(d, H, True, "fast")


def order_two_elements(d: int) -> list[int]:
    """All h mod d with h*h == 1 and h != 1."""
    return [h for h in range(2, d) if h * h % d == 1]


def _order2_block(bounds) -> list[tuple[int, int]]:
    lo, hi = bounds
    out = []
    for d in range(max(lo, 3), hi + 1):
        fac = factorize(d).factors
        for h in order_two_elements(d):
            if h == d - 1 or (d % 4 == 0 and h == d // 2 + 1):
                continue
            if is_balanced_cyclic(h, d, fac):
                out.append((d, h))
    return out


def order2_scan(d_max: int, shards: int = 1) -> list[tuple[int, int]]:
    """Balanced subgroups <h> of order 2 other than <-1> and <d/2 + 1>, for d <= d_max."""
    d_max = int(d_max)
    if d_max < 3:
        return []
    from .parallel import run_sharded

    return run_sharded(_order2_block, 3, d_max, shards)


def prime_power_type(p: int, r: int, a: int) -> int:
    """Classify the odd prime power r**a relative to p.

    1: <p, -1> is all of (Z/r^aZ)^x.  Otherwise 2, refined to 3 when the
    order of p is 2 mod 4 and to 4 when it is odd (3 and 4 imply 2).
    """
    p, r, a = int(p), int(r), int(a)
    if r % 2 == 0 or not factorize(r).factors == ((r, 1),):
        raise ValueError(f"r must be an odd prime, got {r}")
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if p % r == 0:
        raise ValueError(f"{r} divides {p}")
    if abs(p) <= 1:
        raise ValueError(f"|p| must exceed 1, got {p}")
    q = r**a
    l = multiplicative_order(p, q)
    phi = q // r * (r - 1)
    # in a cyclic group, -1 is in <p> iff l is even; then <p, -1> = <p>
    gen_order = l if l % 2 == 0 else 2 * l
    if gen_order == phi:
        return 1
    if l % 4 == 2:
        return 3
    if l % 2 == 1:
        return 4
    return 2


IN_BP0 = "in_Bp0"
NOT_BALANCED = "not_balanced"
HYPOTHESES_NOT_MET = "hypotheses_not_met"


def prop_crit_conclusion(p: int, d: int) -> str:
    """Check the hypotheses of the Type-3/Type-4 criterion for (p, d) and report its verdict.

    Hypotheses: odd primes s, t dividing d with order of p mod s = 2 (mod 4),
    order mod t odd, <p, -1> proper mod s and mod t, and 4 | l_p(d).  When
    they hold, either 4 | d and d/2 + 1 is in <p>_d (``IN_BP0``) or <p>_d
    is not balanced (``NOT_BALANCED``).
    """
    p, d = int(p), int(d)
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    if math.gcd(p, d) != 1:
        raise ValueError(f"gcd({p}, {d}) != 1")
    if abs(p) <= 1:
        raise ValueError(f"|p| must exceed 1, got {p}")
    types = [prime_power_type(p, r, 1) for r, _ in factorize(d) if r != 2]
    if 3 not in types or 4 not in types:
        return HYPOTHESES_NOT_MET
    l = multiplicative_order(p, d)
    if l % 4:
        return HYPOTHESES_NOT_MET
    if d % 4 == 0 and pow(p, l // 2, d) == d // 2 + 1:
        return IN_BP0
    return NOT_BALANCED


def cyclic_verdict(d: int, p: int, method: str = "fast") -> BalancedVerdict:
    """Verdict for <p>_d by one of the three named methods."""
    H = cyclic_subgroup(d, p)
    return {"definition": is_balanced_definition, "characters": is_balanced_characters, "fast": is_balanced_fast}[
        method
    ](d, H)


def subgroup_verdict(d: int, gens, method: str) -> BalancedVerdict:
    H = subgroup_generated(d, gens)
    return {"definition": is_balanced_definition, "characters": is_balanced_characters, "fast": is_balanced_fast}[
        method
    ](d, H)
