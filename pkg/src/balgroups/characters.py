"""Dirichlet characters modulo d, their conductors, and half sums c_chi.

A character is an exponent vector t against the generators of the unit
group; its value at a unit a with logarithm vector x is zeta_n**k where
n = lambda(d) and k = sum t_i x_i n / order_i.  All characters of one
modulus therefore take values in the same ring Z[zeta_n].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CyclotomicInteger
from .numtheory import carmichael_from_factors, factorize
from .unitgroup import Subgroup, UnitGroupStructure, _unit_group, discrete_log


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    structure: UnitGroupStructure
    exponents: tuple[int, ...]
    value_order: int

    def __call__(self, a: int):
        return evaluate(self, a)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, {self.exponents})"


def _value_order(d: int) -> int:
    return carmichael_from_factors(factorize(d).factors)


def character(d: int, exponents) -> DirichletCharacter:
    """Character mod ``d`` (any d >= 1) with the given exponent vector."""
    s = _unit_group(int(d))
    ex = tuple(int(t) % c.order for t, c in zip(exponents, s.components))
    if len(ex) != len(s.components):
        raise ValueError(f"expected {len(s.components)} exponents for modulus {d}")
    return DirichletCharacter(s.modulus, s, ex, _value_order(s.modulus))


def trivial_character(d: int) -> DirichletCharacter:
    return character(d, [0] * len(_unit_group(int(d)).components))


def all_characters(d: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod d, trivial character first."""
    d = int(d)
    if d < 3:
        raise ValueError(f"characters are enumerated for d >= 3, got {d}")
    s = _unit_group(d)
    n = _value_order(d)
    return [
        DirichletCharacter(d, s, ex, n)
        for ex in itertools.product(*(range(c.order) for c in s.components))
    ]


def evaluate(chi: DirichletCharacter, a: int):
    """Exponent k with chi(a) = zeta_n**k, or None when gcd(a, d) > 1."""
    d = chi.modulus
    a = int(a) % d
    if math.gcd(a, d) != 1:
        return None
    n = chi.value_order
    x = discrete_log(chi.structure, a)
    k = 0
    for t, xi, c in zip(chi.exponents, x, chi.structure.components):
        k += t * xi * (n // c.order)
    return k % n


def is_odd(chi: DirichletCharacter) -> bool:
    d = chi.modulus
    if d <= 2:
        return False
    return evaluate(chi, d - 1) == chi.value_order // 2


def is_trivial_on(chi: DirichletCharacter, H: Subgroup) -> bool:
    return all(evaluate(chi, h) == 0 for h in H.generators)


def conductor(chi: DirichletCharacter) -> int:
    """Least d' | d with chi trivial on the units congruent to 1 mod d'."""
    d = chi.modulus
    for dp in range(1, d + 1):
        if d % dp:
            continue
        if all(evaluate(chi, a) in (0, None) for a in range(1, d, dp)):
            return dp
    return d


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def _coprime_part(d: int, dp: int) -> int:
    # largest divisor of d sharing no prime with dp
    out = 1
    for r, e in factorize(d):
        if dp % r:
            out *= r**e
    return out


def _lift_unit(a: int, dp: int, d: int) -> int:
    """A unit mod d congruent to a mod dp and to 1 mod the part of d prime to dp."""
    rest = _coprime_part(d, dp)
    if rest == 1:
        # every prime of d divides dp; any lift of a unit mod dp stays a unit
        return a % d
    t = (1 - a) * pow(dp, -1, rest) % rest
    return (a + dp * t) % d


def primitive_inducing(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character mod conductor(chi) that induces chi."""
    d = chi.modulus
    dp = conductor(chi)
    if dp == d:
        return chi
    s = _unit_group(dp)
    n, n_p = chi.value_order, _value_order(dp)
    scale = n // n_p
    ex = []
    for c in s.components:
        k = evaluate(chi, _lift_unit(c.lifted, dp, d))
        if k % scale:
            raise ArithmeticError("character value does not lie in the smaller ring")
        ex.append((k // scale) // (n_p // c.order))
    return DirichletCharacter(dp, s, tuple(ex), n_p)


def _value_in(chi: DirichletCharacter, a: int, n: int):
    # chi(a) as an exponent of zeta_n, n a multiple of chi.value_order
    k = evaluate(chi, a)
    return None if k is None else k * (n // chi.value_order)


def c_chi(chi: DirichletCharacter) -> CyclotomicInteger:
    """Sum of chi(a) over 0 < a < d/2, exactly, in Z[zeta_lambda(d)]."""
    d = chi.modulus
    n = chi.value_order
    ks = (evaluate(chi, a) for a in range(1, (d + 1) // 2))
    return CyclotomicInteger.from_exponents(n, (k for k in ks if k is not None))


def c_chi_via_reduction(chi: DirichletCharacter) -> CyclotomicInteger:
    """c_chi rebuilt from the primitive character by stripping one prime at a time.

    Going from modulus m to m/l (both multiples of the conductor) multiplies
    by -chi(2) when l = 2 and by 1 - chi(l) when l is odd, where chi is read
    modulo m/l and vanishes at l when l divides m/l.
    """
    d = chi.modulus
    n = chi.value_order
    if chi.is_trivial:
        # the stripping identity needs a nontrivial character
        return c_chi(chi)
    prim = primitive_inducing(chi)
    dp = prim.modulus
    result = c_chi(prim).lift(n // prim.value_order)
    strips = []
    for r, e in factorize(d // dp):
        strips.extend([r] * e)
    m = dp
    # multiply factors from the bottom of the chain up; the ring is commutative
    for ell in strips:
        lower = m
        m *= ell
        k = None if math.gcd(ell, lower) != 1 else _value_in(prim, ell, n)
        if ell == 2:
            if k is None:
                return CyclotomicInteger.zero(n)
            result = -result.shift(k)
        elif k is not None:
            result = result - result.shift(k)
    return result


def c_chi_nonvanishing(chi: DirichletCharacter) -> bool:
    """Whether c_chi != 0 for an odd character, decided without any sums.

    True iff (4 does not divide d, or d/d' is odd) and the primitive
    character chi' mod d' satisfies chi'(l) != 1 for every odd prime l
    dividing d but not d'.
    """
    if not is_odd(chi):
        raise ValueError("c_chi_nonvanishing applies to odd characters only")
    d = chi.modulus
    prim = primitive_inducing(chi)
    dp = prim.modulus
    if d % 4 == 0 and (d // dp) % 2 == 0:
        return False
    for r, _ in factorize(d):
        if r != 2 and dp % r and evaluate(prim, r) == 0:
            return False
    return True


def induce(chi: DirichletCharacter, m: int) -> DirichletCharacter:
    """The character mod m (a multiple of chi's modulus) induced by chi."""
    m = int(m)
    d0 = chi.modulus
    if m % d0:
        raise ValueError(f"{m} is not a multiple of {d0}")
    s = _unit_group(m)
    n = _value_order(m)
    scale = n // chi.value_order
    ex = []
    for c in s.components:
        k = evaluate(chi, c.lifted) * scale
        step = n // c.order
        if k % step:
            raise ArithmeticError("induced value is not a power of the component root")
        ex.append(k // step)
    return DirichletCharacter(m, s, tuple(ex), n)
