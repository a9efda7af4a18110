"""The unit group (Z/dZ)^x as an explicit product of cyclic pieces.

Odd prime powers contribute one cyclic component generated by the smallest
primitive root.  The 2-part contributes nothing for 2, the component <3> for
4, and the pair <-1>, <5> for 2**e with e >= 3.  Components are listed with
the 2-part first and then by increasing prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .numtheory import euler_phi, factorize, multiplicative_order


@dataclass(frozen=True)
class Component:
    prime_power: int
    generator: int  # residue modulo prime_power
    order: int
    lifted: int  # generator lifted to the full modulus: == generator mod prime_power, == 1 elsewhere


@dataclass(frozen=True)
class UnitGroupStructure:
    modulus: int
    components: tuple[Component, ...]
    # residue mod d -> exponent vector, filled at construction
    _log: dict = field(default=None, repr=False, compare=False, hash=False)

    @property
    def order(self) -> int:
        return math.prod(c.order for c in self.components)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.components)

    def element(self, exponents) -> int:
        """Residue mod d with the given exponent vector."""
        d = self.modulus
        x = 1 % d if d > 1 else 0
        for c, e in zip(self.components, exponents):
            x = x * pow(c.lifted, e, d) % d
        return x

    def units(self) -> list[int]:
        return sorted(self._log)


def _smallest_primitive_root(q: int, r: int, a: int) -> int:
    phi = q // r * (r - 1)
    qs = factorize(phi).primes
    g = 2
    while True:
        if math.gcd(g, q) == 1 and all(pow(g, phi // s, q) != 1 for s in qs):
            return g
        g += 1


def _crt_lift(residue: int, q: int, d: int) -> int:
    rest = d // q
    if rest == 1:
        return residue % d
    # x == residue (mod q), x == 1 (mod rest)
    t = (residue - 1) * pow(rest, -1, q) % q
    return (1 + rest * t) % d


def _build(d: int) -> UnitGroupStructure:
    comps: list[Component] = []
    for r, a in factorize(d):
        q = r**a
        if r == 2:
            if a == 2:
                comps.append(Component(4, 3, 2, _crt_lift(3, 4, d)))
            elif a >= 3:
                comps.append(Component(q, q - 1, 2, _crt_lift(q - 1, q, d)))
                comps.append(Component(q, 5, q // 4, _crt_lift(5, q, d)))
        else:
            g = _smallest_primitive_root(q, r, a)
            comps.append(Component(q, g, q // r * (r - 1), _crt_lift(g, q, d)))
    log: dict[int, tuple[int, ...]] = {1 % d if d > 1 else 0: tuple(0 for _ in comps)}
    # saturate component by component: every unit is a unique product of generator powers
    for i, c in enumerate(comps):
        new = {}
        for x, vec in log.items():
            y = x
            for e in range(c.order):
                v = list(vec)
                v[i] = e
                new[y] = tuple(v)
                y = y * c.lifted % d
        log = new
    return UnitGroupStructure(d, tuple(comps), log)


@lru_cache(maxsize=4096)
def _unit_group(d: int) -> UnitGroupStructure:
    return _build(d)


def unit_group(d: int) -> UnitGroupStructure:
    """Cyclic decomposition of (Z/dZ)^x for d >= 3.

    >>> [(c.prime_power, c.generator, c.order) for c in unit_group(12).components]
    [(4, 3, 2), (3, 2, 2)]
    """
    d = int(d)
    if d < 3:
        raise ValueError(f"unit groups are only considered for d >= 3, got {d}")
    return _unit_group(d)


def discrete_log(structure: UnitGroupStructure, a: int) -> tuple[int, ...]:
    """Exponent vector of the unit ``a`` against the component generators."""
    d = structure.modulus
    a = int(a) % d if d > 1 else 0
    try:
        return structure._log[a]
    except KeyError:
        raise ValueError(f"{a} is not a unit modulo {d}") from None


@dataclass(frozen=True)
class Subgroup:
    modulus: int
    generators: tuple[int, ...] = field(compare=False)
    elements: tuple[int, ...] = ()
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return int(a) % self.modulus in self._members


def _check_unit(a: int, d: int) -> int:
    a = int(a) % d
    if math.gcd(a, d) != 1:
        raise ValueError(f"{a} is not a unit modulo {d}")
    return a


def _check_modulus(d: int) -> int:
    d = int(d)
    if d < 3:
        raise ValueError(f"modulus must be >= 3, got {d}")
    return d


def _closure(d: int, gens) -> tuple[int, ...]:
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def cyclic_subgroup(d: int, p: int) -> Subgroup:
    """<p> inside (Z/dZ)^x, by enumerating powers."""
    d = _check_modulus(d)
    g = _check_unit(p, d)
    elems = [1]
    x = g
    while x != 1:
        elems.append(x)
        x = x * g % d
    return Subgroup(d, (g,), tuple(sorted(elems)))


def subgroup_generated(d: int, gens) -> Subgroup:
    d = _check_modulus(d)
    gs = tuple(_check_unit(g, d) for g in gens)
    return Subgroup(d, gs, _closure(d, gs))


def full_group(d: int) -> Subgroup:
    d = _check_modulus(d)
    units = tuple(a for a in range(1, d) if math.gcd(a, d) == 1)
    return Subgroup(d, units, units)


def cosets(d: int, H: Subgroup) -> list[tuple[int, ...]]:
    """Partition of the units into cosets uH, ordered by least representative."""
    d = _check_modulus(d)
    if H.modulus != d:
        raise ValueError("subgroup modulus does not match")
    seen = set()
    out = []
    for u in range(1, d):
        if u in seen or math.gcd(u, d) != 1:
            continue
        cos = tuple(sorted(u * h % d for h in H.elements))
        seen.update(cos)
        out.append(cos)
    return out


def all_subgroups(d: int) -> list[Subgroup]:
    """Every subgroup of (Z/dZ)^x.

    A subgroup is the join of its cyclic subgroups, so starting from the
    cyclic ones and joining with cyclic ones until nothing new appears
    reaches all of them.
    """
    d = _check_modulus(d)
    units = [a for a in range(1, d) if math.gcd(a, d) == 1]
    cyc = {}
    for a in units:
        s = frozenset(cyclic_subgroup(d, a).elements)
        cyc.setdefault(s, a)
    found = {s: (a,) for s, a in cyc.items()}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for c, a in cyc.items():
                if c <= s:
                    continue
                gens = found[s] + (a,)
                j = frozenset(_closure(d, gens))
                if j not in found:
                    found[j] = gens
                    nxt.append(j)
        frontier = nxt
    subs = [Subgroup(d, gens, tuple(sorted(s))) for s, gens in found.items()]
    subs.sort(key=lambda H: (H.order, H.elements))
    return subs


def check_structure(structure: UnitGroupStructure) -> None:
    """Raise if the component data is inconsistent (used by tests)."""
    d = structure.modulus
    assert structure.order == euler_phi(d)
    for c in structure.components:
        assert multiplicative_order(c.generator, c.prime_power) == c.order
    assert len(structure._log) == structure.order
