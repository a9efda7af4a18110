"""Balancedness of a cyclic subgroup <g> of (Z/dZ)^x at census scale.

The character criterion says <g> is unbalanced exactly when some odd
character chi trivial on g has c_chi != 0, and the non-vanishing test only
looks at which local components of chi are trivial and at chi' on the odd
primes where chi is unramified.  Grouping characters by the set T of odd
primes where they are trivial, the number of admissible characters for each
T is an inclusion-exclusion over

  * local components forced trivial (or, at 2, forced imprimitive), and
  * primes l in T forced to satisfy chi(l) = 1,

of the number of odd characters trivial on a subgroup <g, l, ...> mod m,
which is phi(m) / (2 |<g, l, ...>_m|) when -1 is outside the subgroup and 0
otherwise.  No character is ever enumerated.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .numtheory import factorize, order_with_factored_exponent


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lattice_index(moduli, vectors) -> int:
    """[Z^C : L] for L spanned by the vectors and the moduli[i] * e_i."""
    C = len(moduli)
    rows = [[0] * C for _ in range(C)]
    for i, n in enumerate(moduli):
        rows[i][i] = n
    for vec in vectors:
        v = [x % n for x, n in zip(vec, moduli)]
        for i in range(C):
            b = v[i]
            if not b:
                continue
            row = rows[i]
            a = row[i]
            g, s, t = _ext_gcd(a, b)
            ag, bg = a // g, b // g
            new = [0] * C
            for k in range(i, C):
                new[k] = s * row[k] + t * v[k]
                v[k] = ag * v[k] - bg * row[k]
            for k in range(i + 1, C):
                new[k] %= moduli[k]
                v[k] %= moduli[k]
            rows[i] = new
    return math.prod(rows[i][i] for i in range(C))


@lru_cache(maxsize=1 << 16)
def _primitive_root(q: int, r: int) -> int:
    phi = q // r * (r - 1)
    qs = factorize(phi).primes
    g = 2
    while True:
        if g % r and all(pow(g, phi // s, q) != 1 for s in qs):
            return g
        g += 1


def _bsgs(base: int, target: int, order: int, mod: int) -> int:
    m = math.isqrt(order) + 1
    table = {}
    x = 1
    for j in range(m):
        table.setdefault(x, j)
        x = x * base % mod
    giant = pow(base, -m, mod)
    y = target
    for i in range(m + 1):
        j = table.get(y)
        if j is not None:
            return (i * m + j) % order
        y = y * giant % mod
    raise ArithmeticError("discrete log does not exist")


def _dlog_cyclic(x: int, gen: int, order: int, order_factors, mod: int) -> int:
    """Pohlig-Hellman logarithm of x to base gen in a cyclic group of given order."""
    residues = []
    for s, e in order_factors:
        se = s**e
        cof = order // se
        gs = pow(gen, cof, mod)
        hs = pow(x, cof, mod)
        gamma = pow(gs, s ** (e - 1), mod)
        k = 0
        for i in range(e):
            hk = pow(hs * pow(gs, -k, mod) % mod, s ** (e - 1 - i), mod)
            if hk == 1:
                digit = 0
            elif s < 64:
                digit = next(t for t in range(1, s) if pow(gamma, t, mod) == hk)
            else:
                digit = _bsgs(gamma, hk, s, mod)
            k += digit * s**i
        residues.append((k, se))
    # combine by CRT
    k, n = 0, 1
    for r, se in residues:
        t = (r - k) * pow(n, -1, se) % se
        k += n * t
        n *= se
    return k % order


class _Local:
    """Order data of g in one local factor (Z/qZ)^x, q an odd prime power or 2**e."""

    __slots__ = ("q", "r", "e", "phi", "l", "neg", "_phi_factors", "_gen", "_logs")

    def __init__(self, g: int, r: int, e: int, r_minus_one_factors=None):
        self.q = q = r**e
        self.r = r
        self.e = e
        if r == 2:
            self.phi = q // 2
            gq = g % q
            self.l = 1 if gq == 1 else (2 if e <= 3 or pow(gq, 2, q) == 1 else _order_2power(gq, e))
            self.neg = gq == q - 1
            self._phi_factors = None
        else:
            self.phi = q // r * (r - 1)
            fac = dict(r_minus_one_factors if r_minus_one_factors is not None else factorize(r - 1).factors)
            if e > 1:
                fac[r] = fac.get(r, 0) + e - 1
            self._phi_factors = tuple(sorted(fac.items()))
            self.l = order_with_factored_exponent(g % q, q, self.phi, [s for s, _ in self._phi_factors])
            self.neg = self.l % 2 == 0
        self._gen = None
        self._logs = {}

    @property
    def columns(self) -> tuple[int, ...]:
        if self.r == 2:
            return (2,) if self.e == 2 else (2, self.q // 4)
        return (self.phi,)

    def log(self, x: int) -> tuple[int, ...]:
        got = self._logs.get(x)
        if got is not None:
            return got
        q = self.q
        y = x % q
        if self.r == 2:
            s = 0 if y % 4 == 1 else 1
            if self.e == 2:
                out = (s,)
            else:
                if s:
                    y = q - y
                # y == 5**k with k mod 2**(e-2), read off bit by bit
                k = 0
                top = self.e - 2
                inv5 = pow(5, -1, q)
                for i in range(top):
                    z = y * pow(inv5, k, q) % q
                    if pow(z, 1 << (top - 1 - i), q) != 1:
                        k |= 1 << i
                out = (s, k)
        else:
            if self._gen is None:
                self._gen = _primitive_root(q, self.r)
            out = (_dlog_cyclic(y, self._gen, self.phi, self._phi_factors, q),)
        self._logs[x] = out
        return out


def _order_2power(g: int, e: int) -> int:
    q = 1 << e
    k = 1
    x = g
    while x != 1:
        x = x * x % q
        k <<= 1
    return k


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def _odd_count_cyclic(parts) -> int:
    """Odd characters mod prod(q) trivial on g, from local orders alone."""
    if not parts:
        return 0
    phi = 1
    L = 1
    all_neg = True
    vs = set()
    for loc in parts:
        phi *= loc.phi
        L = L * loc.l // math.gcd(L, loc.l)
        if all_neg:
            if loc.neg:
                vs.add(_v2(loc.l))
            else:
                all_neg = False
    if all_neg and len(vs) == 1:
        return 0
    return phi // (2 * L)


def _odd_count_general(parts, gens) -> int:
    """Odd characters mod prod(q) trivial on every element of gens."""
    if not parts:
        return 0
    moduli = []
    vecs = [[] for _ in gens]
    neg = []
    for loc in parts:
        moduli.extend(loc.columns)
        for v, x in zip(vecs, gens):
            v.extend(loc.log(x))
        neg.extend(loc.log(-1))
    idx = lattice_index(moduli, vecs)
    idx_neg = lattice_index(moduli, vecs + [neg])
    if idx == idx_neg:
        return 0
    # characters trivial on gens, minus those also trivial on -1
    return idx - idx_neg


class LocalCache:
    """Memo of local order data for a fixed g, keyed by prime power.

    Scans over many moduli reuse the same prime powers constantly, so the
    orders and discrete logarithms are worth keeping.
    """

    def __init__(self, g: int, r_minus_one=None):
        self.g = g
        self._r_minus_one = r_minus_one
        self._store: dict[tuple[int, int], _Local] = {}

    def __call__(self, r: int, e: int) -> _Local:
        key = (r, e)
        loc = self._store.get(key)
        if loc is None:
            fac = self._r_minus_one(r) if (self._r_minus_one is not None and r != 2) else None
            loc = self._store[key] = _Local(self.g, r, e, fac)
        return loc


def _locals(g, factors, local):
    get = local if local is not None else (lambda r, e: _Local(g, r, e))
    return [get(r, e) for r, e in factors]


def cyclic_witness_counts(g: int, d: int, factors=None, *, local=None, first_only=True):
    """Yield (T, count) where count is the number of odd characters trivial on g
    with trivial local part exactly at the odd primes in T and c_chi != 0.
    Stops early at the first positive count when first_only is set."""
    g %= d
    if factors is None:
        factors = factorize(d).factors
    get = local if local is not None else (lambda r, e: _Local(g, r, e))
    odd = [get(r, e) for r, e in factors if r != 2]
    two_e = factors[0][1] if factors and factors[0][0] == 2 else 0
    two_full = two_red = None
    if two_e >= 2:
        two_full = get(2, two_e)
        two_red = get(2, two_e - 1) if two_e >= 3 else None
    k = len(odd)
    for size in range(k + 1):
        for T in _subsets_of_size(k, size):
            kept = [odd[i] for i in range(k) if not T >> i & 1]
            ts = [odd[i] for i in range(k) if T >> i & 1]
            total = 0
            nk = len(kept)
            has2 = two_full is not None
            for S in range(1 << (nk + has2)):
                parts = [kept[i] for i in range(nk) if not S >> i & 1]
                sign = -1 if bin(S).count("1") % 2 else 1
                if has2:
                    loc2 = two_red if S >> nk & 1 else two_full
                    if loc2 is not None:
                        parts.append(loc2)
                if not parts:
                    continue
                for U in range(1 << len(ts)):
                    su = sign if bin(U).count("1") % 2 == 0 else -sign
                    if U == 0:
                        total += su * _odd_count_cyclic(parts)
                    else:
                        gens = [g] + [ts[i].r for i in range(len(ts)) if U >> i & 1]
                        total += su * _odd_count_general(parts, gens)
            if total < 0:
                raise ArithmeticError(f"negative character count for d={d}, g={g}")
            yield tuple(o.r for o in ts), total
            if total and first_only:
                return


def _subsets_of_size(k: int, size: int):
    for combo in itertools.combinations(range(k), size):
        m = 0
        for i in combo:
            m |= 1 << i
        yield m


def is_balanced_cyclic(g: int, d: int, factors=None, *, shortcuts: bool = True, local=None) -> bool:
    """Whether <g> is balanced in (Z/dZ)^x (d >= 3, gcd(g, d) = 1).

    With ``shortcuts`` the two cases where no odd character trivial on g can
    have c_chi != 0 are caught first: -1 in <g> (no odd character is trivial
    on g at all) and, for 4 | d, d/2 + 1 in <g> (every such character is
    imprimitive at 2).
    """
    d = int(d)
    if d < 3:
        raise ValueError(f"modulus must be >= 3, got {d}")
    g = int(g) % d
    if math.gcd(g, d) != 1:
        raise ValueError(f"{g} is not a unit modulo {d}")
    if factors is None:
        factors = factorize(d).factors
    if local is None:
        local = LocalCache(g)
    if shortcuts:
        l = 1
        for loc in _locals(g, factors, local):
            l = l * loc.l // math.gcd(l, loc.l)
        if l % 2 == 0:
            half = pow(g, l // 2, d)
            if half == d - 1 or (d % 4 == 0 and half == d // 2 + 1):
                return True
    for _, count in cyclic_witness_counts(g, d, factors, local=local):
        if count:
            return False
    return True
