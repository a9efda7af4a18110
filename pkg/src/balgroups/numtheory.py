"""Elementary number theory on machine-sized integers.

Everything here is exact and side-effect free.  Factorization uses trial
division up to 10**6 and falls back to Brent's variant of Pollard rho, which
is plenty for the moduli the census and rank scans touch.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

TRIAL_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for prime, exp in self.factors:
            if prime <= last or exp < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = prime
            prod *= prime**exp
        if prod != self.value:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    # n is odd, composite, not a prime power of a tiny prime
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out, rng)
        _split_large(r, out, rng)
        return
    f = _pollard_brent(n, rng)
    _split_large(f, out, rng)
    _split_large(n // f, out, rng)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Prime factorization of ``n >= 1``.

    >>> factorize(24).factors
    ((2, 3), (3, 1))
    >>> factorize(1).factors
    ()
    """
    n = int(n)
    if n <= 0:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    value = n
    out: dict[int, int] = {}
    e = (n & -n).bit_length() - 1
    if e:
        out[2] = e
        n >>= e
    p = 3
    while p * p <= n and p <= TRIAL_LIMIT:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out[p] = k
        p += 2
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            _split_large(n, out, random.Random(n))
    return Factorization(value, tuple(sorted(out.items())))


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0 and 1)."""
    limit = int(limit)
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    spf[2::2] = 2
    for p in range(3, math.isqrt(limit) + 1, 2):
        if spf[p] == 0:
            block = spf[p * p :: 2 * p]
            block[block == 0] = p
    rest = np.nonzero(spf == 0)[0]
    spf[rest[rest >= 2]] = rest[rest >= 2]
    return spf


def factorize_spf(n: int, spf) -> tuple[tuple[int, int], ...]:
    """Factor ``n`` with a precomputed smallest-prime-factor table."""
    out = []
    while n > 1:
        p = int(spf[n])
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        out.append((p, k))
    return tuple(out)


def _require_positive(n: int, name: str) -> int:
    n = int(n)
    if n <= 0:
        raise ValueError(f"{name} expects n >= 1, got {n}")
    return n


def euler_phi_from_factors(factors) -> int:
    phi = 1
    for p, e in factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def carmichael_from_factors(factors) -> int:
    lam = 1
    for p, e in factors:
        if p == 2:
            part = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            part = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, part)
    return lam


def euler_phi(n: int) -> int:
    """Order of the unit group (Z/nZ)^x."""
    n = _require_positive(n, "euler_phi")
    return euler_phi_from_factors(factorize(n).factors)


def carmichael_lambda(n: int) -> int:
    """Exponent of (Z/nZ)^x, i.e. the largest element order."""
    n = _require_positive(n, "carmichael_lambda")
    return carmichael_from_factors(factorize(n).factors)


def order_with_factored_exponent(a: int, n: int, lam: int, lam_primes) -> int:
    """Order of ``a`` mod ``n`` given a multiple ``lam`` of it and lam's primes."""
    k = lam
    for q in lam_primes:
        while k % q == 0 and pow(a, k // q, n) == 1:
            k //= q
    return k


def multiplicative_order(a: int, n: int) -> int:
    """Smallest k >= 1 with a**k == 1 (mod n).

    ``a`` may be negative; it is reduced mod ``n`` first.

    >>> multiplicative_order(3, 5)
    4
    """
    n = _require_positive(n, "multiplicative_order")
    a = int(a) % n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    lam = carmichael_lambda(n)
    return order_with_factored_exponent(a, n, lam, factorize(lam).primes)


def valuation(r: int, m: int) -> int:
    """Exponent of the prime ``r`` in ``m``."""
    if not is_prime(r):
        raise ValueError(f"valuation base must be prime, got {r}")
    m = _require_positive(m, "valuation")
    if r == 2:
        return (m & -m).bit_length() - 1
    v = 0
    while m % r == 0:
        m //= r
        v += 1
    return v


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer (sign ignored)."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return (n & -n).bit_length() - 1


def v2_pow_minus_one(p: int, k: int) -> int:
    """v2(p**k - 1) for odd p with |p| > 1, without forming p**k.

    For odd k this is v2(p - 1); for even k it is v2(p**2 - 1) + v2(k) - 1,
    which follows from the factorization of (p**(2**i * k) - 1) / (p**(2k) - 1)
    into i - 1 factors that are each 2 mod 4.
    """
    p = int(p)
    k = int(k)
    if p % 2 == 0 or abs(p) <= 1:
        raise ValueError(f"v2_pow_minus_one needs odd p with |p| > 1, got {p}")
    if k < 1:
        raise ValueError(f"v2_pow_minus_one needs k >= 1, got {k}")
    if k % 2:
        return v2(p - 1)
    return v2(p * p - 1) + v2(k) - 1
