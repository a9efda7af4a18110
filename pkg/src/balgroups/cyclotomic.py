"""Exact arithmetic in Z[zeta_n].

Elements are stored in the group-ring basis 1, zeta, ..., zeta**(n-1), so
adding a root of unity is a single coefficient bump.  Different vectors can
represent the same number; the zero test reduces the associated polynomial
modulo the n-th cyclotomic polynomial, which is exact because Phi_n is monic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

_PHI_CACHE: dict[int, tuple[int, ...]] = {}
_PHI_LOCK = threading.Lock()


def _divmod_monic(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    terms = [(k, c) for k, c in enumerate(den[:dd]) if c]
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            base = i - dd
            quot[base] = c
            num[i] = 0
            for k, dk in terms:
                num[base + k] -= c * dk
    return quot, num[:dd] if dd else [0]


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first (memoized)."""
    n = int(n)
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (n - 1) + [1]
    for e in range(1, n):
        if n % e == 0:
            poly, rem = _divmod_monic(poly, cyclotomic_polynomial(e))
            assert not any(rem)
    result = tuple(poly)
    with _PHI_LOCK:
        _PHI_CACHE.setdefault(n, result)
    return _PHI_CACHE[n]


def reduce_mod_phi(coeffs, n: int) -> tuple[int, ...]:
    """Remainder of sum coeffs[k] x**k modulo Phi_n, padded to degree phi(n) - 1."""
    phi = cyclotomic_polynomial(n)
    _, rem = _divmod_monic(list(coeffs), phi)
    deg = len(phi) - 1
    rem = list(rem) + [0] * (deg - len(rem))
    return tuple(rem[:deg])


@dataclass(frozen=True, eq=False)
class CyclotomicInteger:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1 or len(self.coeffs) != self.order:
            raise ValueError("coefficient vector must have length equal to the order")

    @classmethod
    def zero(cls, n: int) -> "CyclotomicInteger":
        return cls(n, (0,) * n)

    @classmethod
    def root(cls, n: int, k: int, mult: int = 1) -> "CyclotomicInteger":
        c = [0] * n
        c[k % n] = mult
        return cls(n, tuple(c))

    @classmethod
    def from_exponents(cls, n: int, exponents) -> "CyclotomicInteger":
        """Sum of zeta_n**k over the given exponents."""
        c = [0] * n
        for k in exponents:
            c[k % n] += 1
        return cls(n, tuple(c))

    def _coerce(self, other) -> "CyclotomicInteger":
        if isinstance(other, int):
            return CyclotomicInteger.root(self.order, 0, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"ring mismatch: order {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.order, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return CyclotomicInteger(n, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "CyclotomicInteger":
        """Multiply by zeta_n**k."""
        n = self.order
        k %= n
        c = self.coeffs
        return CyclotomicInteger(n, c[n - k :] + c[: n - k]) if k else self

    def lift(self, m: int) -> "CyclotomicInteger":
        """Same number viewed in Z[zeta_(m*n)] via zeta_n -> zeta_(mn)**m."""
        out = [0] * (self.order * m)
        for k, a in enumerate(self.coeffs):
            out[k * m] = a
        return CyclotomicInteger(self.order * m, tuple(out))

    def reduced(self) -> tuple[int, ...]:
        """Canonical coordinates: remainder modulo Phi_n."""
        return reduce_mod_phi(self.coeffs, self.order)

    @property
    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.root(self.order, 0, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        if other.order != self.order:
            return self.lift(other.order).reduced() == other.lift(self.order).reduced()
        return self.reduced() == other.reduced()

    # equality crosses rings, so no hash consistent with it is cheap to define
    __hash__ = None

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        terms = [f"{a}*z^{k}" for k, a in enumerate(self.coeffs) if a]
        return f"CyclotomicInteger({self.order}: {' + '.join(terms) or '0'})"
