"""Ranks of E_d : y^2 = x(x+1)(x+u^d) over F_q(u).

For q = p**f with p an odd prime and d prime to p, the rank is the sum over
divisors e > 2 of d of phi(e) / l_q(e), restricted to those e for which the
cyclic group generated by p mod e is balanced.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import asdict, dataclass
from functools import partial

from .balanced import is_balanced_definition
from .cyclic_fast import LocalCache, is_balanced_cyclic
from .numtheory import (
    carmichael_from_factors,
    euler_phi_from_factors,
    factorize,
    factorize_spf,
    multiplicative_order,
    order_with_factored_exponent,
    spf_sieve,
)
from .parallel import map_shards
from .unitgroup import cyclic_subgroup


class PreconditionError(ValueError):
    """Inputs fall outside the hypotheses of the check being requested."""


@dataclass(frozen=True)
class RankRow:
    e: int
    balanced: bool
    phi: int
    l: int
    contribution: int


@dataclass(frozen=True)
class RankReport:
    q: int
    p: int
    f: int
    d: int
    rows: tuple[RankRow, ...]
    rank: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "f": self.f,
            "d": self.d,
            "rows": [asdict(r) for r in self.rows],
            "rank": self.rank,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RankReport":
        obj = json.loads(text)
        rows = tuple(RankRow(**r) for r in obj["rows"])
        return cls(obj["q"], obj["p"], obj["f"], obj["d"], rows, obj["rank"])


def split_prime_power(q: int) -> tuple[int, int]:
    """(p, f) with q = p**f and p an odd prime; anything else is rejected."""
    q = int(q)
    if q < 3:
        raise ValueError(f"q must be an odd prime power, got {q}")
    fac = factorize(q).factors
    if len(fac) != 1 or fac[0][0] == 2:
        raise ValueError(f"q must be a power of an odd prime, got {q}")
    return fac[0]


def divisors(n: int) -> list[int]:
    out = [1]
    for r, e in factorize(n):
        out = [x * r**k for x in out for k in range(e + 1)]
    return sorted(out)


def _balanced(p: int, e: int, method: str) -> bool:
    if method == "fast":
        return is_balanced_cyclic(p, e)
    if method == "definition":
        return is_balanced_definition(e, cyclic_subgroup(e, p)).balanced
    raise ValueError(f"unknown method {method!r}")


def rank_Ed(q: int, d: int, method: str = "fast") -> RankReport:
    """Rank of E_d over F_q(u) with its divisor-by-divisor breakdown.

    >>> rank_Ed(81, 5).rank
    4
    """
    p, f = split_prime_power(q)
    d = int(d)
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if d % p == 0:
        raise ValueError(f"d = {d} is divisible by the characteristic {p}")
    rows = []
    for e in divisors(d):
        if e <= 2:
            continue
        ef = factorize(e).factors
        phi = euler_phi_from_factors(ef)
        l = multiplicative_order(q, e)
        bal = _balanced(p, e, method)
        contrib = 0
        if bal:
            if phi % l:
                raise ArithmeticError(f"l_q({e}) = {l} does not divide phi({e}) = {phi}")
            contrib = phi // l
        rows.append(RankRow(e, bal, phi, l, contrib))
    return RankReport(int(q), p, f, d, tuple(rows), sum(r.contribution for r in rows))


def supersingular_rank_check(q: int, d: int) -> bool:
    """When -1 is a power of p mod d and q == 1 mod d, confirm rank = d - 2 (d even) or d - 1 (d odd).

    Raises ``PreconditionError`` when those hypotheses fail.
    """
    try:
        p, _ = split_prime_power(q)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    d = int(d)
    if d <= 2 or d % p == 0:
        raise PreconditionError(f"need d > 2 prime to {p}, got {d}")
    l = multiplicative_order(p, d)
    if l % 2 or pow(p, l // 2, d) != d - 1:
        raise PreconditionError(f"no power of {p} is -1 mod {d}")
    if q % d != 1:
        raise PreconditionError(f"q = {q} is not 1 mod {d}")
    expected = d - 2 if d % 2 == 0 else d - 1
    return rank_Ed(q, d).rank == expected


def _balanced_block(bounds, p: int):
    lo, hi = bounds
    spf = spf_sieve(max(hi, 2)).tolist()
    rm1 = {}

    def r_minus_one(r):
        got = rm1.get(r)
        if got is None:
            got = rm1[r] = factorize_spf(r - 1, spf)
        return got

    cache = LocalCache(p, r_minus_one)
    out = []
    for e in range(max(lo, 3), hi + 1):
        if e % p == 0:
            continue
        fac = factorize_spf(e, spf)
        bal = is_balanced_cyclic(p, e, fac, local=cache)
        l_loc = [cache(r, k) for r, k in fac]
        l_p = 1
        for loc in l_loc:
            l_p = l_p * loc.l // math.gcd(l_p, loc.l)
        b1 = l_p % 2 == 0 and pow(p, l_p // 2, e) == e - 1
        out.append((e, bal, b1))
    return out


def rank_stats(q: int, x_max: int, shards=None) -> dict:
    """Ranks of E_d for all d <= x_max prime to p, with summary statistics.

    The Brumer-type ceiling d / (2 log_q d) and the ratios phi(d)/lambda(d),
    phi(d)/l_q(d) are reported per row for inspection only.
    """
    p, _ = split_prime_power(q)
    x_max = int(x_max)
    if x_max < 3:
        raise ValueError(f"x_max must be >= 3, got {x_max}")
    flags = {}
    for part in map_shards(partial(_balanced_block, p=p), 3, x_max, shards):
        for e, bal, b1 in part:
            flags[e] = (bal, b1)
    spf = spf_sieve(x_max).tolist()
    contrib = [0] * (x_max + 1)
    phis = [0] * (x_max + 1)
    lqs = [0] * (x_max + 1)
    lams = [0] * (x_max + 1)
    for e in range(1, x_max + 1):
        if e % p == 0:
            continue
        fac = factorize_spf(e, spf)
        phis[e] = euler_phi_from_factors(fac)
        lams[e] = carmichael_from_factors(fac)
        lqs[e] = 1 if e == 1 else order_with_factored_exponent(q % e, e, lams[e], factorize(lams[e]).primes)
        if e > 2 and flags[e][0]:
            if phis[e] % lqs[e]:
                raise ArithmeticError(f"l_q({e}) does not divide phi({e})")
            contrib[e] = phis[e] // lqs[e]
    ranks = [0] * (x_max + 1)
    for e in range(3, x_max + 1):
        c = contrib[e]
        if c:
            for dd in range(e, x_max + 1, e):
                ranks[dd] += c
    rows = []
    total = 0
    b1_sum = 0
    hist = Counter()
    for d in range(1, x_max + 1):
        if d % p == 0:
            continue
        r = ranks[d]
        bound = d - 2 if d % 2 == 0 else d - 1
        if d > 2 and r > bound:
            raise ArithmeticError(f"rank {r} of E_{d} exceeds the trivial bound {bound}")
        if d > 2 and flags[d][1]:
            for e in divisors(d):
                if e > 2 and not flags[e][1]:
                    raise ArithmeticError(f"{d} has -1 in <{p}> but its divisor {e} does not")
            b1_sum += r
        total += r
        hist[r] += 1
        rows.append(
            {
                "d": d,
                "rank": r,
                "trivial_bound_ok": d <= 2 or r <= bound,
                "brumer_main_term": _sig(d / (2 * math.log(d, q))) if d > 1 else None,
                "phi_over_lambda": _sig(phis[d] / lams[d]),
                "phi_over_lq": _sig(phis[d] / lqs[d]),
            }
        )
    best = max(rows, key=lambda row: (row["rank"], -row["d"]))
    return {
        "q": int(q),
        "p": p,
        "x_max": x_max,
        "rows": rows,
        "average": _sig(total / x_max),
        "rank_sum": total,
        "b1_rank_sum": b1_sum,
        "max_rank": best["rank"],
        "argmax": best["d"],
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }


def _sig(v: float) -> float:
    return float(f"{v:.6g}")


def stats_csv(stats: dict) -> str:
    lines = ["d,rank"]
    lines += [f"{row['d']},{row['rank']}" for row in stats["rows"]]
    for key in ("q", "p", "x_max", "rank_sum", "average", "max_rank", "argmax", "b1_rank_sum"):
        lines.append(f"# {key},{stats[key]}")
    return "\n".join(lines) + "\n"
