"""Membership in B_p, B_{p,0}, B_{p,1}, B_{p,*} and range scans over d.

For a fixed integer p with |p| > 1 and d > 2 coprime to p:

* d is in B_p when <p>_d is balanced,
* in B_{p,0} when 4 | d and d/2 + 1 lies in <p>_d,
* in B_{p,1} when -1 lies in <p>_d,
* in B_{p,*} when it is in B_p but not in B_{p,0}.

The scan uses only fast paths; the slow oracles live in ``balanced`` and
are exercised by the test-suite.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Optional

from .balanced import is_balanced_definition
from .cyclic_fast import LocalCache, is_balanced_cyclic
from .numtheory import (
    carmichael_lambda,
    factorize_spf,
    multiplicative_order,
    spf_sieve,
    v2,
    v2_pow_minus_one,
)
from .parallel import map_shards
from .unitgroup import cyclic_subgroup

CSV_FIELDS = ("d", "j", "m", "l_p_m", "f_p_m", "in_Bp", "in_Bp0", "in_Bp1", "in_Bpstar")
COUNT_KEYS = ("Bp", "Bp0", "Bp1", "Bpstar")


@dataclass(frozen=True)
class CensusRecord:
    d: int
    j: int
    m: int
    l_p_m: int
    f_p_m: int
    in_Bp: bool
    in_Bp0: bool
    in_Bp1: bool
    in_Bpstar: bool

    def csv_row(self) -> list[str]:
        return [str(int(getattr(self, k))) for k in CSV_FIELDS]


@dataclass
class CensusTable:
    p: int
    x_max: int
    checkpoints: list[int]
    counts: list[dict] = field(default_factory=list)

    def rows(self) -> list[dict]:
        out = []
        for x, c in zip(self.checkpoints, self.counts):
            loglog = math.log(math.log(x)) if x > math.e else None
            norm = _sig6(c["Bp0"] * loglog / x) if loglog else None
            ratio = _sig6(c["Bpstar"] / c["Bp1"]) if c["Bp1"] else None
            out.append({"x": x, **c, "Bp0_norm": norm, "ratio_star_over_B1": ratio})
        return out


def _sig6(v: float) -> float:
    return float(f"{v:.6g}")


def _check_pd(p: int, d: int) -> tuple[int, int]:
    p, d = int(p), int(d)
    if abs(p) <= 1:
        raise ValueError(f"|p| must exceed 1, got {p}")
    if d <= 2:
        raise ValueError(f"d must exceed 2, got {d}")
    if math.gcd(p, d) != 1:
        raise ValueError(f"gcd({p}, {d}) != 1")
    return p, d


def _odd_part(d: int) -> tuple[int, int]:
    j = v2(d)
    return j, d >> j


def in_B_p1(p: int, d: int) -> bool:
    """-1 in <p>_d, tested as p**(l/2) == -1 with l = l_p(d) (false for odd l)."""
    p, d = _check_pd(p, d)
    l = multiplicative_order(p, d)
    return l % 2 == 0 and pow(p, l // 2, d) == d - 1


def in_B_p0(p: int, d: int) -> bool:
    """4 | d and d/2 + 1 in <p>_d.

    d/2 + 1 has order 2, and a cyclic group holds at most one element of
    order 2, namely p**(l/2); so membership is a single comparison.
    """
    p, d = _check_pd(p, d)
    if p % 2 == 0 or d % 4:
        return False
    l = multiplicative_order(p, d)
    return l % 2 == 0 and pow(p, l // 2, d) == d // 2 + 1


def _bp0_criterion(p: int, j: int, l_m: int) -> bool:
    if j < 2:
        return False
    if l_m % 2:
        return j == 1 + v2(p - 1) or j > v2(p * p - 1)
    return j > v2_pow_minus_one(p, l_m)


def in_B_p0_fast(p: int, d: int) -> bool:
    """B_{p,0} membership from the 2-adic valuation criterion; no group search.

    With d = 2**j * m, m odd: if l_p(m) is odd, d is a member iff
    j = 1 + v2(p - 1) or j > v2(p**2 - 1); if l_p(m) is even, iff
    j > v2(p**l_p(m) - 1).
    """
    p, d = _check_pd(p, d)
    if p % 2 == 0:
        return False
    j, m = _odd_part(d)
    return _bp0_criterion(p, j, multiplicative_order(p, m))


def _check_pm(p: int, m: int) -> tuple[int, int]:
    p, m = int(p), int(m)
    if p % 2 == 0 or abs(p) <= 1:
        raise ValueError(f"p must be odd with |p| > 1, got {p}")
    if m < 1 or m % 2 == 0 or math.gcd(m, p) != 1:
        raise ValueError(f"m must be odd, positive and prime to {p}, got {m}")
    return p, m


def f_p(p: int, m: int) -> int:
    """v2(p**l_p(m) - 1)."""
    p, m = _check_pm(p, m)
    return v2_pow_minus_one(p, multiplicative_order(p, m))


def f_p_prime(p: int, m: int) -> int:
    p, m = _check_pm(p, m)
    return max(f_p(p, m), v2(p * p - 1))


def g_p(p: int, m: int) -> int:
    """v2(p**lambda(m) - 1)."""
    p, m = _check_pm(p, m)
    return v2_pow_minus_one(p, carmichael_lambda(m))


def in_B_p(p: int, d: int, method: str = "fast") -> bool:
    """<p>_d balanced; ``method="definition"`` uses the coset-counting oracle."""
    p, d = _check_pd(p, d)
    if method == "fast":
        return is_balanced_cyclic(p, d)
    if method == "definition":
        return is_balanced_definition(d, cyclic_subgroup(d, p)).balanced
    raise ValueError(f"unknown method {method!r}")


class _Kernel:
    """Per-shard state: factor tables and cached local orders of p."""

    def __init__(self, p: int, hi: int):
        self.p = p
        self.spf = spf_sieve(max(hi, 2)).tolist()
        self._rm1: dict[int, tuple] = {}
        self.local = LocalCache(p, self._r_minus_one)

    def _r_minus_one(self, r: int):
        got = self._rm1.get(r)
        if got is None:
            got = self._rm1[r] = factorize_spf(r - 1, self.spf)
        return got

    def record(self, d: int) -> CensusRecord:
        p = self.p
        fac = factorize_spf(d, self.spf)
        j = fac[0][1] if fac[0][0] == 2 else 0
        m = d >> j
        l_m = 1
        for r, e in fac:
            if r != 2:
                l = self.local(r, e).l
                l_m = l_m * l // math.gcd(l_m, l)
        l_2 = self.local(2, j).l if j else 1
        l_d = l_m * l_2 // math.gcd(l_m, l_2)
        odd_p = p % 2 != 0
        f_m = v2_pow_minus_one(p, l_m) if odd_p else 0
        b1 = l_d % 2 == 0 and pow(p, l_d // 2, d) == d - 1
        b0 = odd_p and _bp0_criterion(p, j, l_m)
        b = is_balanced_cyclic(p, d, fac, local=self.local)
        return CensusRecord(d, j, m, l_m, f_m, b, b0, b1, b and not b0)


def _scan_block(bounds, p: int, checkpoints: tuple[int, ...], keep: str):
    lo, hi = bounds
    kern = _Kernel(p, hi)
    bins = [dict.fromkeys(COUNT_KEYS, 0) for _ in checkpoints]
    records = []
    ci = 0
    for d in range(max(lo, 3), hi + 1):
        if math.gcd(d, p) != 1:
            continue
        while ci < len(checkpoints) and checkpoints[ci] < d:
            ci += 1
        rec = kern.record(d)
        if ci < len(checkpoints):
            b = bins[ci]
            b["Bp"] += rec.in_Bp
            b["Bp0"] += rec.in_Bp0
            b["Bp1"] += rec.in_Bp1
            b["Bpstar"] += rec.in_Bpstar
        if keep == "all" or (keep == "members" and (rec.in_Bp or rec.in_Bp0 or rec.in_Bp1)):
            records.append(rec)
    return bins, records


def default_checkpoints(x_max: int) -> list[int]:
    pts = []
    x = 10
    while x < x_max:
        pts.append(x)
        x *= 10
    pts.append(x_max)
    return pts


def census_scan(
    p: int,
    x_max: int,
    checkpoints=None,
    *,
    shards: Optional[int] = None,
    records: str = "none",
) -> tuple[CensusTable, list[CensusRecord]]:
    """Scan 2 < d <= x_max coprime to p.

    Returns the checkpoint table and, depending on ``records``
    ("none", "members" or "all"), the per-d records sorted by d.  Shards are
    consecutive ranges, so the result does not depend on the shard count.
    """
    p, x_max = int(p), int(x_max)
    if abs(p) <= 1:
        raise ValueError(f"|p| must exceed 1, got {p}")
    if x_max < 3:
        raise ValueError(f"x_max must be >= 3, got {x_max}")
    if records not in ("none", "members", "all"):
        raise ValueError(f"records must be none, members or all, got {records!r}")
    cps = sorted({int(x) for x in (checkpoints or default_checkpoints(x_max)) if 3 <= int(x) <= x_max})
    if not cps or cps[-1] != x_max:
        cps.append(x_max)
    work = partial(_scan_block, p=p, checkpoints=tuple(cps), keep=records)
    parts = map_shards(work, 3, x_max, shards)
    totals = dict.fromkeys(COUNT_KEYS, 0)
    counts = []
    for i in range(len(cps)):
        for bins, _ in parts:
            for k in COUNT_KEYS:
                totals[k] += bins[i][k]
        counts.append(dict(totals))
    recs = [r for _, rs in parts for r in rs]
    return CensusTable(p, x_max, cps, counts), recs


def census_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def census_json(table: CensusTable, records=None) -> str:
    obj = {"p": table.p, "x_max": table.x_max, "checkpoints": table.rows()}
    if records is not None:
        obj["records"] = [asdict(r) for r in records]
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def census_from_json(text: str) -> tuple[CensusTable, Optional[list[CensusRecord]]]:
    obj = json.loads(text)
    rows = obj["checkpoints"]
    table = CensusTable(
        obj["p"], obj["x_max"], [r["x"] for r in rows], [{k: r[k] for k in COUNT_KEYS} for r in rows]
    )
    recs = None
    if "records" in obj:
        recs = [CensusRecord(**r) for r in obj["records"]]
    return table, recs
