"""Oracle-equivalence suites behind ``balgroups verify`` and the acceptance tests.

Each ``check_*`` function returns a ``CheckResult``; the ``full`` tier uses
the bounds promised in the documentation, ``quick`` shrinks them for CI.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from . import balanced as bal
from .census import census_csv, census_json, census_scan, in_B_p0, in_B_p0_fast
from .characters import (
    all_characters,
    c_chi,
    c_chi_nonvanishing,
    c_chi_via_reduction,
    conductor,
    evaluate,
    induce,
    is_odd,
    primitive_inducing,
)
from .cyclotomic import CyclotomicInteger
from .numtheory import factorize, v2_pow_minus_one
from .rank import rank_Ed, split_prime_power, supersingular_rank_check, PreconditionError
from .unitgroup import all_subgroups, cyclic_subgroup, subgroup_generated

EXCEPTIONAL_ORDER2 = {(24, 17), (24, 19), (60, 41), (60, 49)}

TIERS = {
    "quick": {
        "order2_dmax": 200,
        "triple_cyclic": 80,
        "triple_all": 40,
        "chars": 60,
        "bp0_dmax": 5000,
        "intersection_x": 10**4,
        "census_x": 10**4,
        "rank_dmax": 60,
        "super_q": 30,
        "super_d": 20,
        "struct_sub": 60,
        "struct_half": 300,
        "crit_dmax": 5000,
    },
    "full": {
        "order2_dmax": 2000,
        "triple_cyclic": 300,
        "triple_all": 100,
        "chars": 200,
        "bp0_dmax": 50000,
        "intersection_x": 10**5,
        "census_x": 10**6,
        "rank_dmax": 200,
        "super_q": 100,
        "super_d": 50,
        "struct_sub": 200,
        "struct_half": 2000,
        "crit_dmax": 5000,
    },
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(name, fn, *args):
    t0 = time.perf_counter()
    passed, detail = fn(*args)
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


def _order2(d_max):
    got = set(bal.order2_scan(d_max))
    expected = {x for x in EXCEPTIONAL_ORDER2 if x[0] <= d_max}
    return got == expected, f"d <= {d_max}: exceptional pairs {sorted(got)}"


def _verdicts_agree(d, H):
    a = bal.is_balanced_definition(d, H)
    b = bal.is_balanced_characters(d, H)
    c = bal.is_balanced_fast(d, H)
    if not (a.balanced == b.balanced == c.balanced):
        return False
    for v in (b, c):
        if not v.balanced:
            chi = v.witness
            if not (is_odd(chi) and all(evaluate(chi, h) == 0 for h in H.generators) and c_chi_nonvanishing(chi)):
                return False
    if not a.balanced:
        low = sum(1 for x in a.witness if 2 * x < d)
        if 2 * low == len(a.witness):
            return False
    return True


def _triple(d_cyclic, d_all):
    n_cyc = n_all = 0
    for d in range(3, d_cyclic + 1):
        seen = set()
        for h in range(1, d):
            if math.gcd(h, d) != 1:
                continue
            H = cyclic_subgroup(d, h)
            if H.elements in seen:
                continue
            seen.add(H.elements)
            n_cyc += 1
            if not _verdicts_agree(d, H):
                return False, f"disagreement at d={d}, h={h}"
            if bal.is_balanced_cyclic(h, d) != bal.is_balanced_definition(d, H).balanced:
                return False, f"counting decider disagrees at d={d}, h={h}"
    for d in range(3, d_all + 1):
        for H in all_subgroups(d):
            n_all += 1
            if not _verdicts_agree(d, H):
                return False, f"disagreement at d={d}, H={H.elements}"
    return True, f"{n_cyc} cyclic subgroups (d <= {d_cyclic}), {n_all} subgroups (d <= {d_all}) agree"


def _lemma_factor(chi_low, ell, n):
    # the factor relating c_chi mod d to c_chi' mod d/ell, in Z[zeta_n]
    k = evaluate(chi_low, ell)
    one = CyclotomicInteger.root(n, 0)
    if k is None:
        return CyclotomicInteger.zero(n) if ell == 2 else one
    z = CyclotomicInteger.root(n, k * (n // chi_low.value_order))
    return -z if ell == 2 else one - z


def _char_identities(d_max):
    counts = {"even": 0, "primitive_odd": 0, "lemma": 0, "prop": 0}
    for d in range(3, d_max + 1):
        primes = [r for r, _ in factorize(d)]
        for chi in all_characters(d):
            c = c_chi(chi)
            odd = is_odd(chi)
            if chi.is_trivial:
                continue
            if not odd:
                counts["even"] += 1
                if not c.is_zero:
                    return False, f"even character {chi} has c_chi != 0"
            cond = conductor(chi)
            if odd and cond == d:
                counts["primitive_odd"] += 1
                if c.is_zero:
                    return False, f"primitive odd {chi} has c_chi = 0"
            if odd:
                counts["prop"] += 1
                if c_chi_nonvanishing(chi) == c.is_zero:
                    return False, f"non-vanishing predicate wrong for {chi}"
            prim = None
            for ell in primes:
                low = d // ell
                if low % cond:
                    continue
                prim = prim or primitive_inducing(chi)
                chi_low = induce(prim, low)
                n = chi.value_order
                rhs = _lemma_factor(chi_low, ell, n) * c_chi(chi_low).lift(n // chi_low.value_order)
                counts["lemma"] += 1
                if rhs != c:
                    return False, f"stripping identity fails for {chi}, l={ell}"
            if c_chi_via_reduction(chi) != c:
                return False, f"recursive reduction disagrees for {chi}"
    detail = ", ".join(f"{k}={v}" for k, v in counts.items())
    return True, f"d <= {d_max}: {detail}"


def _coprime_range(p, lo, hi):
    return (d for d in range(lo, hi + 1) if math.gcd(d, p) == 1)


def _bp0(d_max):
    n = 0
    for p in (3, -3, 5, 7, 9, -9, 15):
        for d in _coprime_range(p, 3, d_max):
            n += 1
            if in_B_p0_fast(p, d) != in_B_p0(p, d):
                return False, f"mismatch at p={p}, d={d}"
    return True, f"{n} (p, d) pairs agree, d <= {d_max}"


def _big_v2(n):
    # independent of numtheory.v2: count trailing zero bits
    n = abs(n)
    return (n & -n).bit_length() - 1


def _valuations():
    n = 0
    for p in (3, -3, 5, 7, 9, 15):
        for k in range(1, 65):
            n += 1
            if v2_pow_minus_one(p, k) != _big_v2(p**k - 1):
                return False, f"closed form wrong at p={p}, k={k}"
    for p in (3, -3, 5, 7, 9, 15):
        for k in (1, 3, 5):
            for i in range(1, 6):
                num, den = p ** (2**i * k) - 1, p ** (2 * k) - 1
                if num % den or _big_v2(num // den) != i - 1:
                    return False, f"quotient identity fails at p={p}, k={k}, i={i}"
    return True, f"{n} closed-form values and the quotient identity for i <= 5 hold"


def _intersection(x):
    details = []
    for p in (3, 5, 7):
        _, recs = census_scan(p, x, records="members")
        both = [r.d for r in recs if r.in_Bp0 and r.in_Bp1]
        details.append(f"p={p}: {both}")
        if p == 3 and both != [4]:
            return False, "; ".join(details)
        if len(both) > 1:
            return False, "; ".join(details)
    return True, f"x = {x}: " + "; ".join(details)


def census_coherence(p, x, shards=(1, 8)):
    """Scan invariants plus byte-identical CSV/JSON across shard counts."""
    outputs = []
    for s in shards:
        table, recs = census_scan(p, x, shards=s, records="members")
        outputs.append((census_csv(recs), census_json(table), table, recs))
    first = outputs[0]
    for other in outputs[1:]:
        if other[0] != first[0] or other[1] != first[1]:
            return False, f"p={p}: output depends on shard count"
    _, _, table, recs = first
    for r in recs:
        if (r.in_Bp0 or r.in_Bp1) and not r.in_Bp:
            return False, f"p={p}: d={r.d} in B_p0 or B_p1 but not balanced"
        if r.in_Bpstar != (r.in_Bp and not r.in_Bp0):
            return False, f"p={p}: B_p* flag wrong at d={r.d}"
        if r.in_Bp0 and not r.j > r.f_p_m:
            return False, f"p={p}: d={r.d} in B_p0 with j <= f_p(m)"
    prev = None
    for row in table.rows():
        if row["Bp"] != row["Bp0"] + row["Bpstar"]:
            return False, f"p={p}: B_p != B_p0 + B_p* at x={row['x']}"
        if row["Bp"] < row["Bp0"] + row["Bp1"] - 1:
            return False, f"p={p}: B_p < B_p0 + B_p1 - 1 at x={row['x']}"
        if prev and any(row[k] < prev[k] for k in ("Bp", "Bp0", "Bp1", "Bpstar")):
            return False, f"p={p}: counts decrease at x={row['x']}"
        prev = row
    last = table.rows()[-1]
    return True, (
        f"p={p}, x={x}: Bp={last['Bp']} Bp0={last['Bp0']} Bp1={last['Bp1']} Bp*={last['Bpstar']}"
        f" Bp0_norm={last['Bp0_norm']} ratio={last['ratio_star_over_B1']}"
    )


def _census(x):
    details = []
    for p in (3, -3, 5):
        ok, detail = census_coherence(p, x)
        details.append(detail)
        if not ok:
            return False, detail
    return True, "; ".join(details)


def _rank_oracle(q, d):
    p, _ = split_prime_power(q)
    total = 0
    for e in range(3, d + 1):
        if d % e:
            continue
        H = cyclic_subgroup(e, p)
        if bal.is_balanced_definition(e, H).balanced:
            phi = sum(1 for a in range(1, e) if math.gcd(a, e) == 1)
            total += phi // len(cyclic_subgroup(e, q))
    return total


def _odd_prime_powers(limit):
    out = []
    for q in range(3, limit + 1, 2):
        fac = factorize(q).factors
        if len(fac) == 1:
            out.append(q)
    return out


def _rank(d_max, q_max, super_d):
    n = 0
    for q in (3, 5, 9, 27):
        p, _ = split_prime_power(q)
        for d in range(1, d_max + 1):
            if d % p == 0:
                continue
            n += 1
            if rank_Ed(q, d).rank != _rank_oracle(q, d):
                return False, f"rank mismatch at q={q}, d={d}"
    m = 0
    for q in _odd_prime_powers(q_max):
        for d in range(3, super_d + 1):
            try:
                ok = supersingular_rank_check(q, d)
            except PreconditionError:
                continue
            m += 1
            if not ok:
                return False, f"supersingular rank fails at q={q}, d={d}"
    spots = {(3, 4): 1, (81, 5): 4, (81, 10): 8}
    for (q, d), want in spots.items():
        if rank_Ed(q, d).rank != want:
            return False, f"rank({q},{d}) != {want}"
    return True, f"{n} ranks match the coset oracle; {m} supersingular cases; spot values ok"


def _structure(d_sub, d_half):
    n_pairs = 0
    for d in range(3, d_sub + 1):
        subs = all_subgroups(d)
        flags = [bal.is_balanced_definition(d, H).balanced for H in subs]
        for H, b in zip(subs, flags):
            if b and len(H) % 2:
                return False, f"odd-order balanced subgroup at d={d}"
        balanced_sets = [set(H.elements) for H, b in zip(subs, flags) if b]
        for K, bk in zip(subs, flags):
            ks = set(K.elements)
            for hs in balanced_sets:
                if hs <= ks:
                    n_pairs += 1
                    if not bk:
                        return False, f"superset of a balanced subgroup is unbalanced at d={d}"
    for d in range(3, d_half + 1):
        if not bal.is_balanced_definition(d, cyclic_subgroup(d, -1)).balanced:
            return False, f"<-1> unbalanced at d={d}"
        if d % 4 == 0 and not bal.is_balanced_definition(d, cyclic_subgroup(d, d // 2 + 1)).balanced:
            return False, f"<d/2+1> unbalanced at d={d}"
    return True, f"{n_pairs} balanced H <= K pairs (d <= {d_sub}); <-1>, <d/2+1> balanced for d <= {d_half}"


def _prop_crit(d_max):
    met = 0
    for d in _coprime_range(3, 3, d_max):
        verdict = bal.prop_crit_conclusion(3, d)
        if verdict == bal.HYPOTHESES_NOT_MET:
            continue
        met += 1
        truth = bal.is_balanced_definition(d, cyclic_subgroup(d, 3)).balanced
        if verdict == bal.NOT_BALANCED and truth:
            return False, f"d={d} declared unbalanced but is balanced"
        if verdict == bal.IN_BP0 and not in_B_p0(3, d):
            return False, f"d={d} declared in B_p0 but is not"
    if not met:
        return False, "no modulus met the hypotheses"
    return True, f"{met} moduli meet the hypotheses; all conclusions confirmed"


def run_checks(tier: str = "quick"):
    """Yield one CheckResult per acceptance criterion."""
    t = TIERS[tier]
    yield _timed("1 order-2 classification", _order2, t["order2_dmax"])
    yield _timed("2 triple-decider equivalence", _triple, t["triple_cyclic"], t["triple_all"])
    yield _timed("3 character-sum identities", _char_identities, t["chars"])
    yield _timed("4 B_p0 valuation criterion", _bp0, t["bp0_dmax"])
    yield _timed("5 2-adic valuation closed form", _valuations)
    yield _timed("6 B_p0 / B_p1 intersection", _intersection, t["intersection_x"])
    yield _timed("7 census coherence", _census, t["census_x"])
    yield _timed("8 rank formula", _rank, t["rank_dmax"], t["super_q"], t["super_d"])
    yield _timed("9 structural properties", _structure, t["struct_sub"], t["struct_half"])
    yield _timed("10 Type-3/Type-4 criterion", _prop_crit, t["crit_dmax"])


CHECKS = {
    "order2": _order2,
    "triple": _triple,
    "characters": _char_identities,
    "bp0": _bp0,
    "valuations": _valuations,
    "intersection": _intersection,
    "census": _census,
    "rank": _rank,
    "structure": _structure,
    "prop_crit": _prop_crit,
}
