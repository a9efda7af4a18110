"""Ranks of y^2 = x(x + 1)(x + u^d) over F_q(u).

The rank is a sum over divisors e > 2 of d with <p>_e balanced of
phi(e)/l_q(e).  This script prints a few reports and the average rank up
to x together with its largest values.

    python demos/rank_statistics.py [x_max]
"""

import sys

from balgroups import rank_Ed, rank_stats

x_max = int(sys.argv[1]) if len(sys.argv) > 1 else 3000

for q, d in [(3, 4), (81, 5), (81, 10), (9, 4), (3, 40), (5, 312)]:
    rep = rank_Ed(q, d)
    parts = " + ".join(f"{r.phi}/{r.l}" for r in rep.rows if r.balanced) or "0"
    print(f"q = {q:3d}, d = {d:4d}: rank {rep.rank:4d} = {parts}")

print()
for q in (3, 5, 9):
    s = rank_stats(q, x_max)
    top = sorted(s["rows"], key=lambda r: -r["rank"])[:5]
    print(f"q = {q}: average rank for d <= {x_max} is {s['average']}")
    print(f"  share of the rank sum from d with -1 in <p>: {s['b1_rank_sum'] / max(s['rank_sum'], 1):.3f}")
    print("  largest:", ", ".join(f"d={r['d']} rank={r['rank']} (Brumer term {r['brumer_main_term']})" for r in top))
