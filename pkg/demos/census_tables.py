"""How often is <p> balanced mod d?

For each checkpoint x: how many d <= x have <p>_d balanced (B_p), contain
d/2 + 1 (B_p0), contain -1 (B_p1), or are balanced without d/2 + 1 (B_p*).
The two normalised columns are there to eyeball against the density
heuristics; nothing about them is asserted.

    python demos/census_tables.py [x_max]
"""

import sys

from balgroups import census_scan

x_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10**5

for p in (3, -3, 5, 7):
    table, _ = census_scan(p, x_max)
    print(f"p = {p}")
    print(f"{'x':>9}{'B_p':>8}{'B_p0':>8}{'B_p1':>8}{'B_p*':>8}{'B_p0 loglog x/x':>17}{'B_p*/B_p1':>11}")
    for r in table.rows():
        print(
            f"{r['x']:>9}{r['Bp']:>8}{r['Bp0']:>8}{r['Bp1']:>8}{r['Bpstar']:>8}"
            f"{str(r['Bp0_norm']):>17}{str(r['ratio_star_over_B1']):>11}"
        )
    print()

# B_p0 and B_p1 barely overlap: for p = 3 only d = 4 is in both
_, recs = census_scan(3, x_max, records="members")
print("B_{3,0} and B_{3,1} both contain:", [r.d for r in recs if r.in_Bp0 and r.in_Bp1])
