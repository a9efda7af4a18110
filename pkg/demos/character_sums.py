"""Half-range character sums and the conductor test.

For an odd character chi mod d, c_chi is the sum of chi(a) over 0 < a < d/2,
an element of Z[zeta_n].  <h> is balanced exactly when c_chi = 0 for every
odd chi with chi(h) = 1.  The conductor test predicts which c_chi vanish
without summing anything.

    python demos/character_sums.py [d]
"""

import sys

from balgroups import all_characters, c_chi, c_chi_nonvanishing, conductor, is_odd

d = int(sys.argv[1]) if len(sys.argv) > 1 else 40

print(f"odd characters mod {d}")
print(f"{'exponents':<14}{'conductor':>10}{'c_chi = 0':>11}{'predicted':>11}")
mismatches = 0
for chi in all_characters(d):
    if not is_odd(chi):
        continue
    zero = c_chi(chi).is_zero
    predicted = not c_chi_nonvanishing(chi)
    mismatches += zero != predicted
    print(f"{str(chi.exponents):<14}{conductor(chi):>10}{str(zero):>11}{str(predicted):>11}")
print(f"mismatches: {mismatches}")

even = [chi for chi in all_characters(d) if not is_odd(chi) and not chi.is_trivial]
print(f"even nontrivial characters with c_chi != 0: {sum(not c_chi(chi).is_zero for chi in even)} of {len(even)}")
