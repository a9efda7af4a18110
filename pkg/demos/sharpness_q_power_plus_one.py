"""Large ranks at d = q^n + 1.

Here q^n = -1 mod d, so -1 lies in <p>_e for every divisor e of d and every
divisor e > 2 contributes.  Since l_q(e) divides 2n, the rank is at least
about (d - 2)/(2n), which tracks the main term d/(2 log_q d) of the general
upper bound.  The ratio column shows how close it gets.

    python demos/sharpness_q_power_plus_one.py
"""

import math

from balgroups import rank_Ed

for q in (3, 5, 7, 9):
    print(f"q = {q}")
    for n in range(1, 9):
        d = q**n + 1
        if d > 10**7:
            break
        rank = rank_Ed(q, d).rank
        main = d / (2 * math.log(d, q))
        print(f"  n = {n}: d = {d:>8}  rank = {rank:>8}  d/(2 log_q d) = {main:>11.1f}  ratio = {rank / main:.3f}")
