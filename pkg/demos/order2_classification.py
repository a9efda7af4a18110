"""Which subgroups of order 2 are balanced?

<-1> is always balanced, and so is <d/2 + 1> when 4 | d.  Scanning every
element of order 2 for d up to 2000 turns up only four more.

    python demos/order2_classification.py [d_max]
"""

import sys

from balgroups import cyclic_subgroup, is_balanced_definition, order2_scan

d_max = int(sys.argv[1]) if len(sys.argv) > 1 else 2000

pairs = order2_scan(d_max)
print(f"exceptional balanced <h> of order 2 with d <= {d_max}:")
for d, h in pairs:
    H = cyclic_subgroup(d, h)
    print(f"  d = {d:3d}, h = {h:2d}   h^2 = {h * h % d}   definition oracle: {is_balanced_definition(d, H).balanced}")

# a typical failure, for contrast: <3> mod 8 puts 1 and 3 both below 4
v = is_balanced_definition(8, cyclic_subgroup(8, 3))
print(f"<3> mod 8 balanced? {v.balanced}; unbalanced coset {sorted(v.witness)}")
