"""Balanced subgroups of (Z/dZ)^x.

A subgroup H of the units mod d is balanced when every coset of H has as many
members below d/2 as above it.  The package decides this three ways (coset
count, exact character sums, conductor test), scans for the exceptional
order-2 cases, runs the B_p censuses and turns balancedness into ranks of the
curves E_d over F_q(u).
"""

from .balanced import (
    BalancedVerdict,
    cyclic_verdict,
    is_balanced_characters,
    is_balanced_definition,
    is_balanced_fast,
    order2_scan,
    prime_power_type,
    prop_crit_conclusion,
    subgroup_verdict,
)
from .census import (
    CensusRecord,
    CensusTable,
    census_csv,
    census_from_json,
    census_json,
    census_scan,
    f_p,
    f_p_prime,
    g_p,
    in_B_p,
    in_B_p0,
    in_B_p0_fast,
    in_B_p1,
)
from .characters import (
    DirichletCharacter,
    all_characters,
    c_chi,
    c_chi_nonvanishing,
    c_chi_via_reduction,
    conductor,
    induce,
    is_odd,
    is_primitive,
    primitive_inducing,
)
from .cyclic_fast import is_balanced_cyclic
from .cyclotomic import CyclotomicInteger, cyclotomic_polynomial
from .numtheory import (
    carmichael_lambda,
    euler_phi,
    factorize,
    multiplicative_order,
    v2,
    v2_pow_minus_one,
    valuation,
)
from .rank import PreconditionError, RankReport, rank_Ed, rank_stats, supersingular_rank_check
from .unitgroup import (
    Subgroup,
    UnitGroupStructure,
    all_subgroups,
    cosets,
    cyclic_subgroup,
    subgroup_generated,
    unit_group,
)

__version__ = "0.1.0"
