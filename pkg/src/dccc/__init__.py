"""Toolkit for the disjoint congruence classes conjecture.

The conjecture: whenever k >= 2 congruence classes a_i (mod m_i) are
pairwise disjoint, some pair of moduli has gcd(m_i, m_j) >= k.  The family
{1 mod k, ..., k mod k} shows the bound would be sharp.

The pieces, bottom to top:

* arith      exact integer plumbing (factorization, divisors, lcm ranges)
* classes    congruence classes, the gcd disjointness criterion, a
             brute-force oracle, and per-family conjecture checks
* criteria   the exclusion test on moduli multisets, its all-subsets
             form, and the minimal-counterexample filters
* solver     exact residue-assignment decision by reduced backtracking
* search     pruned enumeration of filter-surviving moduli multisets
* cli        command-line interface over all of the above

Everything is exact integer arithmetic; there are no floating-point
results anywhere.
"""

from .arith import divisors, factorize, gcd, is_prime_power, lcm, lcm_range
from .classes import (
    CongruenceClass,
    DcccCheck,
    family_disjoint,
    family_disjoint_bruteforce,
    normalize,
    pair_disjoint,
    verify_dccc_instance,
)
from .criteria import (
    LemmaTestOutcome,
    Verdict,
    all_subsets_pass,
    big_prime_filter,
    candidate_moduli,
    first_excluded_subset,
    gcd_bounds_ok,
    lemma_test,
    multiplicity_filters,
    pairwise_gcds,
    refute_big_prime,
    shares_prime_powers,
)
from .errors import RangeError
from .search import FilterConfig, SearchReport, enumerate_naive, grow
from .solver import AssignmentResult, Status, constraint_moduli, find_disjoint_residues

__version__ = "0.1.0"

__all__ = [
    "AssignmentResult",
    "CongruenceClass",
    "DcccCheck",
    "FilterConfig",
    "LemmaTestOutcome",
    "RangeError",
    "SearchReport",
    "Status",
    "Verdict",
    "all_subsets_pass",
    "big_prime_filter",
    "candidate_moduli",
    "constraint_moduli",
    "divisors",
    "enumerate_naive",
    "factorize",
    "family_disjoint",
    "family_disjoint_bruteforce",
    "find_disjoint_residues",
    "first_excluded_subset",
    "gcd",
    "gcd_bounds_ok",
    "grow",
    "is_prime_power",
    "lcm",
    "lcm_range",
    "lemma_test",
    "multiplicity_filters",
    "normalize",
    "pair_disjoint",
    "pairwise_gcds",
    "refute_big_prime",
    "shares_prime_powers",
    "verify_dccc_instance",
]
