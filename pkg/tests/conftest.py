"""Shared oracles and generators for the test suite.

The helpers stay deliberately independent of the library's algorithms:
exact rational arithmetic instead of the scaled integer form, raw
product-space enumeration instead of reduced backtracking.  Generators
are seeded so every run sees the same inputs.
"""

import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm

from dccc import CongruenceClass, normalize

# moduli rich in shared factors: satisfiable assignments are common
SMOOTH_POOL = [4, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30, 36, 40, 45, 60]

# blend of shared-factor and coprime-prone moduli: exclusion fires often
MIXED_POOL = [4, 6, 7, 9, 10, 11, 12, 15, 18, 20, 24, 25, 30, 36, 49]


def rational_lemma_excluded(moduli, modulus=None) -> bool:
    """Exclusion verdict computed with Fractions: sum 1/gcd(m_i, M) > 1."""
    ms = sorted(moduli)
    base = 1
    for a, b in combinations(ms, 2):
        base = lcm(base, gcd(a, b))
    m_used = base if modulus is None else modulus
    return sum(Fraction(1, gcd(m, m_used)) for m in ms) > 1


def unreduced_disjoint_search(moduli):
    """Scan the full residue boxes [0, m_i); returns a witness or None."""
    ms = list(moduli)
    pairs = list(combinations(range(len(ms)), 2))
    for assign in product(*(range(m) for m in ms)):
        if all((assign[i] - assign[j]) % gcd(ms[i], ms[j]) != 0 for i, j in pairs):
            return assign
    return None


def random_families(seed, count, max_k=5, max_modulus=60, lcm_cap=100_000):
    """Mixed batch of class families: half uniform noise, half structured
    families built disjoint (distinct residues on a scaled base modulus)
    and sometimes perturbed, so both verdicts occur often."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if rng.random() < 0.5:
            m = rng.randint(2, 10)
            k = rng.randint(2, min(max_k, m))
            scale = rng.randint(1, max_modulus // m)
            fam = [CongruenceClass(scale * a, scale * m)
                   for a in rng.sample(range(m), k)]
            if rng.random() < 0.4:
                fam[rng.randrange(k)] = normalize(
                    rng.randrange(scale * m), scale * m)
        else:
            k = rng.randint(2, max_k)
            fam = [normalize(rng.randrange(2 * max_modulus), rng.randint(1, max_modulus))
                   for _ in range(k)]
        if lcm(*(c.modulus for c in fam)) <= lcm_cap:
            out.append(fam)
    return out


def random_multisets(seed, count, pool=None, min_k=2, max_k=5):
    """Seeded moduli multisets drawn from a factor-rich pool."""
    rng = random.Random(seed)
    pool = pool if pool is not None else SMOOTH_POOL
    return [tuple(sorted(rng.choices(pool, k=rng.randint(min_k, max_k))))
            for _ in range(count)]
