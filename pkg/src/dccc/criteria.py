"""Exclusion tests and structural filters on moduli multisets.

The central tool answers: can k congruence classes with the given moduli
possibly be disjoint?  With M a multiple of lcm{gcd(m_i, m_j)}, the class
(a_i mod m_i) splits into M/gcd(m_i, M) classes mod M, so

    sum_i M / gcd(m_i, M)  >  M

forces two of the mod-M classes to collide whatever the residues: the
moduli are EXCLUDED.  Otherwise the test is INCONCLUSIVE (it can never
certify that residues do exist).  Everything runs in exact integers; the
scaled form above replaces the rational form sum_i 1/gcd(m_i, M) > 1.

The remaining predicates are necessary conditions on the moduli of a
minimal counterexample to the conjecture (a counterexample minimizing
first k, then the moduli sum), and are used by the search module.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable

from .arith import divisors, factorize, is_prime_power, lcm_range
from .errors import RangeError

__all__ = [
    "LemmaTestOutcome",
    "Verdict",
    "all_subsets_pass",
    "big_prime_filter",
    "candidate_moduli",
    "distinct_submultisets",
    "first_excluded_subset",
    "gcd_bounds_ok",
    "lemma_excluded",
    "lemma_test",
    "multiplicity_filters",
    "pairwise_gcds",
    "refute_big_prime",
    "shares_prime_powers",
]

Moduli = tuple[int, ...]

# verdicts for sub-multisets up to this size are memoized; small multisets
# repeat massively across search branches, long ones never recur
_CACHED_SUBSET_MAX = 6


class Verdict(str, Enum):
    EXCLUDED = "EXCLUDED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class LemmaTestOutcome:
    """Integer-form exclusion test result: EXCLUDED iff scaled_sum > threshold."""

    verdict: Verdict
    modulus_used: int
    scaled_sum: int
    threshold: int

    @property
    def excluded(self) -> bool:
        return self.verdict is Verdict.EXCLUDED


def _as_multiset(moduli: Iterable[int]) -> Moduli:
    ms = tuple(sorted(moduli))
    if any(m < 2 for m in ms):
        raise ValueError(f"moduli must all be >= 2, got {ms}")
    return ms


def pairwise_gcds(moduli: Iterable[int]) -> list[int]:
    """Distinct values of gcd(m_i, m_j) over i < j, ascending."""
    ms = _as_multiset(moduli)
    if len(ms) < 2:
        raise ValueError("need at least 2 moduli")
    return sorted({gcd(a, b) for a, b in combinations(ms, 2)})


def lemma_test(moduli: Iterable[int], modulus: int | None = None) -> LemmaTestOutcome:
    """Run the exclusion test against M = modulus (default: the minimal choice).

    The minimal valid M, lcm of the pairwise gcds, dominates every other
    multiple: gcd(m, M) divides gcd(m, M') whenever M | M', so the default
    sum is the largest and the default test the strongest.
    """
    ms = _as_multiset(moduli)
    if len(ms) < 2:
        raise ValueError("need at least 2 moduli")
    base = reduce(lcm, (gcd(a, b) for a, b in combinations(ms, 2)), 1)
    if modulus is None:
        modulus = base
    elif modulus < 1 or modulus % base != 0:
        raise ValueError(
            f"modulus {modulus} is not a positive multiple of lcm(pairwise gcds) = {base}"
        )
    scaled = sum(modulus // gcd(m, modulus) for m in ms)
    verdict = Verdict.EXCLUDED if scaled > modulus else Verdict.INCONCLUSIVE
    return LemmaTestOutcome(verdict, modulus, scaled, modulus)


def _excluded(ms: Moduli) -> bool:
    # hot path: lemma_test with default M, boolean only, no validation
    M = 1
    for i in range(len(ms) - 1):
        a = ms[i]
        for b in ms[i + 1:]:
            M = lcm(M, gcd(a, b))
    return sum(M // gcd(m, M) for m in ms) > M


_excluded_cached = lru_cache(maxsize=None)(_excluded)


def lemma_excluded(ms: Moduli) -> bool:
    """Default-M exclusion verdict for a sorted moduli tuple (memoized when small)."""
    if len(ms) <= _CACHED_SUBSET_MAX:
        return _excluded_cached(ms)
    return _excluded(ms)


def gcd_bounds_ok(moduli: Iterable[int], k: int) -> bool:
    """True iff every pairwise gcd lies strictly between 1 and k."""
    ms = _as_multiset(moduli)
    if len(ms) < 2:
        raise ValueError("need at least 2 moduli")
    return all(1 < gcd(a, b) < k for a, b in combinations(ms, 2))


def distinct_submultisets(ms: Moduli, size: int) -> set[Moduli]:
    """Distinct sorted sub-multisets of the given size (value-level, not positional)."""
    return set(combinations(sorted(ms), size))


def all_subsets_pass(moduli: Iterable[int], min_size: int = 3) -> bool:
    """True iff no sub-multiset of size >= min_size is EXCLUDED under its default M.

    Sub-multisets equal as value multisets are tested once; with heavily
    repeated moduli that collapses an exponential pile of positional
    subsets into a short list.
    """
    ms = _as_multiset(moduli)
    if len(ms) < min_size:
        raise ValueError(f"need at least {min_size} moduli, got {len(ms)}")
    for size in range(min_size, len(ms) + 1):
        for sub in distinct_submultisets(ms, size):
            if lemma_excluded(sub):
                return False
    return True


def first_excluded_subset(moduli: Iterable[int], min_size: int = 3) -> Moduli | None:
    """Smallest-then-lexicographically-first EXCLUDED sub-multiset, or None.

    Reporting companion to all_subsets_pass; iterates in sorted order so
    the witness is deterministic.
    """
    ms = _as_multiset(moduli)
    if len(ms) < min_size:
        raise ValueError(f"need at least {min_size} moduli, got {len(ms)}")
    for size in range(min_size, len(ms) + 1):
        for sub in sorted(distinct_submultisets(ms, size)):
            if lemma_excluded(sub):
                return sub
    return None


def candidate_moduli(k: int) -> list[int]:
    """Divisors of lcm(1..k-1) that are neither 1 nor prime powers, ascending.

    These are the only values a modulus in a minimal counterexample with k
    classes can take, hence the search alphabet.
    """
    if not 3 <= k <= 31:
        raise RangeError(f"candidate_moduli requires 3 <= k <= 31, got {k}")
    return [d for d in divisors(lcm_range(k)) if d != 1 and not is_prime_power(d)]


def shares_prime_powers(moduli: Iterable[int]) -> bool:
    """True iff every prime power dividing some m_i also divides another m_j.

    Checking the maximal power p^e per prime of each element suffices:
    lower powers divide wherever the maximal one does.
    """
    ms = _as_multiset(moduli)
    if len(ms) < 2:
        raise ValueError("need at least 2 moduli")
    for i, m in enumerate(ms):
        for p, e in factorize(m).items():
            q = p**e
            if not any(ms[j] % q == 0 for j in range(len(ms)) if j != i):
                return False
    return True


def multiplicity_filters(moduli: Iterable[int], k: int) -> bool:
    """Multiplicity conditions on a minimal counterexample of size k >= 5.

    At least three moduli must be multiples of k-1; if exactly three, then
    at least two of the remaining moduli must be multiples of k-2.
    """
    ms = _as_multiset(moduli)
    if k < 5 or len(ms) != k:
        raise ValueError(f"requires a multiset of size k >= 5, got {len(ms)} and k={k}")
    near = sum(1 for m in ms if m % (k - 1) == 0)
    if near < 3:
        return False
    if near == 3:
        others = sum(1 for m in ms if m % (k - 1) != 0 and m % (k - 2) == 0)
        return others >= 2
    return True


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def big_prime_filter(moduli: Iterable[int], k: int) -> bool:
    """For 7 <= k <= 30: every prime p in [k/2, k) divides exactly 0 or 2 moduli."""
    if not 7 <= k <= 30:
        raise ValueError(f"big_prime_filter is valid only for 7 <= k <= 30, got {k}")
    ms = _as_multiset(moduli)
    if len(ms) != k:
        raise ValueError(f"need exactly k={k} moduli, got {len(ms)}")
    for p in range((k + 1) // 2, k):
        if _is_prime(p) and sum(1 for m in ms if m % p == 0) not in (0, 2):
            return False
    return True


def refute_big_prime(k: int) -> bool:
    """True iff no minimal counterexample of size k can exist because k-1 is
    a prime in [k/2, k): it would have to divide at least three moduli by
    the multiplicity condition but exactly 0 or 2 by the big-prime one.

    The prime-count argument behind the big-prime condition is proved only
    for 7 <= k <= 30, so the refutation fires only there.
    """
    return 7 <= k <= 30 and _is_prime(k - 1)
