"""Backtracking enumeration of moduli multisets surviving the exclusion filters.

For a given family size k the search walks all nondecreasing multisets
drawn from candidate_moduli(k).  A partial multiset is extended only by
values whose gcd with every chosen element lies strictly between 1 and k,
and is abandoned as soon as any sub-multiset containing the newest element
is EXCLUDED by the default exclusion test (sound: that sub-multiset would
still be present, and still excluded, in every completed extension).  At
full size the complete all-subsets test runs, plus any of the optional
minimal-counterexample filters selected in FilterConfig.

An empty survivor list at every k' <= k under the baseline filters
certifies the conjecture up to k by the minimal-counterexample induction.
A naive re-enumeration (every multiset generated, all filters applied only
at full size) is kept as an oracle for the pruned search at small k.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, gcd

from .criteria import (
    all_subsets_pass,
    big_prime_filter,
    candidate_moduli,
    gcd_bounds_ok,
    lemma_excluded,
    multiplicity_filters,
    shares_prime_powers,
)
from .errors import RangeError

__all__ = [
    "NAIVE_MULTISET_BOUND",
    "FilterConfig",
    "SearchReport",
    "enumerate_naive",
    "grow",
]

NAIVE_MULTISET_BOUND = 10**7


@dataclass(frozen=True)
class FilterConfig:
    """Which filters the search applies on top of the always-on baseline.

    Baseline (not configurable): moduli divide lcm(1..k-1), are not prime
    powers, have pairwise gcds strictly inside (1, k), and no sub-multiset
    of size >= 3 is EXCLUDED by the exclusion test.

    The optional flags add the minimal-counterexample filters; a run with
    them enabled proves only that no *minimal* counterexample of size k
    exists, which still settles size k once every smaller size is cleared.
    Each flag is applied only where its hypothesis makes sense:
    multiplicity needs k >= 5 and big_prime needs 7 <= k <= 30; outside
    those ranges the flag is inert.
    """

    shared_prime_powers: bool = False  # every prime power dividing one modulus divides another
    multiplicity: bool = False  # counts of multiples of k-1 and k-2
    big_prime: bool = False  # primes in [k/2, k) divide exactly 0 or 2 moduli

    @classmethod
    def baseline(cls) -> "FilterConfig":
        return cls()

    @classmethod
    def minimal_counterexample(cls) -> "FilterConfig":
        return cls(shared_prime_powers=True, multiplicity=True, big_prime=True)


@dataclass(frozen=True)
class SearchReport:
    """Survivors plus counters for one search run.

    nodes_explored counts every partial multiset the walk entered
    (including ones pruned immediately); leaves_tested counts full-size
    multisets submitted to the final filter battery.  survivors is sorted
    lexicographically, so reports are comparable across worker counts.
    arithmetic_overflowed is part of the report contract; Python integers
    are exact, so it is always False here.
    """

    k: int
    config: FilterConfig
    survivors: list[tuple[int, ...]] = field(default_factory=list)
    nodes_explored: int = 0
    leaves_tested: int = 0
    elapsed: float = 0.0
    arithmetic_overflowed: bool = False


def _leaf_passes(ms: tuple[int, ...], k: int, config: FilterConfig) -> bool:
    if not all_subsets_pass(ms):
        return False
    if config.shared_prime_powers and not shares_prime_powers(ms):
        return False
    if config.multiplicity and k >= 5 and not multiplicity_filters(ms, k):
        return False
    if config.big_prime and 7 <= k <= 30 and not big_prime_filter(ms, k):
        return False
    return True


@lru_cache(maxsize=8)
def _tables(k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Candidates plus, per index i, a bitmask of indices j >= i with
    gcd(c_i, c_j) strictly inside (1, k)."""
    cand = tuple(candidate_moduli(k))
    masks = []
    for i, a in enumerate(cand):
        mask = 0
        for j in range(i, len(cand)):
            if 1 < gcd(a, cand[j]) < k:
                mask |= 1 << j
        masks.append(mask)
    return cand, tuple(masks)


def _prune(prefix: tuple[int, ...], cap: int) -> bool:
    """True if some sub-multiset containing the newest element is excluded.

    Tests the whole prefix itself, then every strict sub-multiset through
    size cap that contains the newest (largest) element.
    """
    if lemma_excluded(prefix):
        return True
    base, new = prefix[:-1], prefix[-1]
    for size in range(3, min(cap, len(prefix) - 1) + 1):
        for sub in set(combinations(base, size - 1)):
            if lemma_excluded(sub + (new,)):
                return True
    return False


def _run_branch(
    k: int, config: FilterConfig, cap: int, first: int
) -> tuple[list[tuple[int, ...]], int, int]:
    cand, masks = _tables(k)
    survivors: list[tuple[int, ...]] = []
    nodes = 1  # the single-element root of this branch
    leaves = 0
    prefix = [cand[first]]

    def extend(potmask: int) -> None:
        nonlocal nodes, leaves
        if len(prefix) == k:
            leaves += 1
            ms = tuple(prefix)
            if _leaf_passes(ms, k, config):
                survivors.append(ms)
            return
        m = potmask
        while m:
            low = m & -m
            m ^= low
            j = low.bit_length() - 1
            nodes += 1
            prefix.append(cand[j])
            if len(prefix) < 3 or not _prune(tuple(prefix), cap):
                extend(potmask & masks[j])
            prefix.pop()

    extend(masks[first])
    return survivors, nodes, leaves


def _run_branch_star(args: tuple) -> tuple[list[tuple[int, ...]], int, int]:
    return _run_branch(*args)


def grow(
    k: int,
    config: FilterConfig | None = None,
    jobs: int = 1,
    subset_prune_cap: int = 4,
) -> SearchReport:
    """Pruned depth-first enumeration of all surviving k-multisets.

    jobs > 1 fans the independent first-element branches out to worker
    processes; survivors and counters are merged order-independently, so
    the report does not depend on the worker count.
    """
    if not 3 <= k <= 31:
        raise RangeError(f"grow requires 3 <= k <= 31, got {k}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if subset_prune_cap < 3:
        raise ValueError(f"subset_prune_cap must be >= 3, got {subset_prune_cap}")
    config = config if config is not None else FilterConfig()

    start = time.perf_counter()
    cand, _ = _tables(k)
    tasks = [(k, config, subset_prune_cap, i) for i in range(len(cand))]
    if jobs == 1 or len(tasks) <= 1:
        parts = [_run_branch(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            parts = list(pool.map(_run_branch_star, tasks))

    survivors = sorted(s for part, _, _ in parts for s in part)
    return SearchReport(
        k=k,
        config=config,
        survivors=survivors,
        nodes_explored=sum(nodes for _, nodes, _ in parts),
        leaves_tested=sum(leaves for _, _, leaves in parts),
        elapsed=time.perf_counter() - start,
    )


def enumerate_naive(k: int, config: FilterConfig | None = None) -> SearchReport:
    """Oracle enumeration: every nondecreasing k-multiset of candidates,
    with the entire filter battery applied only at full size.

    Must produce exactly grow()'s survivor list; feasible only for small k.
    """
    if not 3 <= k <= 8:
        raise RangeError(f"enumerate_naive requires 3 <= k <= 8, got {k}")
    config = config if config is not None else FilterConfig()
    cand = candidate_moduli(k)
    total = comb(len(cand) + k - 1, k) if cand else 0
    if total > NAIVE_MULTISET_BOUND:
        raise RangeError(
            f"{total} multisets exceed the naive bound {NAIVE_MULTISET_BOUND}"
        )

    start = time.perf_counter()
    survivors = []
    count = 0
    for ms in combinations_with_replacement(cand, k):
        count += 1
        if gcd_bounds_ok(ms, k) and _leaf_passes(ms, k, config):
            survivors.append(ms)
    return SearchReport(
        k=k,
        config=config,
        survivors=survivors,
        nodes_explored=count,
        leaves_tested=count,
        elapsed=time.perf_counter() - start,
    )
