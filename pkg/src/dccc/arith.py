"""Exact integer arithmetic: factorization, divisors, prime powers, lcm ranges.

Everything here is plain trial-division number theory.  Inputs are tiny by
design (nothing past lcm(1..30) ~ 2.3e12 ever shows up), so no sieve or
probabilistic primality machinery is warranted.
"""

from functools import reduce
from math import gcd, lcm

from .errors import RangeError

__all__ = [
    "INT64_MAX",
    "MAX_LCM_K",
    "divisors",
    "factorize",
    "gcd",
    "is_prime_power",
    "lcm",
    "lcm_range",
]

INT64_MAX = 2**63 - 1

# lcm(1..k-1) for k <= 31 stays well inside 64 bits, as do the k * L_k
# sums formed downstream; larger k is out of scope.
MAX_LCM_K = 31


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n as an ordered {prime: exponent} map.

    factorize(1) is the empty map (empty product).
    """
    if not 1 <= n <= INT64_MAX:
        raise RangeError(f"factorize requires 1 <= n <= {INT64_MAX}, got {n}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):  # 6k +/- 1 wheel
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        powers = [p**i for i in range(1, e + 1)]
        divs += [d * q for d in divs for q in powers]
    return sorted(divs)


def is_prime_power(n: int) -> bool:
    """True iff n = p^r for a prime p and r >= 1.  1 is not a prime power."""
    return len(factorize(n)) == 1


def lcm_range(k: int) -> int:
    """lcm(1, 2, ..., k-1); an upper modulus bound for k disjoint classes."""
    if not 2 <= k <= MAX_LCM_K:
        raise RangeError(f"lcm_range requires 2 <= k <= {MAX_LCM_K}, got {k}")
    return reduce(lcm, range(1, k), 1)
