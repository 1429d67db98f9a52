"""Congruence classes and exact disjointness tests.

A class (a mod m) is the arithmetic progression {a + t*m : t in Z}.  Two
classes are disjoint exactly when gcd(m1, m2) does not divide a1 - a2; a
family is called disjoint when its members are pairwise disjoint.  A dumb
full-residue scan is kept alongside as an independent oracle.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import RangeError

__all__ = [
    "ORACLE_LCM_BOUND",
    "CongruenceClass",
    "DcccCheck",
    "family_disjoint",
    "family_disjoint_bruteforce",
    "normalize",
    "pair_disjoint",
    "verify_dccc_instance",
]

# largest moduli lcm the brute-force scan will walk
ORACLE_LCM_BOUND = 10**7


@dataclass(frozen=True, order=True)
class CongruenceClass:
    """A residue class (residue mod modulus) with 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} not in [0, {self.modulus}); "
                "use normalize() for raw residues"
            )

    def __contains__(self, x: int) -> bool:
        return x % self.modulus == self.residue

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


ClassFamily = tuple[CongruenceClass, ...]


def normalize(residue: int, modulus: int) -> CongruenceClass:
    """Build the class for an arbitrary integer residue, reducing mod modulus."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return CongruenceClass(residue % modulus, modulus)


def pair_disjoint(c1: CongruenceClass, c2: CongruenceClass) -> bool:
    """True iff the two classes share no integer.

    Holds exactly when gcd(m1, m2) does not divide the residue difference;
    in particular classes with coprime moduli always intersect.
    """
    return (c1.residue - c2.residue) % gcd(c1.modulus, c2.modulus) != 0


def family_disjoint(family: Iterable[CongruenceClass]) -> bool:
    """True iff every pair of classes in the family is disjoint."""
    members = tuple(family)
    if not members:
        raise ValueError("family must contain at least one class")
    return all(pair_disjoint(a, b) for a, b in combinations(members, 2))


def family_disjoint_bruteforce(family: Iterable[CongruenceClass]) -> bool:
    """Oracle: scan every x in [0, lcm of moduli) for a doubly-covered point.

    Deliberately ignorant of the gcd criterion so it can certify it.
    """
    members = tuple(family)
    if not members:
        raise ValueError("family must contain at least one class")
    scan = lcm(*(c.modulus for c in members))
    if scan > ORACLE_LCM_BOUND:
        raise RangeError(
            f"moduli lcm {scan} exceeds the oracle bound {ORACLE_LCM_BOUND}"
        )
    for x in range(scan):
        if sum(1 for c in members if x in c) >= 2:
            return False
    return True


@dataclass(frozen=True)
class DcccCheck:
    """Outcome of checking one family against the conjecture.

    dccc_consistent is False only for an actual counterexample: a disjoint
    family all of whose pairwise moduli gcds stay below the family size.
    """

    disjoint: bool
    max_pairwise_gcd: int
    dccc_consistent: bool


def verify_dccc_instance(family: Sequence[CongruenceClass]) -> DcccCheck:
    """Check a family of k >= 2 classes against the conjecture.

    The conjecture asserts that k disjoint classes force some pairwise
    moduli gcd >= k, so a False dccc_consistent flag is the alarm.
    """
    members = tuple(family)
    k = len(members)
    if k < 2:
        raise ValueError(f"need at least 2 classes, got {k}")
    disjoint = family_disjoint(members)
    max_gcd = max(gcd(a.modulus, b.modulus) for a, b in combinations(members, 2))
    return DcccCheck(
        disjoint=disjoint,
        max_pairwise_gcd=max_gcd,
        dccc_consistent=(not disjoint) or max_gcd >= k,
    )
