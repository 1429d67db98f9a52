"""Decide whether residues exist making classes with given moduli disjoint.

The exclusion test never references residues, so it can only rule moduli
out.  This module answers the exact question by backtracking: assign each
class a residue so that gcd(m_i, m_j) never divides a_i - a_j.

Two symmetry reductions keep the space small without losing completeness:

* only a_i mod g_i matters, where g_i = lcm{gcd(m_i, m_j) : j != i}
  (every constraint on a_i lives modulo a divisor of g_i), so each
  residue ranges over [0, g_i) instead of [0, m_i);
* disjointness is translation invariant, so the first residue is pinned
  to 0.

If any assignment works, translating it to a_1 = 0 and reducing each
coordinate mod g_i yields one inside the reduced box, so exhausting the
box proves UNSAT.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd, lcm, prod
from typing import Iterable

from .errors import RangeError

__all__ = [
    "SPACE_BOUND",
    "AssignmentResult",
    "Status",
    "constraint_moduli",
    "find_disjoint_residues",
]

# product of reduced residue ranges beyond which the search refuses to start
SPACE_BOUND = 10**9


class Status(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass(frozen=True)
class AssignmentResult:
    """Outcome of the residue search over the reduced space.

    witness (present iff SAT) pairs index-by-index with the sorted input
    moduli and is the lexicographically least solution with witness[0] = 0.
    search_moduli holds the reduced ranges g_i.  nodes_explored counts
    attempted (position, value) assignments.
    """

    status: Status
    witness: tuple[int, ...] | None
    nodes_explored: int
    search_moduli: tuple[int, ...]


def _sorted_moduli(moduli: Iterable[int]) -> tuple[int, ...]:
    ms = tuple(sorted(moduli))
    if len(ms) < 2:
        raise ValueError("need at least 2 moduli")
    if any(m < 2 for m in ms):
        raise ValueError(f"moduli must all be >= 2, got {ms}")
    return ms


def constraint_moduli(moduli: Iterable[int]) -> list[int]:
    """Reduced residue range g_i = lcm over j != i of gcd(m_i, m_j).

    Each g_i divides m_i, being an lcm of divisors of m_i.
    """
    ms = _sorted_moduli(moduli)
    k = len(ms)
    return [
        lcm(*(gcd(ms[i], ms[j]) for j in range(k) if j != i)) for i in range(k)
    ]


def find_disjoint_residues(moduli: Iterable[int]) -> AssignmentResult:
    """Search the reduced residue box for a pairwise-disjoint assignment.

    Plain depth-first backtracking in position order with ascending values
    and the first residue pinned to 0; each candidate value is checked
    against all previously placed residues.  Deterministic: the witness,
    when one exists, is reproducible across runs and platforms.
    """
    ms = _sorted_moduli(moduli)
    k = len(ms)
    ranges = constraint_moduli(ms)
    space = prod(ranges)
    if space > SPACE_BOUND:
        raise RangeError(
            f"reduced search space {space} exceeds the bound {SPACE_BOUND}"
        )

    pair_g = [[gcd(ms[i], ms[j]) for j in range(k)] for i in range(k)]
    assigned = [0] * k
    nodes = 0

    def place(i: int) -> bool:
        nonlocal nodes
        if i == k:
            return True
        row = pair_g[i]
        for value in range(ranges[i]) if i else (0,):  # pin first residue
            nodes += 1
            if all((value - assigned[j]) % row[j] for j in range(i)):
                assigned[i] = value
                if place(i + 1):
                    return True
        return False

    if place(0):
        return AssignmentResult(Status.SAT, tuple(assigned), nodes, tuple(ranges))
    return AssignmentResult(Status.UNSAT, None, nodes, tuple(ranges))
