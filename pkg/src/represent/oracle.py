"""Nonnegative representations of a target by a set of weights.

Representability is decided through the Apery set of the weights with respect
to their smallest member: for every residue r modulo the smallest weight w we
keep the least representable value congruent to r. A value m is representable
iff m >= apery[m mod w]. The table has w cells no matter how large the target
is, which keeps products-of-primes targets tractable.
"""

import heapq
import logging
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence

from config.settings import Settings, load_settings
from errors import ContractViolation, PreconditionError, ResourceBudgetExceeded
from models import Pair, Representation

logger = logging.getLogger(__name__)

UNREACHABLE = -1


class Semigroup:
    """Membership oracle for the additive monoid generated by `weights`."""

    def __init__(self, weights: Sequence[int], settings: Optional[Settings] = None):
        settings = settings or load_settings()
        self.weights = tuple(sorted(weights))
        self.divisor = reduce(gcd, self.weights, 0)
        if not self.weights:
            self.modulus = 0
            self.apery: List[int] = []
            return

        reduced = sorted({a // self.divisor for a in self.weights})
        self.modulus = reduced[0]
        if self.modulus > settings.memory_budget:
            raise ResourceBudgetExceeded(
                f"residue table of size {self.modulus} exceeds the memory budget",
                {"modulus": str(self.modulus), "budget": settings.memory_budget},
            )
        self.apery = self._shortest_residues(reduced)

    def _shortest_residues(self, reduced: List[int]) -> List[int]:
        modulus = self.modulus
        best = [UNREACHABLE] * modulus
        best[0] = 0
        heap = [(0, 0)]
        while heap:
            value, residue = heapq.heappop(heap)
            if value != best[residue]:
                continue
            for step in reduced[1:]:
                candidate = value + step
                target = candidate % modulus
                if best[target] == UNREACHABLE or candidate < best[target]:
                    best[target] = candidate
                    heapq.heappush(heap, (candidate, target))
        return best

    def contains(self, value: int) -> bool:
        if value < 0:
            return False
        if value == 0:
            return True
        if not self.weights or value % self.divisor:
            return False
        reduced = value // self.divisor
        floor = self.apery[reduced % self.modulus]
        return floor != UNREACHABLE and reduced >= floor

    @property
    def smallest(self) -> int:
        return self.weights[0] if self.weights else 0


def find_nonneg_representation(
    target: int,
    weights: Sequence[int],
    settings: Optional[Settings] = None,
) -> Optional[Representation]:
    """alpha >= 0 with sum(alpha * a) == target, loading the smallest weights.

    The coefficients refer to the weights sorted ascending. Read from the
    largest weight down, the vector is lexicographically smallest, so the slack
    ends up on the smallest weights.
    """
    if not weights or any(a <= 0 for a in weights):
        raise PreconditionError(
            "weights must be a nonempty list of positive integers",
            {"weights": [str(a) for a in weights]},
        )
    ordered = tuple(sorted(weights))
    if target < 0:
        return None
    if target == 0:
        return Representation((0,) * len(ordered), 0, ordered)

    settings = settings or load_settings()
    # weights above the target always get coefficient zero
    usable = [a for a in ordered if a <= target]
    prefixes = [Semigroup(usable[:end], settings) for end in range(len(usable) + 1)]
    if not prefixes[-1].contains(target):
        return None

    coefficients = [0] * len(ordered)
    remaining = target
    for position in range(len(usable) - 1, -1, -1):
        weight = usable[position]
        rest = prefixes[position]
        chosen = None
        if not rest.weights:
            # the smallest weight has to absorb whatever is left
            if remaining % weight == 0:
                chosen = remaining // weight
        else:
            # `remaining - alpha*weight` repeats its residue modulo the smallest
            # weight with this period, and representability is upward closed
            # inside a residue class
            period = rest.smallest // gcd(rest.smallest, weight)
            for alpha in range(min(remaining // weight, period) + 1):
                if rest.contains(remaining - alpha * weight):
                    chosen = alpha
                    break
        if chosen is None:
            raise ContractViolation(
                "greedy descent lost feasibility",
                {"target": str(target), "weights": [str(a) for a in ordered]},
            )
        coefficients[position] = chosen
        remaining -= chosen * weight

    return certify(Representation(tuple(coefficients), target, ordered))


def find_positive_representation(
    pair: Pair, settings: Optional[Settings] = None
) -> Optional[Representation]:
    """Positive beta with sum(d) == sum(beta * a), via alpha = beta - 1 for i_X."""
    pair.require_nondegenerate()
    index = pair.index
    if index < 0:
        return None
    shifted = find_nonneg_representation(index, pair.weights, settings)
    if shifted is None:
        return None
    beta = tuple(alpha + 1 for alpha in shifted.coefficients)
    return certify(
        Representation(beta, sum(pair.degrees), pair.weights, positive=True)
    )


def verify_representation(rep: Representation) -> bool:
    return rep.is_valid()


def certify(rep: Representation) -> Representation:
    """Re-substitute a certificate before it leaves the package."""
    if not rep.is_valid():
        raise ContractViolation(
            "representation failed re-substitution", {"representation": rep.to_dict()}
        )
    return rep
