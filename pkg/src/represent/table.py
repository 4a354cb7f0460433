"""Value-indexed dynamic program over 0..target.

Slower and bounded by the target rather than the smallest weight; kept as an
independent reference for the residue oracle.
"""

from typing import List, Optional, Sequence

from config.settings import Settings, load_settings
from errors import PreconditionError, ResourceBudgetExceeded
from models import Representation
from represent.oracle import certify


def _check(target: int, weights: Sequence[int], settings: Settings) -> None:
    if not weights or any(a <= 0 for a in weights):
        raise PreconditionError("weights must be positive integers")
    if target + 1 > settings.memory_budget:
        raise ResourceBudgetExceeded(
            f"value table for target {target} exceeds the memory budget",
            {"target": str(target), "budget": settings.memory_budget},
        )


def count_representations_table(
    target: int, weights: Sequence[int], settings: Optional[Settings] = None
) -> int:
    """Number of alpha >= 0 (one coefficient per listed weight) summing to target."""
    if target < 0:
        return 0
    settings = settings or load_settings()
    _check(target, weights, settings)
    ways = [0] * (target + 1)
    ways[0] = 1
    for weight in weights:
        for value in range(weight, target + 1):
            ways[value] += ways[value - weight]
    return ways[target]


def find_nonneg_representation_table(
    target: int, weights: Sequence[int], settings: Optional[Settings] = None
) -> Optional[Representation]:
    """Same vector as the residue oracle, found with prefix reachability tables."""
    ordered = tuple(sorted(weights))
    settings = settings or load_settings()
    _check(max(target, 0), ordered, settings)
    if target < 0:
        return None

    # reachable[l][v]: v is a combination of ordered[:l]
    reachable: List[List[bool]] = [[False] * (target + 1) for _ in range(len(ordered) + 1)]
    reachable[0][0] = True
    for position, weight in enumerate(ordered):
        row, below = reachable[position + 1], reachable[position]
        for value in range(target + 1):
            row[value] = below[value] or (value >= weight and row[value - weight])
    if not reachable[len(ordered)][target]:
        return None

    coefficients = [0] * len(ordered)
    remaining = target
    for position in range(len(ordered) - 1, -1, -1):
        weight = ordered[position]
        alpha = 0
        while not reachable[position][remaining - alpha * weight]:
            alpha += 1
        coefficients[position] = alpha
        remaining -= alpha * weight
    return certify(
        Representation(tuple(coefficients), target, ordered, method="table")
    )
