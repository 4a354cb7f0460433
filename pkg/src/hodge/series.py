"""Exact truncated power series of the form prod(1 - t^e) / prod(1 - t^a)."""

from typing import List, Optional, Sequence

from config.settings import Settings, load_settings
from errors import PreconditionError, ResourceBudgetExceeded


def series_coefficients(
    numerator: Sequence[int],
    denominator: Sequence[int],
    upto: int,
    settings: Optional[Settings] = None,
) -> List[int]:
    """Coefficients of t^0..t^upto in prod_e (1 - t^e) * prod_a (1 - t^a)^-1."""
    if any(a <= 0 for a in denominator):
        raise PreconditionError("denominator exponents must be positive")
    if any(e < 0 for e in numerator):
        raise PreconditionError("numerator exponents must be nonnegative")
    if upto < 0:
        return []
    settings = settings or load_settings()
    if upto + 1 > settings.memory_budget:
        raise ResourceBudgetExceeded(
            f"series truncated at degree {upto} exceeds the memory budget",
            {"upto": str(upto), "budget": settings.memory_budget},
        )

    coefficients = [0] * (upto + 1)
    coefficients[0] = 1
    for exponent in numerator:
        if exponent > upto:
            continue
        if exponent == 0:
            return [0] * (upto + 1)
        for degree in range(upto, exponent - 1, -1):
            coefficients[degree] -= coefficients[degree - exponent]
    for weight in denominator:
        for degree in range(weight, upto + 1):
            coefficients[degree] += coefficients[degree - weight]
    return coefficients


def count_monomials(
    weights: Sequence[int], m: int, settings: Optional[Settings] = None
) -> int:
    """Number of exponent vectors alpha >= 0 with sum(alpha * a) == m."""
    if any(a <= 0 for a in weights):
        raise PreconditionError("weights must be positive")
    if m < 0:
        return 0
    return series_coefficients((), weights, m, settings)[m]
