import logging
from bisect import bisect_left, bisect_right
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import List, Optional, Union

from config.settings import Settings, load_settings
from errors import PreconditionError, ResourceBudgetExceeded

logger = logging.getLogger(__name__)

Real = Union[int, Fraction]


def sieve(limit: int, settings: Optional[Settings] = None) -> List[int]:
    """Ascending primes <= limit (Eratosthenes over a bytearray)."""
    if limit < 2:
        raise PreconditionError(f"sieve limit must be at least 2, got {limit}")
    settings = settings or load_settings()
    if limit > settings.sieve_limit_budget:
        raise ResourceBudgetExceeded(
            f"sieve limit {limit} exceeds the budget",
            {"limit": str(limit), "budget": settings.sieve_limit_budget},
        )
    is_prime = bytearray(b"\x01") * (limit + 1)
    is_prime[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            start = p * p
            is_prime[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i in range(2, limit + 1) if is_prime[i]]


class PrimeTable:
    """Primes up to a fixed limit; read-only after construction."""

    def __init__(self, limit: int, settings: Optional[Settings] = None):
        self.limit = max(limit, 2)
        self.primes = sieve(self.limit, settings)

    def covers(self, x: int) -> bool:
        return x <= self.limit

    def pi(self, x: Real) -> int:
        """Number of primes <= x."""
        if x < 2:
            return 0
        top = floor(x)
        if top > self.limit:
            raise PreconditionError(
                f"{top} lies beyond the table limit {self.limit}", {"x": str(x)}
            )
        return bisect_right(self.primes, top)

    def count_open(self, lo: Real, hi: Real) -> int:
        """Number of primes p with lo < p < hi."""
        first = floor(lo) + 1
        last = ceil(hi) - 1
        if last < first:
            return 0
        if last > self.limit:
            raise PreconditionError(
                f"{last} lies beyond the table limit {self.limit}", {"hi": str(hi)}
            )
        return bisect_right(self.primes, last) - bisect_left(self.primes, first)


def prime_pi(x: Real, settings: Optional[Settings] = None) -> int:
    if x < 0:
        raise PreconditionError(f"prime_pi needs x >= 0, got {x}")
    if x < 2:
        return 0
    return PrimeTable(floor(x), settings).pi(x)


def primes_in_open_interval(
    lo: Real, hi: Real, settings: Optional[Settings] = None
) -> int:
    if not 0 < lo < hi:
        raise PreconditionError(
            "interval needs 0 < lo < hi", {"lo": str(lo), "hi": str(hi)}
        )
    last = ceil(hi) - 1
    if last < 2:
        return 0
    return PrimeTable(last, settings).count_open(lo, hi)
