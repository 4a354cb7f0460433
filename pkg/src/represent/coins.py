"""Two-coin arithmetic: the Sylvester bound and explicit two-term representations."""

from math import gcd
from typing import Optional, Tuple

from errors import PreconditionError


def _require_coprime(a: int, b: int) -> None:
    if a <= 0 or b <= 0 or gcd(a, b) != 1:
        raise PreconditionError(
            f"coins must be coprime positive integers, got ({a}, {b})",
            {"a": str(a), "b": str(b)},
        )


def sylvester_frobenius(a: int, b: int) -> int:
    """Largest integer that is not a nonnegative combination of a and b."""
    _require_coprime(a, b)
    if a < 2 or b < 2:
        raise PreconditionError(
            "every integer >= 0 is representable when a coin equals 1",
            {"a": str(a), "b": str(b)},
        )
    return a * b - a - b


def two_coin_representation(m: int, a: int, b: int) -> Optional[Tuple[int, int]]:
    """(x, y) >= 0 with x*a + y*b == m and y minimal, or None."""
    _require_coprime(a, b)
    if m < 0:
        return None
    y = 0 if a == 1 else (m * pow(b, -1, a)) % a
    rest = m - y * b
    if rest < 0:
        return None
    return rest // a, y
