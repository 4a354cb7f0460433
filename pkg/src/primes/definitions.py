from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple


def rational_to_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class PrimeChain:
    """p_0 < ... < p_{m+1} where 1/p_0 + ... + 1/p_m < 1 and adding 1/p_{m+1} passes 1."""

    primes: Tuple[int, ...]
    partial_sum: Fraction

    @property
    def m(self) -> int:
        return len(self.primes) - 2

    @property
    def below_one(self) -> Tuple[int, ...]:
        return self.primes[:-1]

    @property
    def closing_prime(self) -> int:
        return self.primes[-1]

    @property
    def gap(self) -> Fraction:
        return 1 - self.partial_sum

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "primes": [str(p) for p in self.primes],
            "partial_sum": rational_to_str(self.partial_sum),
            "gap": rational_to_str(self.gap),
        }


@dataclass(frozen=True, slots=True)
class DeltaResult:
    n: int
    value: Fraction
    witness: Tuple[int, ...]
    exact: bool
    nodes: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "value": rational_to_str(self.value),
            "witness": [str(p) for p in self.witness],
            "exact": self.exact,
            "nodes": self.nodes,
        }


@dataclass(frozen=True, slots=True)
class RSCheck:
    x: int
    pi: int
    lower: Tuple[str, str]
    upper: Tuple[str, str]
    holds: bool
    precision: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": str(self.x),
            "pi": str(self.pi),
            "lower_bound_interval": list(self.lower),
            "upper_bound_interval": list(self.upper),
            "holds": self.holds,
            "precision": self.precision,
        }


@dataclass(frozen=True, slots=True)
class IntervalLemmaCase:
    x: Fraction
    upper_count: Optional[int]
    lower_count: Optional[int]
    required: int

    @property
    def upper_holds(self) -> Optional[bool]:
        return None if self.upper_count is None else self.upper_count >= self.required

    @property
    def lower_holds(self) -> Optional[bool]:
        return None if self.lower_count is None else self.lower_count >= self.required

    @property
    def holds(self) -> bool:
        return self.upper_holds is not False and self.lower_holds is not False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": rational_to_str(self.x),
            "primes_in_x_2x": self.upper_count,
            "primes_in_2x3_x": self.lower_count,
            "required": self.required,
            "holds": self.holds,
        }


@dataclass(frozen=True, slots=True)
class IntervalLemmaReport:
    n: int
    cases: List[IntervalLemmaCase] = field(default_factory=list)

    @property
    def failures(self) -> List[IntervalLemmaCase]:
        return [case for case in self.cases if not case.holds]

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "checks_upper": self.n >= 5,
            "checks_lower": self.n >= 7,
            "holds": self.holds,
            "cases": [case.to_dict() for case in self.cases],
            "failures": [case.to_dict() for case in self.failures],
        }
