from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, Tuple

from errors import DegeneratePairError, PreconditionError


class PairKind(Enum):
    FANO = "Fano"
    CALABI_YAU = "CalabiYau"
    GENERAL_TYPE = "GeneralType"


def _positive_ints(values: Iterable[Any], name: str) -> Tuple[int, ...]:
    checked = []
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise PreconditionError(
                f"{name} must be integers, got {value!r}", {name: repr(value)}
            )
        if value <= 0:
            raise PreconditionError(
                f"{name} must be strictly positive, got {value}", {name: str(value)}
            )
        checked.append(value)
    return tuple(sorted(checked))


@dataclass(frozen=True, slots=True)
class Pair:
    """Multidegree (d_1..d_k) together with weights (a_0..a_N).

    Both lists are kept sorted ascending; every witness reported by the checks
    refers to this canonical order.
    """

    degrees: Tuple[int, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", _positive_ints(self.degrees, "degrees"))
        object.__setattr__(self, "weights", _positive_ints(self.weights, "weights"))

    @classmethod
    def of(cls, degrees: Iterable[int], weights: Iterable[int]) -> "Pair":
        return cls(tuple(degrees), tuple(weights))

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def N(self) -> int:
        return len(self.weights) - 1

    @property
    def dimension(self) -> int:
        return self.N - self.k

    @property
    def index(self) -> int:
        return sum(self.degrees) - sum(self.weights)

    @property
    def degenerate(self) -> bool:
        return not self.degrees or not self.weights

    def require_nondegenerate(self) -> "Pair":
        if self.degenerate:
            raise DegeneratePairError(
                "pair has an empty degree or weight list", self.to_dict()
            )
        return self

    def sort_key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        return (self.k, self.degrees, self.weights)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degrees": [str(d) for d in self.degrees],
            "weights": [str(a) for a in self.weights],
        }

    def __str__(self) -> str:
        degrees = ",".join(str(d) for d in self.degrees)
        weights = ",".join(str(a) for a in self.weights)
        return f"(({degrees}),({weights}))"


@dataclass(frozen=True, slots=True)
class PairClass:
    kind: PairKind
    index: int

    @classmethod
    def from_index(cls, index: int) -> "PairClass":
        if index < 0:
            return cls(PairKind.FANO, index)
        if index == 0:
            return cls(PairKind.CALABI_YAU, index)
        return cls(PairKind.GENERAL_TYPE, index)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "index": str(self.index)}


@dataclass(frozen=True, slots=True)
class Representation:
    """Certificate sum(coefficients[l] * weights[l]) == target."""

    coefficients: Tuple[int, ...]
    target: int
    weights: Tuple[int, ...]
    positive: bool = False
    method: str = field(default="oracle", compare=False)

    def is_valid(self) -> bool:
        if len(self.coefficients) != len(self.weights):
            return False
        floor = 1 if self.positive else 0
        if any(c < floor for c in self.coefficients):
            return False
        total = sum(c * a for c, a in zip(self.coefficients, self.weights))
        return total == self.target

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "target": str(self.target),
            "weights": [str(a) for a in self.weights],
            "positive": self.positive,
            "method": self.method,
        }
