from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple


class TheoremBranch(Enum):
    FANO = "Fano"
    CALABI_YAU = "CalabiYau"
    CARTIER_GENERAL_TYPE = "CartierGeneralType"
    CODIM2_GENERAL_TYPE = "Codim2GeneralType"
    UNCLASSIFIED = "Unclassified"

    @property
    def predicts_maximal(self) -> Optional[bool]:
        if self is TheoremBranch.FANO:
            return False
        if self is TheoremBranch.UNCLASSIFIED:
            return None
        return True


@dataclass(frozen=True, slots=True)
class HodgeVerdict:
    dimension: int
    index: int
    h0n: int
    hodge_level_max: bool
    theorem_branch: TheoremBranch

    @property
    def prediction_holds(self) -> Optional[bool]:
        predicted = self.theorem_branch.predicts_maximal
        if predicted is None:
            return None
        return predicted == self.hodge_level_max

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "index": str(self.index),
            "h0n": str(self.h0n),
            "hodge_level_max": self.hodge_level_max,
            "theorem_branch": self.theorem_branch.value,
            "predicted_max": self.theorem_branch.predicts_maximal,
            "prediction_holds": self.prediction_holds,
        }


@dataclass(frozen=True, slots=True)
class HodgeVector:
    """Primitive middle Hodge numbers; entries[q] is h_pr^{q, n-q}."""

    dimension: int
    entries: Tuple[int, ...]

    def is_symmetric(self) -> bool:
        return self.entries == tuple(reversed(self.entries))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "h_pr": [str(h) for h in self.entries],
            "symmetric": self.is_symmetric(),
        }


@dataclass(frozen=True, slots=True)
class HodgeLevel:
    """Hodge level value, or only the maximal / not maximal dichotomy when `exact` is False."""

    dimension: int
    maximal: bool
    exact: bool
    value: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "maximal": self.maximal,
            "exact": self.exact,
            "value": self.value,
        }
