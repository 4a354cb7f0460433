from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True, slots=True)
class RegularityWitness:
    """A divisor shared by more weights than degrees."""

    delta: int
    weight_indices: Tuple[int, ...]
    degree_indices: Tuple[int, ...]

    @property
    def weight_count(self) -> int:
        return len(self.weight_indices)

    @property
    def degree_count(self) -> int:
        return len(self.degree_indices)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta": str(self.delta),
            "weight_indices": list(self.weight_indices),
            "degree_indices": list(self.degree_indices),
            "weight_count": self.weight_count,
            "degree_count": self.degree_count,
        }


@dataclass(frozen=True, slots=True)
class CartierWitness:
    weight_index: int
    degree_index: int
    weight: int
    degree: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight_index": self.weight_index,
            "degree_index": self.degree_index,
            "weight": str(self.weight),
            "degree": str(self.degree),
        }


@dataclass(frozen=True, slots=True)
class LinearConeMatch:
    degree_index: int
    weight_index: int
    value: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree_index": self.degree_index,
            "weight_index": self.weight_index,
            "value": str(self.value),
        }


@dataclass(frozen=True, slots=True)
class CheckReport:
    regular: bool
    regular_witness: Optional[RegularityWitness]
    regular_violations: Tuple[RegularityWitness, ...]
    space_well_formed: bool
    cartier: bool
    cartier_witness: Optional[CartierWitness]
    linear_cone: bool
    linear_cone_match: Optional[LinearConeMatch]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "regular": self.regular,
            "regular_witness": (
                self.regular_witness.to_dict() if self.regular_witness else None
            ),
            "regular_violations": [w.to_dict() for w in self.regular_violations],
            "space_well_formed": self.space_well_formed,
            "cartier": self.cartier,
            "cartier_witness": (
                self.cartier_witness.to_dict() if self.cartier_witness else None
            ),
            "linear_cone": self.linear_cone,
            "linear_cone_match": (
                self.linear_cone_match.to_dict() if self.linear_cone_match else None
            ),
        }
