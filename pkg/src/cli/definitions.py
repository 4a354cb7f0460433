from dataclasses import dataclass
from typing import Any, Dict


@dataclass(frozen=True, slots=True)
class AcceptanceRow:
    id: int
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True, slots=True)
class AcceptanceScale:
    """Sizes for one reproduce run; `quick` shrinks every range."""

    scan_max_k: int
    scan_max_n: int
    scan_max_weight: int
    scan_max_degree_sum: int
    counterexample_dims: range
    point_family_sizes: range
    coin_limit: int
    interval_samples: int
    interval_upper: int
    rs_limit: int
    rs_dense_until: int
    delta_bound_sizes: range


FULL_SCALE = AcceptanceScale(
    scan_max_k=3,
    scan_max_n=6,
    scan_max_weight=20,
    scan_max_degree_sum=60,
    counterexample_dims=range(3, 13),
    point_family_sizes=range(1, 6),
    coin_limit=30,
    interval_samples=50,
    interval_upper=10**6,
    rs_limit=10**6,
    rs_dense_until=10**4,
    delta_bound_sizes=range(5, 13),
)

QUICK_SCALE = AcceptanceScale(
    scan_max_k=2,
    scan_max_n=4,
    scan_max_weight=10,
    scan_max_degree_sum=20,
    counterexample_dims=range(3, 7),
    point_family_sizes=range(1, 4),
    coin_limit=12,
    interval_samples=10,
    interval_upper=10**5,
    rs_limit=10**4,
    rs_dense_until=2000,
    delta_bound_sizes=range(5, 9),
)
