from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from models import Pair
from primes.definitions import PrimeChain, rational_to_str


@dataclass(frozen=True, slots=True)
class NamedCheck:
    name: str
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "witness": self.witness}


def _checks_to_dict(checks: List[NamedCheck]) -> Dict[str, Any]:
    return {check.name: check.to_dict() for check in checks}


@dataclass(frozen=True, slots=True)
class CounterexampleReport:
    n: int
    m: int
    chain: PrimeChain
    pair: Pair
    index: int
    index_from_identity: Fraction
    checks: List[NamedCheck]
    notes: Dict[str, str]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> NamedCheck:
        return next(check for check in self.checks if check.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "chain": self.chain.to_dict(),
            "pair": self.pair.to_dict(),
            "i_X": str(self.index),
            "i_X_from_identity": rational_to_str(self.index_from_identity),
            "checks": _checks_to_dict(self.checks),
            "all_passed": self.all_passed,
            "notes": self.notes,
        }


@dataclass(frozen=True, slots=True)
class PointFamilyReport:
    N: int
    primes: Tuple[int, ...]
    pair: Pair
    checks: List[NamedCheck]
    forced_cost: int
    target: int
    notes: Dict[str, str]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "primes": [str(p) for p in self.primes],
            "pair": self.pair.to_dict(),
            "checks": _checks_to_dict(self.checks),
            "all_passed": self.all_passed,
            "forced_cost": str(self.forced_cost),
            "target": str(self.target),
            "notes": self.notes,
        }


@dataclass(frozen=True, slots=True)
class ScanBounds:
    max_k: int
    max_n: int
    max_degree_sum: int
    max_weight: int
    include_linear_cones: bool = False
    max_pairs: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_k": self.max_k,
            "max_n": self.max_n,
            "max_degree_sum": self.max_degree_sum,
            "max_weight": self.max_weight,
            "include_linear_cones": self.include_linear_cones,
            "max_pairs": self.max_pairs,
        }


@dataclass(frozen=True, slots=True)
class ScanRecord:
    pair: Pair
    kind: str
    index: int
    regular: bool
    cartier: bool
    h0n: int
    oracle: Optional[Tuple[int, ...]]
    cartier_construction: Optional[Tuple[int, ...]] = None
    codim2_construction: Optional[Tuple[int, ...]] = None
    violations: Tuple[str, ...] = ()
    flags: Tuple[str, ...] = ()
    error: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        def encode(beta: Optional[Tuple[int, ...]]) -> Optional[List[str]]:
            return None if beta is None else [str(b) for b in beta]

        return {
            "pair": self.pair.to_dict(),
            "kind": self.kind,
            "index": str(self.index),
            "regular": self.regular,
            "cartier": self.cartier,
            "h0n": str(self.h0n),
            "oracle": encode(self.oracle),
            "cartier_construction": encode(self.cartier_construction),
            "codim2_construction": encode(self.codim2_construction),
            "violations": list(self.violations),
            "flags": list(self.flags),
            "error": self.error,
        }

    def to_row(self) -> Dict[str, Any]:
        """Flat view for tabular output."""
        return {
            "degrees": " ".join(str(d) for d in self.pair.degrees),
            "weights": " ".join(str(a) for a in self.pair.weights),
            "k": self.pair.k,
            "N": self.pair.N,
            "kind": self.kind,
            "index": str(self.index),
            "cartier": self.cartier,
            "h0n": str(self.h0n),
            "oracle": "" if self.oracle is None else " ".join(map(str, self.oracle)),
            "violations": " ".join(self.violations),
            "flags": " ".join(self.flags),
        }


@dataclass(slots=True)
class ScanSummary:
    bounds: ScanBounds
    total_pairs: int = 0
    by_kind: Dict[str, int] = field(default_factory=dict)
    cartier_pairs: int = 0
    cartier_theorem_checked: int = 0
    codim2_checked: int = 0
    violations: Dict[str, int] = field(default_factory=dict)
    flags: Dict[str, int] = field(default_factory=dict)
    errors: int = 0
    truncated: bool = False

    @property
    def violation_count(self) -> int:
        return sum(self.violations.values())

    def add(self, record: ScanRecord) -> None:
        self.total_pairs += 1
        self.by_kind[record.kind] = self.by_kind.get(record.kind, 0) + 1
        if record.cartier:
            self.cartier_pairs += 1
        if record.cartier_construction is not None:
            self.cartier_theorem_checked += 1
        if record.codim2_construction is not None:
            self.codim2_checked += 1
        for name in record.violations:
            self.violations[name] = self.violations.get(name, 0) + 1
        for name in record.flags:
            self.flags[name] = self.flags.get(name, 0) + 1
        if record.error is not None:
            self.errors += 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bounds": self.bounds.to_dict(),
            "total_pairs": self.total_pairs,
            "by_kind": dict(sorted(self.by_kind.items())),
            "cartier_pairs": self.cartier_pairs,
            "cartier_theorem_checked": self.cartier_theorem_checked,
            "codim2_checked": self.codim2_checked,
            "violations": dict(sorted(self.violations.items())),
            "violation_count": self.violation_count,
            "flags": dict(sorted(self.flags.items())),
            "errors": self.errors,
            "truncated": self.truncated,
        }
