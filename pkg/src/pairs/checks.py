"""Divisibility checks and classification for degree/weight pairs."""

from collections import Counter
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from errors import PreconditionError
from models import Pair, PairClass, PairKind
from pairs.definitions import (
    CartierWitness,
    CheckReport,
    LinearConeMatch,
    RegularityWitness,
)


def classify(pair: Pair) -> PairClass:
    return PairClass.from_index(pair.index)


def gcd_closure(values: Iterable[int]) -> Set[int]:
    """All gcds > 1 of nonempty sub-multisets of `values`."""
    closure: Set[int] = set()
    for value in values:
        if value <= 1:
            continue
        closure |= {gcd(value, c) for c in closure} | {value}
        closure.discard(1)
    return closure


def _witness_for(pair: Pair, delta: int) -> RegularityWitness:
    return RegularityWitness(
        delta=delta,
        weight_indices=tuple(l for l, a in enumerate(pair.weights) if a % delta == 0),
        degree_indices=tuple(u for u, d in enumerate(pair.degrees) if d % delta == 0),
    )


def regularity_violations(pair: Pair) -> List[RegularityWitness]:
    """Every subset-gcd delta dividing more weights than degrees, ascending.

    A violating divisor delta is always accompanied by the violating divisor
    gcd{a_l : delta | a_l}, so scanning the gcd closure of the weights finds a
    violation whenever one exists among all divisors.
    """
    violations = []
    for delta in sorted(gcd_closure(pair.weights)):
        witness = _witness_for(pair, delta)
        if witness.weight_count > witness.degree_count:
            violations.append(witness)
    return violations


def is_regular(pair: Pair) -> Tuple[bool, Optional[RegularityWitness]]:
    for delta in sorted(gcd_closure(pair.weights)):
        weights_hit = sum(1 for a in pair.weights if a % delta == 0)
        degrees_hit = sum(1 for d in pair.degrees if d % delta == 0)
        if weights_hit > degrees_hit:
            return False, _witness_for(pair, delta)
    return True, None


def is_regular_by_subsets(pair: Pair) -> bool:
    """Reference check quantifying over weight subsets directly (exponential)."""
    for size in range(1, len(pair.weights) + 1):
        for subset in combinations(pair.weights, size):
            delta = reduce(gcd, subset)
            if delta <= 1:
                continue
            if sum(1 for d in pair.degrees if d % delta == 0) < size:
                return False
    return True


def is_space_well_formed(weights: Sequence[int]) -> bool:
    weights = list(weights)
    if len(weights) < 2:
        raise PreconditionError(
            "well-formedness needs at least two weights",
            {"weights": [str(a) for a in weights]},
        )
    size = len(weights)
    prefix = [0] * (size + 1)
    suffix = [0] * (size + 1)
    for l in range(size):
        prefix[l + 1] = gcd(prefix[l], weights[l])
        suffix[size - l - 1] = gcd(suffix[size - l], weights[size - l - 1])
    return all(gcd(prefix[l], suffix[l + 1]) == 1 for l in range(size))


def is_cartier(pair: Pair) -> Tuple[bool, Optional[CartierWitness]]:
    for l, a in enumerate(pair.weights):
        for u, d in enumerate(pair.degrees):
            if d % a:
                return False, CartierWitness(l, u, a, d)
    return True, None


def picard_generator(weights: Sequence[int]) -> int:
    if not is_space_well_formed(weights):
        raise PreconditionError(
            "Picard generator is defined for well formed weights only",
            {"weights": [str(a) for a in weights]},
        )
    return lcm(*weights)


def is_linear_cone(pair: Pair) -> Tuple[bool, Optional[LinearConeMatch]]:
    positions = {}
    for l, a in enumerate(pair.weights):
        positions.setdefault(a, l)
    for u, d in enumerate(pair.degrees):
        if d in positions:
            return True, LinearConeMatch(u, positions[d], d)
    return False, None


def normalize(pair: Pair) -> Pair:
    """Strip degree/weight pairs with d_u == a_l until none remain.

    The result may have no degrees left (a pure linear cone); callers that need
    k >= 1 reject it through `Pair.require_nondegenerate`.
    """
    common = Counter(pair.degrees) & Counter(pair.weights)
    if not common:
        return pair
    degrees = Counter(pair.degrees) - common
    weights = Counter(pair.weights) - common
    return Pair(tuple(degrees.elements()), tuple(weights.elements()))


def _is_exceptional_pst_shape(pair: Pair) -> bool:
    k = pair.k
    if pair.degrees != (6,) * k:
        return False
    counts = Counter(pair.weights)
    return (
        counts[2] == k
        and counts[3] == k
        and sum(counts.values()) == counts[1] + 2 * k
    )


def check_pst_bound(pair: Pair) -> bool:
    """Minimal-weight bound for Fano and Calabi-Yau regular pairs.

    With weights ascending and i the index, a_{k-i-1} = 1, and also
    a_{k-i} = 1 unless the pair is ((6^k), (1^s, 2^k, 3^k)).
    """
    pair.require_nondegenerate()
    regular, witness = is_regular(pair)
    if not regular:
        raise PreconditionError(
            "bound applies to regular pairs only",
            {"pair": pair.to_dict(), "witness": witness.to_dict()},
        )
    if pair.index > 0:
        raise PreconditionError(
            "bound applies to Fano and Calabi-Yau pairs only",
            {"pair": pair.to_dict(), "index": str(pair.index)},
        )
    cone, match = is_linear_cone(pair)
    if cone:
        raise PreconditionError(
            "bound assumes no degree equals a weight",
            {"pair": pair.to_dict(), "match": match.to_dict()},
        )

    first = pair.k - pair.index - 1
    second = first + 1
    weights = pair.weights
    if first > pair.N or weights[first] != 1:
        return False
    if second > pair.N or weights[second] == 1:
        return True
    return _is_exceptional_pst_shape(pair)


def check_report(pair: Pair) -> CheckReport:
    regular, regular_witness = is_regular(pair)
    cartier, cartier_witness = is_cartier(pair)
    cone, match = is_linear_cone(pair)
    well_formed = len(pair.weights) >= 2 and is_space_well_formed(pair.weights)
    return CheckReport(
        regular=regular,
        regular_witness=regular_witness,
        regular_violations=tuple(regularity_violations(pair)),
        space_well_formed=well_formed,
        cartier=cartier,
        cartier_witness=cartier_witness,
        linear_cone=cone,
        linear_cone_match=match,
    )


def remaining_weights_after_cone(pair: Pair) -> Optional[Tuple[int, ...]]:
    """Weights left once the full degree multiset is removed from the weights.

    None when the weight multiset does not contain every degree.
    """
    weights = Counter(pair.weights)
    degrees = Counter(pair.degrees)
    if degrees - weights:
        return None
    return tuple(sorted((weights - degrees).elements()))


def is_general_type(pair: Pair) -> bool:
    return classify(pair).kind is PairKind.GENERAL_TYPE
