"""Exhaustive conformance scan over bounded regular pairs.

Pairs are enumerated degree tuple by degree tuple. Each tuple is an
independent unit of work, so tuples are batched and handed to a process
pool; batches come back in submission order and records inside a batch are
sorted by canonical key, which keeps the output order independent of
scheduling.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from config.settings import Settings, load_settings
from construct.definitions import ScanBounds, ScanRecord, ScanSummary
from errors import (
    ContractViolation,
    HodgeLevelsError,
    PreconditionError,
    ProofPathExhausted,
)
from hodge.numbers import bridge_applies, h0n
from models import Pair, PairKind
from pairs.checks import (
    check_pst_bound,
    classify,
    is_cartier,
    is_linear_cone,
    is_regular,
    remaining_weights_after_cone,
)
from pairs.serialization import canonical_key
from represent.cartier import constructive_representation_cartier, prime_divisors
from represent.codim2 import representation_codim_le2
from represent.oracle import find_nonneg_representation, find_positive_representation

logger = logging.getLogger(__name__)

BATCH_SIZE = 32


def _validate(bounds: ScanBounds) -> None:
    for name in ("max_k", "max_n", "max_degree_sum", "max_weight"):
        if getattr(bounds, name) < 1:
            raise PreconditionError(f"scan bound {name} must be positive", bounds.to_dict())
    if bounds.max_pairs is not None and bounds.max_pairs < 1:
        raise PreconditionError("max_pairs must be positive when given", bounds.to_dict())


def degree_tuples(bounds: ScanBounds) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing degree tuples, ordered by length and then lexicographically."""

    def extend(prefix: Tuple[int, ...], size: int, budget: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == size:
            yield prefix
            return
        low = prefix[-1] if prefix else 1
        slots = size - len(prefix)
        for value in range(low, budget // slots + 1):
            yield from extend(prefix + (value,), size, budget - value)

    for k in range(1, bounds.max_k + 1):
        yield from extend((), k, bounds.max_degree_sum)


def _nonunit_weights(
    degrees: Tuple[int, ...], bounds: ScanBounds
) -> Iterator[Tuple[int, ...]]:
    """Multisets of weights > 1 dividing some degree, pruned prime by prime.

    A prime may divide at most as many weights as degrees.
    """
    candidates = sorted(
        {
            a
            for d in degrees
            for a in range(2, min(d, bounds.max_weight) + 1)
            if d % a == 0 and (bounds.include_linear_cones or a not in degrees)
        }
    )
    capacity: Dict[int, int] = {}
    for a in candidates:
        for q in prime_divisors(a):
            capacity[q] = sum(1 for d in degrees if d % q == 0)
    limit = bounds.max_n + 1

    def extend(start: int, chosen: List[int], used: Dict[int, int]) -> Iterator[Tuple[int, ...]]:
        yield tuple(chosen)
        if len(chosen) == limit:
            return
        for position in range(start, len(candidates)):
            a = candidates[position]
            primes = prime_divisors(a)
            if any(used.get(q, 0) >= capacity[q] for q in primes):
                continue
            for q in primes:
                used[q] = used.get(q, 0) + 1
            chosen.append(a)
            yield from extend(position, chosen, used)
            chosen.pop()
            for q in primes:
                used[q] -= 1

    yield from extend(0, [], {})


def pairs_for_degrees(degrees: Tuple[int, ...], bounds: ScanBounds) -> List[Pair]:
    k = len(degrees)
    units_allowed = bounds.include_linear_cones or 1 not in degrees
    found = []
    for nonunit in _nonunit_weights(degrees, bounds):
        max_units = bounds.max_n + 1 - len(nonunit) if units_allowed else 0
        for units in range(0, max_units + 1):
            size = units + len(nonunit)
            if not k + 1 <= size <= bounds.max_n + 1:
                continue
            pair = Pair(degrees, (1,) * units + nonunit)
            if is_regular(pair)[0]:
                found.append(pair)
    found.sort(key=canonical_key)
    return found


def enumerate_pairs(bounds: ScanBounds) -> Iterator[Pair]:
    _validate(bounds)
    for degrees in degree_tuples(bounds):
        yield from pairs_for_degrees(degrees, bounds)


def _constructed(build: Callable[[], object]) -> Tuple[Optional[Tuple[int, ...]], Optional[str]]:
    try:
        rep = build()
    except (ProofPathExhausted, ContractViolation) as exc:
        logger.error(f"Constructor failed: {exc.message}")
        return None, exc.message
    return rep.coefficients, None


def evaluate_pair(pair: Pair, settings: Optional[Settings] = None) -> ScanRecord:
    """Compute every verdict for one regular pair and compare it with the theorems."""
    settings = settings or load_settings()
    kind = classify(pair).kind
    regular, _ = is_regular(pair)
    cartier, _ = is_cartier(pair)
    violations: List[str] = []
    flags: List[str] = []
    record = dict(
        pair=pair, kind=kind.value, index=pair.index, regular=regular, cartier=cartier
    )

    try:
        sections = h0n(pair, settings)
        oracle = find_positive_representation(pair, settings)
    except HodgeLevelsError as exc:
        return ScanRecord(**record, h0n=0, oracle=None, error=exc.to_dict())

    if (sections > 0) != (oracle is not None):
        if bridge_applies(pair, settings):
            violations.append("h0n_representation_mismatch")
        else:
            flags.append("h0n_representation_outside_bridge")
    if kind is PairKind.FANO and sections != 0:
        violations.append("fano_h0n_nonzero")
    if kind is PairKind.CALABI_YAU and sections != 1:
        violations.append("calabi_yau_h0n_not_one")

    general = kind is PairKind.GENERAL_TYPE
    above = pair.N > pair.k
    cartier_beta = codim2_beta = None
    if regular and cartier and general and above:
        if oracle is None:
            violations.append("cartier_theorem_no_representation")
        cartier_beta, failure = _constructed(lambda: constructive_representation_cartier(pair))
        if failure:
            violations.append("cartier_constructor_failed")

    if regular and general and above and pair.k <= 2:
        if sections == 0:
            violations.append("codim2_h0n_zero")
        if pair.k == 2:
            certified = all(
                find_nonneg_representation(d, pair.weights, settings) is not None
                for d in pair.degrees
            )
            if certified:
                codim2_beta, failure = _constructed(
                    lambda: representation_codim_le2(pair, settings)
                )
                if failure:
                    violations.append("codim2_constructor_failed")
            else:
                flags.append("codim2_uncertified")

    if regular and general and pair.k >= 3 and not cartier and above and sections == 0:
        flags.append("general_type_without_sections")
    if regular and general and pair.N == pair.k and oracle is None:
        flags.append("n_equals_k_without_representation")

    cone, _ = is_linear_cone(pair)
    if regular and not general and not cone and not check_pst_bound(pair):
        violations.append("minimal_weight_bound")
    if regular and pair.N >= pair.k and min(pair.weights) > 1 and not general:
        violations.append("no_unit_weight_not_general_type")
    remainder = remaining_weights_after_cone(pair)
    if regular and remainder is not None and any(a != 1 for a in remainder):
        violations.append("linear_cone_remainder")

    if violations:
        logger.error(f"Violations for {pair}: {violations}")
    return ScanRecord(
        **record,
        h0n=sections,
        oracle=None if oracle is None else oracle.coefficients,
        cartier_construction=cartier_beta,
        codim2_construction=codim2_beta,
        violations=tuple(violations),
        flags=tuple(flags),
    )


def scan_degree_batch(
    batch: Sequence[Tuple[int, ...]], bounds: ScanBounds, settings: Settings
) -> List[ScanRecord]:
    records = []
    for degrees in batch:
        records.extend(evaluate_pair(pair, settings) for pair in pairs_for_degrees(degrees, bounds))
    return records


def _batches(bounds: ScanBounds) -> List[List[Tuple[int, ...]]]:
    tuples = list(degree_tuples(bounds))
    return [tuples[i : i + BATCH_SIZE] for i in range(0, len(tuples), BATCH_SIZE)]


def iter_scan(
    bounds: ScanBounds,
    summary: ScanSummary,
    jobs: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Iterator[ScanRecord]:
    """Yield records in canonical order while filling `summary`."""
    _validate(bounds)
    settings = settings or load_settings()
    jobs = jobs or settings.scan_jobs
    batches = _batches(bounds)
    work = partial(scan_degree_batch, bounds=bounds, settings=settings)
    logger.info(f"Scanning {len(batches)} batches of degree tuples with {jobs} job(s)")

    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    results = executor.map(work, batches) if executor else map(work, batches)
    try:
        for batch in results:
            for record in batch:
                if bounds.max_pairs is not None and summary.total_pairs >= bounds.max_pairs:
                    summary.truncated = True
                    logger.warning(f"Scan truncated after {summary.total_pairs} pairs")
                    return
                summary.add(record)
                yield record
    finally:
        if executor:
            executor.shutdown(wait=True, cancel_futures=True)


def scan_theorem(
    bounds: ScanBounds,
    jobs: Optional[int] = None,
    settings: Optional[Settings] = None,
    sink: Optional[Callable[[ScanRecord], None]] = None,
) -> ScanSummary:
    summary = ScanSummary(bounds=bounds)
    for record in iter_scan(bounds, summary, jobs, settings):
        if sink is not None:
            sink(record)
    logger.info(
        f"Scan finished: {summary.total_pairs} pairs, {summary.violation_count} violations"
    )
    return summary
