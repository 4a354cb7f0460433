"""Acceptance table: every claim the package makes, recomputed from scratch.

Each criterion runs in isolation; a domain error fails that row only.
"""

import json
import logging
import time
from datetime import datetime, timezone
from fractions import Fraction
from math import gcd
from typing import Callable, List, Optional, Tuple

import typer

from cli.definitions import FULL_SCALE, QUICK_SCALE, AcceptanceRow, AcceptanceScale
from cli.output import OutputFormat, domain_errors, emit_table
from config.settings import Settings, load_settings
from config.storage import ensure_writable, resolve_results_dir
from construct.counterexample import build_counterexample
from construct.definitions import ScanBounds, ScanSummary
from construct.points import build_point_family
from construct.scan import scan_theorem
from errors import HodgeLevelsError
from hodge.numbers import fermat_milnor_hodge, h0n, hypersurface_middle_hodge
from models import Pair
from primes.bounds import (
    check_lemma_auxiliary,
    check_rs_inequality,
    rs_sample_points,
    sample_interval_points,
    verify_interval_lemma,
)
from primes.reciprocals import delta, delta_upper_bound
from primes.sieve import PrimeTable
from represent.coins import sylvester_frobenius, two_coin_representation
from utils.log_setup import configure_logging

logger = logging.getLogger(__name__)

QUINTIC = Pair.of([5], [1, 1, 1, 1, 1])
FOURFOLD_COUNTEREXAMPLE = Pair.of([84], [6, 6, 14, 14, 21, 21])
DELTA_TABLE = {
    1: (Fraction(1, 2), (2,)),
    2: (Fraction(1, 6), (2, 3)),
    3: (Fraction(1, 42), (2, 3, 7)),
    4: (Fraction(1, 1806), (2, 3, 7, 43)),
}

Outcome = Tuple[bool, str]


def _violations(summary: ScanSummary, names: List[str]) -> int:
    return sum(summary.violations.get(name, 0) for name in names)


def _scan_theorem_conformance(summary: ScanSummary) -> Outcome:
    bad = _violations(summary, ["cartier_theorem_no_representation", "cartier_constructor_failed"])
    return (
        summary.violation_count == 0 and summary.errors == 0,
        f"{summary.total_pairs} regular pairs, {summary.cartier_theorem_checked} Cartier "
        f"general type constructions, {bad} Cartier violations, "
        f"{summary.violation_count} violations in total, {summary.errors} errors",
    )


def _counterexamples(scale: AcceptanceScale) -> Outcome:
    built = [build_counterexample(n) for n in scale.counterexample_dims]
    fourfold = next((report for report in built if report.n == 4), None)
    exact = fourfold is not None and fourfold.pair == FOURFOLD_COUNTEREXAMPLE and fourfold.index == 2
    dims = f"{scale.counterexample_dims.start}..{scale.counterexample_dims.stop - 1}"
    return (
        all(report.all_passed for report in built) and exact,
        f"n = {dims} built and checked; n = 4 gives {fourfold.pair if fourfold else None}",
    )


def _calabi_yau_exactness(summary: ScanSummary, settings: Settings) -> Outcome:
    quintic = h0n(QUINTIC, settings)
    bad = _violations(summary, ["calabi_yau_h0n_not_one", "fano_h0n_nonzero"])
    counts = summary.by_kind
    return (
        quintic == 1 and bad == 0,
        f"h0n(quintic) = {quintic}; {counts.get('CalabiYau', 0)} Calabi-Yau and "
        f"{counts.get('Fano', 0)} Fano pairs scanned, {bad} mismatches",
    )


def _quintic_hodge(settings: Settings) -> Outcome:
    series = hypersurface_middle_hodge(QUINTIC, settings).entries
    brute = fermat_milnor_hodge(QUINTIC, settings).entries
    return (
        series == (1, 101, 101, 1) and brute == series,
        f"series {list(series)}, Milnor basis {list(brute)}",
    )


def _point_family(scale: AcceptanceScale, settings: Settings) -> Outcome:
    reports = [build_point_family(N, settings) for N in scale.point_family_sizes]
    return (
        all(report.all_passed for report in reports),
        f"N = {', '.join(str(report.N) for report in reports)} regular, Cartier, "
        "general type, no positive representation",
    )


def _representable(m: int, a: int, b: int) -> bool:
    return any((m - y * b) % a == 0 for y in range(m // b + 1))


def _sylvester(scale: AcceptanceScale) -> Outcome:
    checked = 0
    for a in range(2, scale.coin_limit + 1):
        for b in range(2, scale.coin_limit + 1):
            if gcd(a, b) != 1:
                continue
            frobenius = sylvester_frobenius(a, b)
            if two_coin_representation(frobenius, a, b) is not None or _representable(frobenius, a, b):
                return False, f"{frobenius} represented by ({a}, {b})"
            for m in range(frobenius + 1, a * b + 1):
                found = two_coin_representation(m, a, b)
                if found is None or found[0] * a + found[1] * b != m or not _representable(m, a, b):
                    return False, f"{m} not represented by ({a}, {b})"
            checked += 1
    return True, f"{checked} coprime coin pairs up to {scale.coin_limit}"


def _prime_lemmas(scale: AcceptanceScale, settings: Settings) -> Outcome:
    table = PrimeTable(max(2 * scale.interval_upper, scale.rs_limit), settings)
    interval_failures = 0
    for n in range(5, 13):
        points = sample_interval_points(n, scale.interval_samples, upper=scale.interval_upper)
        interval_failures += len(verify_interval_lemma(n, points, settings, table).failures)

    points = rs_sample_points(scale.rs_limit, scale.rs_dense_until)
    rs_failures = [x for x in points if not check_rs_inequality(x, settings, table).holds]
    auxiliary = check_lemma_auxiliary(10, settings)
    return (
        interval_failures == 0 and not rs_failures and auxiliary,
        f"interval lemma n = 5..12: {interval_failures} failures; "
        f"bound checked at {len(points)} points up to {scale.rs_limit}: {len(rs_failures)} failures; "
        f"auxiliary H(10) > 1: {auxiliary}",
    )


def _delta_table(scale: AcceptanceScale, settings: Settings) -> Outcome:
    for n, (value, witness) in DELTA_TABLE.items():
        result = delta(n, settings=settings)
        if (result.value, result.witness) != (value, witness):
            return False, f"delta({n}) = {result.value} via {result.witness}"
    for n in scale.delta_bound_sizes:
        bound = delta_upper_bound(n, settings)
        if not 0 < bound.value <= Fraction(1, 2**n):
            return False, f"delta_upper_bound({n}) = {bound.value}"
    sizes = scale.delta_bound_sizes
    return True, f"delta(1..4) exact; delta(n) <= 1/2^n for n = {sizes.start}..{sizes.stop - 1}"


def _bridge(summary: ScanSummary) -> Outcome:
    bad = _violations(summary, ["h0n_representation_mismatch"])
    outside = summary.flags.get("h0n_representation_outside_bridge", 0)
    return (
        bad == 0,
        f"{summary.total_pairs} pairs, {bad} mismatches between h0n > 0 and a positive "
        f"representation, {outside} differences with i_X >= min(d) or an uncertified degree",
    )


def _codim2(summary: ScanSummary) -> Outcome:
    bad = _violations(summary, ["codim2_constructor_failed", "codim2_h0n_zero"])
    skipped = summary.flags.get("codim2_uncertified", 0)
    return (
        bad == 0,
        f"{summary.codim2_checked} codimension two constructions, {bad} failures, "
        f"{skipped} pairs without degree certificates",
    )


def _run(criterion_id: int, name: str, check: Callable[[], Outcome]) -> AcceptanceRow:
    started = time.perf_counter()
    try:
        passed, detail = check()
    except HodgeLevelsError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc.message}"
    logger.info(
        f"Criterion {criterion_id} ({name}): {'pass' if passed else 'FAIL'} "
        f"in {time.perf_counter() - started:.1f}s"
    )
    return AcceptanceRow(criterion_id, name, passed, detail)


def run_acceptance(
    quick: bool = False, settings: Optional[Settings] = None, jobs: Optional[int] = None
) -> List[AcceptanceRow]:
    scale = QUICK_SCALE if quick else FULL_SCALE
    settings = (settings or load_settings()).override(scan_jobs=jobs)
    bounds = ScanBounds(
        max_k=scale.scan_max_k,
        max_n=scale.scan_max_n,
        max_degree_sum=scale.scan_max_degree_sum,
        max_weight=scale.scan_max_weight,
    )
    summary: Optional[ScanSummary] = None
    scan_error: Optional[HodgeLevelsError] = None
    try:
        summary = scan_theorem(bounds, settings=settings)
    except HodgeLevelsError as exc:
        scan_error = exc

    def from_scan(check: Callable[[ScanSummary], Outcome]) -> Callable[[], Outcome]:
        def run() -> Outcome:
            if summary is None:
                raise scan_error
            return check(summary)

        return run

    return [
        _run(1, "theorem conformance scan", from_scan(_scan_theorem_conformance)),
        _run(2, "counterexample family", lambda: _counterexamples(scale)),
        _run(3, "Calabi-Yau and Fano exactness", from_scan(lambda s: _calabi_yau_exactness(s, settings))),
        _run(4, "quintic Hodge vector", lambda: _quintic_hodge(settings)),
        _run(5, "point family without positive representation", lambda: _point_family(scale, settings)),
        _run(6, "Sylvester two-coin bound", lambda: _sylvester(scale)),
        _run(7, "prime lemma instances", lambda: _prime_lemmas(scale, settings)),
        _run(8, "delta table", lambda: _delta_table(scale, settings)),
        _run(9, "h0n and positive representation agree", from_scan(_bridge)),
        _run(10, "codimension two constructor", from_scan(_codim2)),
    ]


def reproduce(
    quick: bool = typer.Option(False, help="Smaller ranges that finish in seconds"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json or csv"),
    save: bool = typer.Option(False, help="Also write the table to the results directory"),
    jobs: Optional[int] = typer.Option(None, help="Worker processes for the scan"),
):
    """Recompute every acceptance criterion and print a pass/fail table."""
    with domain_errors():
        rows = run_acceptance(quick=quick, jobs=jobs)
    payload = [row.to_dict() for row in rows]
    emit_table(payload, fmt.value)

    if save:
        stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        with domain_errors():
            path = ensure_writable(resolve_results_dir() / f"reproduce_{stamp}.json")
        path.write_text(json.dumps(payload, indent=2) + "\n")
        logger.info(f"Saved acceptance table to {path}")

    if not all(row.passed for row in rows):
        raise typer.Exit(code=1)


def _main():
    configure_logging()
    typer.run(reproduce)


if __name__ == "__main__":
    _main()
