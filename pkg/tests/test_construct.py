import pytest

from cli.reproduce import run_acceptance
from construct.counterexample import build_counterexample, chain_length_for
from construct.definitions import ScanBounds, ScanSummary
from construct.points import build_point_family
from construct.scan import degree_tuples, evaluate_pair, iter_scan, pairs_for_degrees, scan_theorem
from errors import PreconditionError
from models import Pair
from pairs.checks import is_regular, remaining_weights_after_cone

SMALL = ScanBounds(max_k=2, max_n=4, max_degree_sum=12, max_weight=6)


@pytest.mark.parametrize(
    "n, degrees, weights",
    [
        (3, (42, 42), (6, 6, 14, 14, 21, 21)),
        (4, (84,), (6, 6, 14, 14, 21, 21)),
        (6, (3612,), (42, 42, 258, 258, 602, 602, 903, 903)),
    ],
)
def test_counterexample_pairs(n, degrees, weights):
    report = build_counterexample(n)
    assert report.pair == Pair.of(degrees, weights)
    assert report.index == 2
    assert report.all_passed
    assert report.check("h0n_zero").passed
    assert report.pair.dimension == n


@pytest.mark.parametrize("n", range(3, 10))
def test_counterexample_family(n):
    report = build_counterexample(n)
    assert report.m == chain_length_for(n)
    assert report.pair.k == (1 if n % 2 == 0 else 2)
    assert report.to_dict()["all_passed"] is True


def test_counterexample_domain():
    with pytest.raises(PreconditionError):
        build_counterexample(2)


@pytest.mark.parametrize(
    "N, degrees, weights",
    [
        (1, (6,), (2, 3)),
        (2, (30, 30), (6, 10, 15)),
        (3, (210, 210, 210), (30, 42, 70, 105)),
    ],
)
def test_point_family(N, degrees, weights):
    report = build_point_family(N)
    assert report.pair == Pair.of(degrees, weights)
    assert report.all_passed
    assert report.forced_cost > report.target


def test_point_family_domain():
    with pytest.raises(PreconditionError):
        build_point_family(0)


def test_degree_tuples_order():
    bounds = ScanBounds(max_k=2, max_n=3, max_degree_sum=4, max_weight=4)
    assert list(degree_tuples(bounds)) == [
        (1,), (2,), (3,), (4,), (1, 1), (1, 2), (1, 3), (2, 2),
    ]


def test_pairs_for_sextic():
    bounds = ScanBounds(max_k=1, max_n=2, max_degree_sum=6, max_weight=6)
    pairs = pairs_for_degrees((6,), bounds)
    assert len(pairs) == 8
    assert Pair.of([6], [2, 3]) in pairs
    assert Pair.of([6], [1, 2, 3]) in pairs
    assert all(is_regular(pair)[0] for pair in pairs)
    # 6 itself would make a linear cone
    assert all(6 not in pair.weights for pair in pairs)


def test_pairs_for_degrees_with_linear_cones():
    bounds = ScanBounds(max_k=1, max_n=2, max_degree_sum=6, max_weight=6, include_linear_cones=True)
    assert Pair.of([6], [1, 6]) in pairs_for_degrees((6,), bounds)


def test_evaluate_quintic():
    record = evaluate_pair(Pair.of([5], [1, 1, 1, 1, 1]))
    assert record.kind == "CalabiYau"
    assert record.h0n == 1
    assert record.oracle == (1, 1, 1, 1, 1)
    assert record.violations == ()


def test_evaluate_runs_both_constructions():
    record = evaluate_pair(Pair.of([6, 6], [2, 2, 3, 3]))
    assert record.kind == "GeneralType"
    assert record.cartier
    assert record.cartier_construction is not None
    assert record.codim2_construction is not None
    assert record.violations == ()


def test_index_above_a_degree_is_a_flag_not_a_violation():
    # x^5 and x^2 are the only monomials of degree 5 and 2, so the series cancels
    record = evaluate_pair(Pair.of([3, 18], [1, 6, 9]))
    assert record.h0n == 0
    assert record.oracle == (6, 1, 1)
    assert record.violations == ()
    assert record.flags == ("h0n_representation_outside_bridge",)


def test_small_scan_has_no_violations():
    records = []
    summary = scan_theorem(SMALL, sink=records.append)
    assert summary.total_pairs == len(records) > 0
    assert summary.violation_count == 0
    assert summary.errors == 0
    assert summary.cartier_theorem_checked > 0
    assert not summary.truncated


def test_regular_linear_cones_leave_unit_weights():
    bounds = ScanBounds(
        max_k=2, max_n=4, max_degree_sum=10, max_weight=6, include_linear_cones=True
    )
    records = []
    summary = scan_theorem(bounds, sink=records.append)
    remainders = [remaining_weights_after_cone(record.pair) for record in records]
    remainders = [r for r in remainders if r is not None]
    assert remainders
    assert all(set(r) <= {1} for r in remainders)
    assert "linear_cone_remainder" not in summary.violations


def test_scan_is_deterministic():
    first = [record.to_dict() for record in iter_scan(SMALL, ScanSummary(SMALL), jobs=1)]
    second = [record.to_dict() for record in iter_scan(SMALL, ScanSummary(SMALL), jobs=1)]
    assert first == second


def test_scan_truncates_at_max_pairs():
    bounds = ScanBounds(max_k=2, max_n=4, max_degree_sum=12, max_weight=6, max_pairs=5)
    summary = scan_theorem(bounds)
    assert summary.total_pairs == 5
    assert summary.truncated


def test_scan_validates_bounds():
    with pytest.raises(PreconditionError):
        scan_theorem(ScanBounds(max_k=0, max_n=3, max_degree_sum=5, max_weight=5))


@pytest.mark.slow
def test_parallel_scan_matches_serial():
    serial = [record.to_dict() for record in iter_scan(SMALL, ScanSummary(SMALL), jobs=1)]
    parallel = [record.to_dict() for record in iter_scan(SMALL, ScanSummary(SMALL), jobs=2)]
    assert serial == parallel


@pytest.mark.slow
def test_quick_acceptance_table_passes():
    rows = run_acceptance(quick=True)
    assert [row.id for row in rows] == list(range(1, 11))
    failed = [row.to_dict() for row in rows if not row.passed]
    assert not failed
