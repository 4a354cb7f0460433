from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st
from sympy import isprime, primepi

from config.settings import Settings
from errors import BudgetExceeded, PrecisionExhausted, PreconditionError, ResourceBudgetExceeded
from primes.bounds import (
    check_lemma_auxiliary,
    check_rs_inequality,
    rs_sample_points,
    sample_interval_points,
    verify_interval_lemma,
)
from primes.definitions import DeltaResult
from primes.reciprocals import delta, delta_upper_bound, straddle_chain
from primes.sieve import PrimeTable, prime_pi, primes_in_open_interval, sieve


def test_sieve_small():
    assert sieve(10) == [2, 3, 5, 7]
    assert sieve(2) == [2]


def test_sieve_rejects_tiny_and_huge_limits():
    with pytest.raises(PreconditionError):
        sieve(1)
    with pytest.raises(ResourceBudgetExceeded):
        sieve(10**6, Settings(sieve_limit_budget=1000))


@pytest.mark.parametrize("x, expected", [(100, 25), (2, 1), (1, 0), (0, 0), (Fraction(7, 2), 2)])
def test_prime_pi(x, expected):
    assert prime_pi(x) == expected


def test_prime_pi_rejects_negative():
    with pytest.raises(PreconditionError):
        prime_pi(-1)


@hypothesis_settings(max_examples=50, deadline=None)
@given(st.integers(0, 20_000))
def test_prime_pi_matches_sympy(x):
    assert prime_pi(x) == primepi(x)


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(32, 64, 7), (Fraction(256, 3), 128, 8), (2, 3, 0), (1, 2, 0), (Fraction(1, 2), 11, 4)],
)
def test_primes_in_open_interval(lo, hi, expected):
    assert primes_in_open_interval(lo, hi) == expected


def test_open_interval_needs_ordered_bounds():
    with pytest.raises(PreconditionError):
        primes_in_open_interval(10, 5)


def test_prime_table_refuses_points_past_its_limit():
    table = PrimeTable(100)
    assert table.pi(100) == 25
    with pytest.raises(PreconditionError):
        table.pi(101)


@pytest.mark.parametrize("x, pi", [(17, 7), (100, 25), (10**5, 9592)])
def test_rs_inequality_holds(x, pi):
    result = check_rs_inequality(x)
    assert result.holds
    assert result.pi == pi
    assert result.to_dict()["pi"] == str(pi)


def test_rs_inequality_reports_decimal_endpoints():
    payload = check_rs_inequality(1000).to_dict()
    low, high = (Fraction(s) for s in payload["lower_bound_interval"])
    assert low <= high
    assert 144 < low < 145
    assert all(181 < Fraction(s) < 182 for s in payload["upper_bound_interval"])
    assert all("[" not in s for s in payload["lower_bound_interval"])


def test_rs_inequality_below_valid_range():
    with pytest.raises(PreconditionError):
        check_rs_inequality(16)


def test_rs_inequality_precision_ceiling():
    with pytest.raises(PrecisionExhausted):
        check_rs_inequality(100, max_precision=8)


def test_rs_sample_points():
    points = rs_sample_points(limit=10**5, dense_until=100, steps=20)
    assert points[:3] == [17, 18, 19]
    assert points[-1] == 10**5
    assert points == sorted(set(points))


def test_interval_lemma_at_powers_of_two():
    report = verify_interval_lemma(5, [32])
    assert report.holds
    assert report.cases[0].upper_count == 7
    assert report.cases[0].lower_count is None

    report = verify_interval_lemma(7, [128])
    assert report.cases[0].lower_count == 8
    assert report.holds

    report = verify_interval_lemma(8, [256])
    assert report.cases[0].upper_count == 43


def test_interval_lemma_on_sampled_points():
    for n in range(5, 11):
        points = sample_interval_points(n, 20, upper=20_000, seed=n)
        assert points[0] == 2**n
        assert verify_interval_lemma(n, points).holds


def test_interval_lemma_domain():
    with pytest.raises(PreconditionError):
        verify_interval_lemma(4, [16])
    with pytest.raises(PreconditionError):
        verify_interval_lemma(6, [63])
    with pytest.raises(PreconditionError):
        sample_interval_points(10, 5, upper=100)


def test_interval_lemma_report_serializes_fractions():
    payload = verify_interval_lemma(7, [Fraction(257, 2)]).to_dict()
    assert payload["cases"][0]["x"] == "257/2"
    assert verify_interval_lemma(7, [128]).to_dict()["cases"][0]["x"] == "128"
    assert payload["checks_lower"] is True


def test_lemma_auxiliary_function():
    assert check_lemma_auxiliary(10)
    assert check_lemma_auxiliary(Fraction(21, 2))
    assert not check_lemma_auxiliary(1)
    with pytest.raises(PreconditionError):
        check_lemma_auxiliary(0)


@pytest.mark.parametrize(
    "m, primes",
    [(1, (2, 3, 5)), (2, (2, 3, 7, 11)), (3, (2, 3, 7, 43, 47))],
)
def test_straddle_chain(m, primes):
    chain = straddle_chain(m)
    assert chain.primes == primes
    assert chain.m == m
    assert chain.partial_sum < 1 < chain.partial_sum + Fraction(1, chain.closing_prime)


@pytest.mark.parametrize("m", range(1, 9))
def test_straddle_chain_invariants(m):
    chain = straddle_chain(m)
    assert chain.m == m
    assert list(chain.primes) == sorted(set(chain.primes))
    assert all(isprime(p) for p in chain.primes)
    assert chain.partial_sum == sum(Fraction(1, p) for p in chain.below_one)
    assert chain.gap > 0
    assert Fraction(1, chain.closing_prime) > chain.gap


def test_straddle_chain_needs_positive_m():
    with pytest.raises(PreconditionError):
        straddle_chain(0)


@pytest.mark.parametrize(
    "n, value, witness",
    [
        (1, Fraction(1, 2), (2,)),
        (2, Fraction(1, 6), (2, 3)),
        (3, Fraction(1, 42), (2, 3, 7)),
        (4, Fraction(1, 1806), (2, 3, 7, 43)),
    ],
)
def test_delta_exact_values(n, value, witness):
    result = delta(n)
    assert (result.value, result.witness, result.exact) == (value, witness, True)


def test_delta_strictly_decreases():
    values = [delta(n).value for n in range(1, 5)]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))


def test_delta_budget_carries_incumbent():
    with pytest.raises(BudgetExceeded) as excinfo:
        delta(4, budget=1)
    incumbent = excinfo.value.incumbent
    assert isinstance(incumbent, DeltaResult)
    assert not incumbent.exact
    assert incumbent.value > 0
    assert excinfo.value.to_dict()["details"]["nodes"] == excinfo.value.nodes


def test_delta_domain():
    with pytest.raises(PreconditionError):
        delta(0)


def test_delta_upper_bound_five():
    result = delta_upper_bound(5)
    assert result.witness == (2, 3, 7, 43, 1811)
    assert result.value == Fraction(5, 3270666)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_delta_upper_bound(n):
    result = delta_upper_bound(n)
    assert 0 < result.value <= Fraction(1, 2**n)
    assert len(set(result.witness)) == n
    assert 1 - sum(Fraction(1, p) for p in result.witness) == result.value


def test_delta_upper_bound_domain():
    with pytest.raises(PreconditionError):
        delta_upper_bound(4)
