from itertools import product
from math import gcd

import pytest
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st

from config.settings import Settings
from construct.definitions import ScanBounds
from construct.scan import enumerate_pairs
from errors import ContractViolation, PreconditionError, ProofPathExhausted, ResourceBudgetExceeded
from models import Pair, Representation
from represent.cartier import constructive_representation_cartier
from represent.codim2 import CodimTwoProver, representation_codim_le2
from represent.coins import sylvester_frobenius, two_coin_representation
from represent.oracle import (
    Semigroup,
    certify,
    find_nonneg_representation,
    find_positive_representation,
    verify_representation,
)
from represent.table import count_representations_table, find_nonneg_representation_table


def brute_force_representable(target, weights):
    if target < 0:
        return False
    reachable = [True] + [False] * target
    for value in range(1, target + 1):
        reachable[value] = any(value >= a and reachable[value - a] for a in weights)
    return reachable[target]


def test_zero_target_is_the_empty_monomial():
    rep = find_nonneg_representation(0, [6, 14, 21])
    assert rep.coefficients == (0, 0, 0)


def test_target_below_every_weight():
    assert find_nonneg_representation(2, [6, 14, 21]) is None


def test_two_weight_target():
    rep = find_nonneg_representation(8, [5, 3])
    assert rep.weights == (3, 5)
    assert rep.coefficients == (1, 1)


def test_negative_target_has_no_representation():
    assert find_nonneg_representation(-1, [1]) is None


def test_invalid_weights_are_rejected():
    with pytest.raises(PreconditionError):
        find_nonneg_representation(5, [])
    with pytest.raises(PreconditionError):
        find_nonneg_representation(5, [2, 0])


def test_large_targets_stay_cheap():
    # products of primes: the residue table only grows with the smallest weight
    weights = [2 * 3 * 5 * 7 * 11 * 13 * 17, 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23, 30]
    target = 15 * (10**40 + 1)
    rep = find_nonneg_representation(target, weights)
    assert rep is not None and rep.is_valid()


def test_semigroup_budget():
    with pytest.raises(ResourceBudgetExceeded):
        Semigroup([1000, 1001], Settings(memory_budget=100))


@hypothesis_settings(max_examples=200, deadline=None)
@given(
    st.integers(0, 120),
    st.lists(st.integers(1, 25), min_size=1, max_size=5),
)
def test_oracle_agrees_with_value_table(target, weights):
    oracle = find_nonneg_representation(target, weights)
    table = find_nonneg_representation_table(target, weights)
    assert (oracle is None) == (table is None) == (not brute_force_representable(target, weights))
    if oracle is not None:
        assert oracle.is_valid()
        # both return the lexicographically smallest vector
        assert oracle.coefficients == table.coefficients
    assert (count_representations_table(target, weights) > 0) == (oracle is not None)


@hypothesis_settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 25), st.integers(0, 6)), min_size=1, max_size=5))
def test_representable_targets_stay_representable(terms):
    weights = [a for a, _ in terms]
    target = sum(a * c for a, c in terms)
    assert find_nonneg_representation(target, weights) is not None
    for a in weights:
        rep = find_nonneg_representation(target + a, weights)
        assert rep is not None and rep.is_valid()


def test_count_representations_table():
    assert count_representations_table(6, [2, 3]) == 2
    assert count_representations_table(2, [1, 1, 1, 1]) == 10
    assert count_representations_table(-3, [1]) == 0


@pytest.mark.parametrize(
    "degrees, weights, expected",
    [
        ((4,), (1, 1, 1), (2, 1, 1)),
        ((6,), (3, 2), None),
        ((84,), (6, 6, 14, 14, 21, 21), None),
    ],
)
def test_find_positive_representation(degrees, weights, expected):
    rep = find_positive_representation(Pair.of(degrees, weights))
    if expected is None:
        assert rep is None
    else:
        assert rep.coefficients == expected
        assert rep.positive and verify_representation(rep)


def test_fano_pairs_have_no_positive_representation():
    assert find_positive_representation(Pair.of([3], [1, 1, 1, 1])) is None


def test_certify_rejects_bad_certificates():
    good = Representation((1, 1), 8, (3, 5))
    assert certify(good) is good
    with pytest.raises(ContractViolation):
        certify(Representation((1, 2), 8, (3, 5)))
    with pytest.raises(ContractViolation):
        certify(Representation((0, 2), 10, (3, 5), positive=True))


@pytest.mark.parametrize(
    "degrees, weights, expected",
    [
        ((4,), (1, 1, 1), (2, 1, 1)),
        ((6, 6), (2, 2, 3, 3), (1, 2, 1, 1)),
        ((12,), (1, 2, 3), (7, 1, 1)),
    ],
)
def test_constructive_cartier(degrees, weights, expected):
    rep = constructive_representation_cartier(Pair.of(degrees, weights))
    assert rep.coefficients == expected
    assert rep.method == "cartier"
    assert rep.is_valid()


@pytest.mark.parametrize(
    "degrees, weights",
    [
        ((30, 30), (6, 10, 15, 1, 1, 1)),
        ((6, 6, 6), (2, 2, 2, 3, 3, 3, 1)),
        ((30,), (2, 3, 5, 1, 1)),
        ((210,), (2, 3, 5, 7)),
        ((6, 6, 6), (2, 2, 2, 3, 3, 3)),
        ((6, 6, 6, 6), (2, 2, 2, 2, 3, 3, 3, 3)),
    ],
)
def test_constructive_cartier_on_deeper_pairs(degrees, weights):
    pair = Pair.of(degrees, weights)
    rep = constructive_representation_cartier(pair)
    assert rep.is_valid()
    assert min(rep.coefficients) >= 1


@pytest.mark.parametrize(
    "degrees, weights",
    [
        ((84,), (6, 6, 14, 14, 21, 21)),  # not regular
        ((5,), (1, 2)),  # not Cartier
        ((3,), (1, 1, 1, 1)),  # Fano
        ((6, 6), (1, 2, 3)),  # N <= k
    ],
)
def test_constructive_cartier_preconditions(degrees, weights):
    with pytest.raises(PreconditionError):
        constructive_representation_cartier(Pair.of(degrees, weights))


@pytest.mark.parametrize(
    "a, b, expected", [(3, 5, 7), (2, 3, 1), (2, 5, 3)]
)
def test_sylvester_frobenius(a, b, expected):
    assert sylvester_frobenius(a, b) == expected


def test_sylvester_preconditions():
    with pytest.raises(PreconditionError):
        sylvester_frobenius(4, 6)
    with pytest.raises(PreconditionError):
        sylvester_frobenius(1, 5)


@pytest.mark.parametrize(
    "m, a, b, expected", [(8, 3, 5, (1, 1)), (7, 3, 5, None), (0, 3, 5, (0, 0))]
)
def test_two_coin_representation(m, a, b, expected):
    assert two_coin_representation(m, a, b) == expected


@hypothesis_settings(max_examples=150, deadline=None)
@given(st.integers(2, 30), st.integers(2, 30))
def test_sylvester_bound_matches_brute_force(a, b):
    assume(gcd(a, b) == 1)
    frobenius = sylvester_frobenius(a, b)
    assert two_coin_representation(frobenius, a, b) is None
    assert not brute_force_representable(frobenius, [a, b])
    for m in range(frobenius + 1, a * b + 1):
        x, y = two_coin_representation(m, a, b)
        assert x >= 0 and y >= 0 and x * a + y * b == m


@pytest.mark.parametrize(
    "degrees, weights",
    [
        ((4,), (1, 1, 1)),
        ((6, 10), (2, 3, 5, 1)),
        ((6, 6), (2, 2, 3, 3)),
        ((10, 15), (2, 3, 5, 5, 1)),
        ((35, 12), (5, 7, 3, 4)),
    ],
)
def test_codim_two_constructor(degrees, weights):
    pair = Pair.of(degrees, weights)
    rep = representation_codim_le2(pair)
    assert rep.is_valid() and rep.positive
    assert rep.target == sum(degrees)


def test_codim_two_unit_weight_shortcut():
    rep = representation_codim_le2(Pair.of([6, 10], [2, 3, 5, 1]))
    # weights sorted as (1, 2, 3, 5)
    assert rep.coefficients == (6, 1, 1, 1)
    assert rep.method == "codim2"


def test_codim_two_delegates_hypersurfaces():
    rep = representation_codim_le2(Pair.of([4], [1, 1, 1]))
    assert rep.coefficients == (2, 1, 1)
    assert rep.method == "cartier"


def test_codim_two_rejects_irregular_pairs():
    # two weights divisible by 2 but only one degree
    with pytest.raises(PreconditionError) as excinfo:
        representation_codim_le2(Pair.of([15, 10], [3, 5, 2, 2]))
    assert "regular" in excinfo.value.details["problems"]
    # the oracle still finds a positive representation of 25
    rep = find_positive_representation(Pair.of([15, 10], [3, 5, 2, 2]))
    assert rep is not None and rep.is_valid()


def test_codim_two_requires_degree_certificates():
    # regular and of general type, but 3 is no combination of 4, 5, 7, 11
    with pytest.raises(PreconditionError) as excinfo:
        representation_codim_le2(Pair.of([3, 1540], [4, 5, 7, 11]))
    assert excinfo.value.details["missing_certificate"] == ["3"]


def test_codim_two_exhausts_without_search():
    prover = CodimTwoProver(Settings())
    # every weight divides 30, and 1 is no combination of 2, 3, 5
    with pytest.raises(ProofPathExhausted) as excinfo:
        prover.solve_pair(30, 1, [2, 3, 5])
    assert excinfo.value.trace[-1] == "exhausted: 1 has no certificate by the weights [2, 3, 5]"


def test_codim_two_constructor_over_enumerated_pairs():
    bounds = ScanBounds(max_k=2, max_n=4, max_degree_sum=24, max_weight=8)
    checked = 0
    for pair in enumerate_pairs(bounds):
        if pair.k != 2 or pair.index <= 0 or pair.N <= pair.k:
            continue
        if any(find_nonneg_representation(d, pair.weights) is None for d in pair.degrees):
            continue
        rep = representation_codim_le2(pair)
        assert rep.method == "codim2" and rep.is_valid(), pair
        checked += 1
    assert checked > 0


def test_codim_two_rejects_three_degrees():
    with pytest.raises(PreconditionError):
        representation_codim_le2(Pair.of([6, 6, 6], [2, 2, 2, 3, 3, 3, 1]))


def brute_force_positive(pair):
    target = sum(pair.degrees)
    ranges = [range(1, target // a + 1) for a in pair.weights]
    return any(
        sum(b * a for b, a in zip(beta, pair.weights)) == target for beta in product(*ranges)
    )


@pytest.mark.parametrize(
    "degrees, weights",
    [((6,), (3, 2)), ((30, 30), (15, 10, 6)), ((10,), (1, 2, 5)), ((4,), (1, 1, 1))],
)
def test_positive_oracle_matches_exhaustive_search(degrees, weights):
    pair = Pair.of(degrees, weights)
    assert (find_positive_representation(pair) is not None) == brute_force_positive(pair)


def test_division_by_a_prime_scales_the_other_slots():
    rep = constructive_representation_cartier(Pair.of([210], [2, 3, 5, 7]))
    assert rep.coefficients == (90, 2, 2, 2)


def test_squarefree_fano_closing_identity():
    rep = constructive_representation_cartier(Pair.of([6, 6, 6], [2, 2, 2, 3, 3, 3]))
    assert rep.coefficients == (1, 1, 1, 2, 1, 1)


def test_codim_two_coprime_split_uses_two_coins():
    rep = representation_codim_le2(Pair.of([35, 12], [5, 7, 3, 4]))
    # weights sorted as (3, 4, 5, 7); 3 and 4 share the degree 12
    assert rep.coefficients == (9, 2, 1, 1)


def test_codim_two_fano_quotient_shape():
    rep = representation_codim_le2(Pair.of([6, 6], [2, 2, 3, 3]))
    assert rep.coefficients == (2, 1, 1, 1)
