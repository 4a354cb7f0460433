import json

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from errors import DegeneratePairError, PreconditionError
from models import Pair, PairKind
from pairs.checks import (
    check_pst_bound,
    check_report,
    classify,
    gcd_closure,
    is_cartier,
    is_linear_cone,
    is_regular,
    is_regular_by_subsets,
    is_space_well_formed,
    normalize,
    picard_generator,
    regularity_violations,
    remaining_weights_after_cone,
)
from pairs.serialization import canonical_key, dump_pair, load_pair


@pytest.mark.parametrize(
    "degrees, weights, kind, index",
    [
        ((5,), (1, 1, 1, 1, 1), PairKind.CALABI_YAU, 0),
        ((3,), (1, 1, 1, 1), PairKind.FANO, -1),
        ((84,), (6, 6, 14, 14, 21, 21), PairKind.GENERAL_TYPE, 2),
    ],
)
def test_classify(degrees, weights, kind, index):
    result = classify(Pair.of(degrees, weights))
    assert result.kind is kind
    assert result.index == index


def test_classify_serializes_index_as_string():
    assert classify(Pair.of([84], [6, 6, 14, 14, 21, 21])).to_dict() == {
        "kind": "GeneralType",
        "index": "2",
    }


def test_pair_sorts_and_rejects_nonpositive_entries():
    pair = Pair.of([10, 6], [5, 1, 3, 2])
    assert pair.degrees == (6, 10)
    assert pair.weights == (1, 2, 3, 5)
    with pytest.raises(PreconditionError):
        Pair.of([5], [1, 0])
    with pytest.raises(PreconditionError):
        Pair.of([5], [1, True])


def test_degenerate_pair():
    pair = Pair.of([], [1, 1])
    assert pair.degenerate
    with pytest.raises(DegeneratePairError):
        pair.require_nondegenerate()


@pytest.mark.parametrize(
    "degrees, weights, regular, delta",
    [
        ((6,), (1, 2, 3), True, None),
        ((30,), (6, 2, 3, 5), False, 2),
        ((84,), (6, 6, 14, 14, 21, 21), False, 2),
    ],
)
def test_is_regular(degrees, weights, regular, delta):
    verdict, witness = is_regular(Pair.of(degrees, weights))
    assert verdict is regular
    if regular:
        assert witness is None
    else:
        assert witness.delta == delta
        assert witness.weight_count > witness.degree_count


def test_regularity_violations_include_every_failing_divisor():
    deltas = [w.delta for w in regularity_violations(Pair.of([84], [6, 6, 14, 14, 21, 21]))]
    assert 21 in deltas
    witness = next(w for w in regularity_violations(Pair.of([84], [6, 6, 14, 14, 21, 21])) if w.delta == 21)
    assert (witness.weight_count, witness.degree_count) == (2, 1)


def test_gcd_closure():
    assert gcd_closure([6, 10, 15]) == {6, 10, 15, 2, 3, 5}
    assert gcd_closure([1, 1]) == set()


pair_strategy = st.builds(
    Pair.of,
    st.lists(st.integers(1, 30), min_size=1, max_size=3),
    st.lists(st.integers(1, 30), min_size=1, max_size=6),
)


@hypothesis_settings(max_examples=300, deadline=None)
@given(pair_strategy)
def test_divisor_counting_matches_subset_definition(pair):
    assert is_regular(pair)[0] == is_regular_by_subsets(pair)


@pytest.mark.parametrize(
    "weights, expected",
    [
        ((1, 1, 1, 1), True),
        ((6, 6, 14, 14, 21, 21), True),
        ((15, 10, 6), False),
        ((6, 10, 15), False),
        ((2, 3, 5), True),
        ((2, 2, 3), False),
    ],
)
def test_is_space_well_formed(weights, expected):
    assert is_space_well_formed(weights) is expected


def test_well_formedness_needs_two_weights():
    with pytest.raises(PreconditionError):
        is_space_well_formed([3])


def test_is_cartier():
    assert is_cartier(Pair.of([84], [6, 6, 14, 14, 21, 21])) == (True, None)
    assert is_cartier(Pair.of([6], [1, 2, 3]))[0]
    cartier, witness = is_cartier(Pair.of([5], [1, 2]))
    assert not cartier
    assert (witness.weight, witness.degree) == (2, 5)


@pytest.mark.parametrize(
    "weights, expected", [((1, 1, 1), 1), ((2, 3, 5), 30), ((1, 6, 14, 21), 42)]
)
def test_picard_generator(weights, expected):
    assert picard_generator(weights) == expected


def test_picard_generator_needs_well_formed_weights():
    with pytest.raises(PreconditionError):
        picard_generator([2, 2, 3])
    with pytest.raises(PreconditionError):
        picard_generator([6, 14, 21])


def test_is_linear_cone():
    cone, match = is_linear_cone(Pair.of([4], [1, 1, 4]))
    assert cone
    assert (match.degree_index, match.weight_index, match.value) == (0, 2, 4)
    assert is_linear_cone(Pair.of([5], [1, 1, 1])) == (False, None)
    assert is_linear_cone(Pair.of([6, 6], [2, 2, 3, 3])) == (False, None)


@pytest.mark.parametrize(
    "source, expected",
    [
        (((4, 2), (2, 1, 1, 1)), ((4,), (1, 1, 1))),
        (((5,), (1, 1, 1)), ((5,), (1, 1, 1))),
        (((6, 6), (6, 2, 3, 1)), ((6,), (1, 2, 3))),
        (((4,), (1, 1, 4)), ((), (1, 1))),
    ],
)
def test_normalize(source, expected):
    result = normalize(Pair.of(*source))
    assert (result.degrees, result.weights) == expected


@hypothesis_settings(max_examples=200, deadline=None)
@given(pair_strategy)
def test_normalize_keeps_index_and_is_idempotent(pair):
    once = normalize(pair)
    assert once.index == pair.index
    assert normalize(once) == once
    assert not is_linear_cone(once)[0]
    assert is_regular(once)[0] == is_regular(pair)[0]


@pytest.mark.parametrize(
    "degrees, weights",
    [
        ((5,), (1, 1, 1, 1, 1)),
        ((6, 6), (1, 1, 2, 2, 3, 3)),
        ((3,), (1, 1, 1, 1)),
    ],
)
def test_pst_bound_holds(degrees, weights):
    assert check_pst_bound(Pair.of(degrees, weights))


def test_pst_bound_rejects_pairs_outside_its_domain():
    with pytest.raises(PreconditionError):
        check_pst_bound(Pair.of([84], [6, 6, 14, 14, 21, 21]))
    with pytest.raises(PreconditionError):
        check_pst_bound(Pair.of([4], [1, 1, 4]))
    with pytest.raises(PreconditionError):
        check_pst_bound(Pair.of([30], [6, 2, 3, 5]))


def test_check_report():
    report = check_report(Pair.of([84], [6, 6, 14, 14, 21, 21])).to_dict()
    assert report["regular"] is False
    assert report["regular_witness"]["delta"] == "2"
    # every delta in the closure divides at least two weights and the one degree
    assert [w["delta"] for w in report["regular_violations"]] == ["2", "3", "6", "7", "14", "21"]
    assert report["cartier"] is True
    assert report["space_well_formed"] is True
    assert report["linear_cone"] is False


def test_remaining_weights_after_cone():
    assert remaining_weights_after_cone(Pair.of([2, 3], [1, 1, 2, 3])) == (1, 1)
    assert remaining_weights_after_cone(Pair.of([5], [1, 1, 1])) is None


def test_pair_json_accepts_strings_and_integers():
    pair = load_pair('{"degrees": ["84"], "weights": [6, 6, "14", 14, 21, 21]}')
    assert pair == Pair.of([84], [6, 6, 14, 14, 21, 21])
    assert json.loads(dump_pair(pair)) == {
        "degrees": ["84"],
        "weights": ["6", "6", "14", "14", "21", "21"],
    }


@pytest.mark.parametrize(
    "source",
    [
        "not json",
        '{"weights": [1, 1]}',
        '{"degrees": 5, "weights": [1, 1]}',
        '{"degrees": [5], "weights": [1, 1.5]}',
        '{"degrees": [5], "weights": [true, 1]}',
        "[1, 2]",
    ],
)
def test_pair_json_rejects_malformed_input(source):
    with pytest.raises(PreconditionError):
        load_pair(source)


def test_big_integers_survive_serialization():
    big = 2**80 * 3
    pair = load_pair({"degrees": [str(big)], "weights": ["3", str(2**80)]})
    assert load_pair(dump_pair(pair)) == pair


def test_canonical_key_orders_by_codimension_then_degrees():
    pairs = [
        Pair.of([6, 6], [2, 2, 3, 3]),
        Pair.of([10], [1, 2, 5]),
        Pair.of([5], [1, 1, 1, 1, 1]),
        Pair.of([5], [1, 1, 1]),
    ]
    ordered = sorted(pairs, key=canonical_key)
    assert ordered == [pairs[3], pairs[2], pairs[1], pairs[0]]
