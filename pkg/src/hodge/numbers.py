"""Hodge numbers read off Hilbert series of weighted complete intersections."""

import logging
from itertools import product
from math import prod
from typing import Optional

from config.settings import Settings, load_settings
from errors import PreconditionError, ResourceBudgetExceeded
from hodge.definitions import HodgeLevel, HodgeVector, HodgeVerdict, TheoremBranch
from hodge.series import series_coefficients
from models import Pair, PairKind
from pairs.checks import classify, is_cartier, is_regular
from represent.oracle import find_nonneg_representation, find_positive_representation

logger = logging.getLogger(__name__)


def h0n(pair: Pair, settings: Optional[Settings] = None) -> int:
    """Coefficient of t^{i_X} in prod(1 - t^d) / prod(1 - t^a)."""
    pair.require_nondegenerate()
    index = pair.index
    if index < 0:
        return 0
    return series_coefficients(pair.degrees, pair.weights, index, settings)[index]


def _branch(pair: Pair) -> TheoremBranch:
    kind = classify(pair).kind
    if kind is PairKind.FANO:
        return TheoremBranch.FANO
    if kind is PairKind.CALABI_YAU:
        return TheoremBranch.CALABI_YAU
    regular, _ = is_regular(pair)
    if not regular:
        return TheoremBranch.UNCLASSIFIED
    if is_cartier(pair)[0]:
        return TheoremBranch.CARTIER_GENERAL_TYPE
    if pair.k <= 2:
        return TheoremBranch.CODIM2_GENERAL_TYPE
    return TheoremBranch.UNCLASSIFIED


def hodge_level_verdict(pair: Pair, settings: Optional[Settings] = None) -> HodgeVerdict:
    pair.require_nondegenerate()
    if pair.N <= pair.k:
        raise PreconditionError(
            "Hodge level verdicts need N > k", {"pair": pair.to_dict()}
        )
    value = h0n(pair, settings)
    verdict = HodgeVerdict(
        dimension=pair.dimension,
        index=pair.index,
        h0n=value,
        hodge_level_max=value > 0,
        theorem_branch=_branch(pair),
    )
    if verdict.prediction_holds is False:
        logger.warning(
            f"Verdict for {pair} contradicts the {verdict.theorem_branch.value} prediction (h0n={value})"
        )
    return verdict


def _require_cartier_hypersurface(pair: Pair) -> None:
    pair.require_nondegenerate()
    if pair.k != 1:
        raise PreconditionError(
            "middle Hodge numbers are computed for hypersurfaces only",
            {"pair": pair.to_dict(), "k": pair.k},
        )
    cartier, witness = is_cartier(pair)
    if not cartier:
        raise PreconditionError(
            "middle Hodge numbers need every weight to divide the degree",
            {"pair": pair.to_dict(), "witness": witness.to_dict()},
        )
    if pair.dimension < 0:
        raise PreconditionError(
            "hypersurface must have nonnegative dimension", {"pair": pair.to_dict()}
        )


def hypersurface_middle_hodge(
    pair: Pair, settings: Optional[Settings] = None
) -> HodgeVector:
    """h_pr^{q,n-q} from the Jacobian ring series prod (1 - t^{d-a}) / (1 - t^a)."""
    _require_cartier_hypersurface(pair)
    (degree,) = pair.degrees
    n = pair.dimension
    weight_sum = sum(pair.weights)
    upto = (n + 1) * degree - weight_sum
    coefficients = series_coefficients(
        [degree - a for a in pair.weights], pair.weights, max(upto, 0), settings
    )

    def at(exponent: int) -> int:
        return coefficients[exponent] if 0 <= exponent <= upto else 0

    # h^{q,n-q} sits in degree (n - q + 1) d - sum(a)
    entries = tuple(at((n - q + 1) * degree - weight_sum) for q in range(n + 1))
    return HodgeVector(dimension=n, entries=entries)


def fermat_milnor_hodge(pair: Pair, settings: Optional[Settings] = None) -> HodgeVector:
    """Same numbers counted on the monomial basis of the Fermat Jacobian ring.

    The basis is x^e with 0 <= e_l <= d/a_l - 2; a monomial of weighted degree
    (n - q + 1) d - sum(a) contributes to h^{q,n-q}.
    """
    _require_cartier_hypersurface(pair)
    settings = settings or load_settings()
    (degree,) = pair.degrees
    n = pair.dimension
    ranges = [range(degree // a - 1) for a in pair.weights]
    size = prod(len(r) for r in ranges)
    if size > settings.memory_budget:
        raise ResourceBudgetExceeded(
            f"Milnor basis of size {size} exceeds the memory budget",
            {"size": str(size), "budget": settings.memory_budget},
        )

    weight_sum = sum(pair.weights)
    slots = {(n - q + 1) * degree - weight_sum: q for q in range(n + 1)}
    entries = [0] * (n + 1)
    for exponents in product(*ranges):
        weighted = sum(e * a for e, a in zip(exponents, pair.weights))
        q = slots.get(weighted)
        if q is not None:
            entries[q] += 1
    return HodgeVector(dimension=n, entries=tuple(entries))


def bridge_applies(pair: Pair, settings: Optional[Settings] = None) -> bool:
    """Whether h0n is the number of monomials of degree i_X.

    Below the smallest degree the numerator contributes only its constant term. Every degree must
    also carry a polynomial, or the series describes no intersection.
    """
    pair.require_nondegenerate()
    if pair.index >= min(pair.degrees):
        return False
    return all(
        find_nonneg_representation(d, pair.weights, settings) is not None
        for d in pair.degrees
    )


def verify_h0n_consistency(pair: Pair, settings: Optional[Settings] = None) -> bool:
    """h0n > 0 exactly when a positive representation exists, where the two are comparable."""
    if not bridge_applies(pair, settings):
        raise PreconditionError(
            "h0n and monomials of degree i_X are compared only for i_X < min(d) "
            "with every degree representable",
            {"pair": pair.to_dict(), "i_X": str(pair.index)},
        )
    positive = h0n(pair, settings) > 0
    certified = find_positive_representation(pair, settings) is not None
    return positive == certified


def hodge_level(pair: Pair, settings: Optional[Settings] = None) -> HodgeLevel:
    """Exact level for Cartier hypersurfaces, the dichotomy otherwise."""
    pair.require_nondegenerate()
    n = pair.dimension
    if pair.k == 1 and n >= 0 and is_cartier(pair)[0]:
        entries = hypersurface_middle_hodge(pair, settings).entries
        # the ambient (p,p) class has level 0
        value = max([0] + [abs(n - 2 * q) for q, h in enumerate(entries) if h > 0])
        return HodgeLevel(dimension=n, maximal=value == n, exact=True, value=value)
    maximal = h0n(pair, settings) > 0
    return HodgeLevel(
        dimension=n, maximal=maximal, exact=False, value=n if maximal else None
    )
