"""General type hypersurfaces and codimension two intersections with h^{0,n} = 0.

Weights are a_s = P / p_s (each taken twice) for a straddle chain p_0..p_m with
product P; the total degree is 2P, so i_X = 2P(1 - sum 1/p_s) is tiny compared
to every weight.
"""

import logging
from fractions import Fraction
from math import prod

from errors import ContractViolation, PreconditionError
from construct.definitions import CounterexampleReport, NamedCheck
from hodge.numbers import h0n
from models import Pair
from pairs.checks import (
    classify,
    is_cartier,
    is_regular,
    is_space_well_formed,
    regularity_violations,
)
from primes.reciprocals import straddle_chain

logger = logging.getLogger(__name__)


def chain_length_for(n: int) -> int:
    return n // 2 if n % 2 == 0 else (n + 1) // 2


def build_counterexample(n: int) -> CounterexampleReport:
    if n <= 2:
        raise PreconditionError(f"the construction needs dimension n > 2, got {n}")
    m = chain_length_for(n)
    chain = straddle_chain(m)
    primes = chain.below_one
    product = prod(primes)
    singles = [product // p for p in primes]
    weights = [a for a in singles for _ in range(2)]
    degrees = [2 * product] if n % 2 == 0 else [product, product]
    pair = Pair.of(degrees, weights)
    index = pair.index
    from_identity = 2 * product * chain.gap

    checks = []
    kind = classify(pair).kind.value
    checks.append(
        NamedCheck(
            "general_type",
            index > 0 and from_identity == index,
            {"i_X": str(index), "kind": kind, "identity_agrees": from_identity == index},
        )
    )

    cartier, cartier_witness = is_cartier(pair)
    checks.append(
        NamedCheck(
            "cartier",
            cartier,
            {} if cartier else {"witness": cartier_witness.to_dict()},
        )
    )

    checks.append(
        NamedCheck("ambient_well_formed", is_space_well_formed(pair.weights), {})
    )

    sections = h0n(pair)
    checks.append(NamedCheck("h0n_zero", sections == 0, {"h0n": str(sections)}))

    # i_X = a_s would need p_s | 2; only p_s = 3 comes close, checked as an inequality
    linear_hits = [str(a) for a in singles if a == index]
    three = [a for p, a in zip(primes, singles) if p == 3]
    linear_witness = {"matches": linear_hits}
    if three:
        linear_witness["i_X_minus_weight_for_3"] = str(index - three[0])
    checks.append(
        NamedCheck(
            "no_linear_monomial",
            not linear_hits and all(index - a < 0 for a in three),
            linear_witness,
        )
    )

    deficit = index - 2 * min(singles)
    checks.append(
        NamedCheck(
            "quadratic_deficit",
            deficit < 0,
            {"max_i_X_minus_a_s_minus_a_t": str(deficit)},
        )
    )

    regular, witness = is_regular(pair)
    checks.append(
        NamedCheck(
            "not_regular",
            not regular,
            {
                "witness": None if regular else witness.to_dict(),
                "violating_deltas": [str(v.delta) for v in regularity_violations(pair)],
            },
        )
    )

    report = CounterexampleReport(
        n=n,
        m=m,
        chain=chain,
        pair=pair,
        index=index,
        index_from_identity=from_identity,
        checks=checks,
        notes={
            "quasi_smooth": "holds for a general member of this family; not checked arithmetically",
            "well_formed_subvariety": "holds for a general member of this family; not checked arithmetically",
        },
    )
    if not report.all_passed:
        failed = [check.name for check in checks if not check.passed]
        logger.error(f"Counterexample for n={n} failed checks {failed}")
        raise ContractViolation(
            f"counterexample construction for n={n} failed {failed}", report.to_dict()
        )
    logger.info(f"Built counterexample for n={n}: {pair} with i_X={index}")
    return report
