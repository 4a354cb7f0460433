import logging
from math import prod
from typing import Optional

from sympy import prime

from config.settings import Settings
from construct.definitions import NamedCheck, PointFamilyReport
from errors import ContractViolation, PreconditionError
from models import Pair, PairKind
from pairs.checks import classify, is_cartier, is_regular, is_space_well_formed
from represent.oracle import find_positive_representation

logger = logging.getLogger(__name__)


def build_point_family(N: int, settings: Optional[Settings] = None) -> PointFamilyReport:
    """((P^N), (P/p_0, ..., P/p_N)) for the first N + 1 primes.

    Regular, Cartier and of general type, yet with no positive splitting:
    beta_l P_l == N P forces p_l | beta_l, so the cheapest candidate costs (N + 1) P.
    """
    if N < 1:
        raise PreconditionError(f"point family needs N >= 1, got {N}")
    primes = tuple(prime(j) for j in range(1, N + 2))
    product = prod(primes)
    pair = Pair.of([product] * N, [product // p for p in primes])

    regular, witness = is_regular(pair)
    cartier, cartier_witness = is_cartier(pair)
    kind = classify(pair).kind
    splitting = find_positive_representation(pair, settings)
    checks = [
        NamedCheck("regular", regular, {} if regular else {"witness": witness.to_dict()}),
        NamedCheck(
            "cartier", cartier, {} if cartier else {"witness": cartier_witness.to_dict()}
        ),
        NamedCheck(
            "general_type",
            kind is PairKind.GENERAL_TYPE,
            {"i_X": str(pair.index)},
        ),
        NamedCheck(
            "no_positive_representation",
            splitting is None,
            {} if splitting is None else {"representation": splitting.to_dict()},
        ),
        NamedCheck("N_equals_k", pair.N == pair.k, {"N": pair.N, "k": pair.k}),
    ]
    report = PointFamilyReport(
        N=N,
        primes=primes,
        pair=pair,
        checks=checks,
        forced_cost=(N + 1) * product,
        target=N * product,
        notes={
            "ambient_well_formed": str(is_space_well_formed(pair.weights)).lower(),
            "dimension": str(pair.dimension),
            "ambient": "every N of the weights share a prime, so the ambient space is not well formed",
        },
    )
    if not report.all_passed:
        failed = [check.name for check in checks if not check.passed]
        raise ContractViolation(f"point family N={N} failed {failed}", report.to_dict())
    logger.info(f"Point family N={N} verified: {pair}")
    return report
