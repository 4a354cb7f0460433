"""Exact sums of prime reciprocals just below 1.

delta(n) is the least positive value of 1 - (1/p_1 + ... + 1/p_n) over n
distinct primes. All arithmetic uses exact fractions.
"""

import logging
from fractions import Fraction
from math import floor
from typing import List, Optional, Sequence, Tuple

from sympy import isprime, nextprime

from config.settings import Settings, load_settings
from errors import BudgetExceeded, ContractViolation, PreconditionError
from primes.definitions import DeltaResult, PrimeChain

logger = logging.getLogger(__name__)


def _smallest_prime_above(bound: Fraction, floor_prime: int) -> int:
    """Smallest prime p > floor_prime with p > bound."""
    return nextprime(max(floor_prime, floor(bound)))


def _reciprocal_gap(primes: Sequence[int]) -> Fraction:
    return 1 - sum((Fraction(1, p) for p in primes), Fraction(0))


def _greedy_below_one(count: int) -> List[int]:
    """Greedily take the smallest larger prime that keeps the sum below 1."""
    chosen: List[int] = []
    gap = Fraction(1)
    while len(chosen) < count:
        p = _smallest_prime_above(1 / gap, chosen[-1] if chosen else 1)
        chosen.append(p)
        gap -= Fraction(1, p)
    return chosen


def straddle_chain(m: int) -> PrimeChain:
    """m + 1 primes summing (in reciprocal) to just below 1, plus one that passes 1."""
    if m < 1:
        raise PreconditionError(f"straddle chains need m >= 1, got {m}")
    below = _greedy_below_one(m + 1)
    partial = 1 - _reciprocal_gap(below)
    closing = nextprime(below[-1])
    chain = PrimeChain(primes=tuple(below) + (closing,), partial_sum=partial)

    ascending = all(a < b for a, b in zip(chain.primes, chain.primes[1:]))
    if not (
        ascending
        and all(isprime(p) for p in chain.primes)
        and partial < 1 < partial + Fraction(1, closing)
    ):
        raise ContractViolation(
            f"greedy chain for m={m} does not straddle 1", chain.to_dict()
        )
    return chain


class _DeltaSearch:
    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        self.nodes = 0
        incumbent = _greedy_below_one(n)
        self.best = _reciprocal_gap(incumbent)
        self.witness: Tuple[int, ...] = tuple(incumbent)

    def _offer(self, gap: Fraction, chosen: List[int]) -> None:
        if 0 < gap < self.best:
            self.best = gap
            self.witness = tuple(chosen)
            logger.debug(f"delta({self.n}) incumbent {gap} via {chosen}")

    def run(self, chosen: List[int], gap: Fraction) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"delta({self.n}) search exceeded {self.budget} nodes",
                nodes=self.nodes,
                incumbent=DeltaResult(self.n, self.best, self.witness, exact=False, nodes=self.nodes),
                details={"incumbent": f"{self.best.numerator}/{self.best.denominator}"},
            )
        remaining = self.n - len(chosen)
        last = chosen[-1] if chosen else 1
        p = _smallest_prime_above(1 / gap, last)

        if remaining == 1:
            # larger primes only leave a larger gap
            self._offer(gap - Fraction(1, p), chosen + [p])
            return

        while True:
            # the remaining reciprocals add up to less than remaining / p
            if Fraction(remaining, p) <= gap - self.best:
                return
            self.run(chosen + [p], gap - Fraction(1, p))
            p = nextprime(p)


def delta(
    n: int, budget: Optional[int] = None, settings: Optional[Settings] = None
) -> DeltaResult:
    if n < 1:
        raise PreconditionError(f"delta(n) needs n >= 1, got {n}")
    settings = settings or load_settings()
    search = _DeltaSearch(n, budget or settings.delta_node_budget)
    search.run([], Fraction(1))

    value, witness = search.best, search.witness
    if not (
        value > 0
        and len(set(witness)) == n
        and all(isprime(p) for p in witness)
        and value == _reciprocal_gap(witness)
    ):
        raise ContractViolation(
            f"delta({n}) witness failed re-verification",
            {"witness": [str(p) for p in witness]},
        )
    logger.info(f"delta({n}) = {value} after {search.nodes} nodes")
    return DeltaResult(n=n, value=value, witness=witness, exact=True, nodes=search.nodes)


def delta_upper_bound(n: int, settings: Optional[Settings] = None) -> DeltaResult:
    """A witness for delta(n) <= 1/2^n, extending the exact four-prime optimum.

    Each step appends the smallest prime above 1/g, which must lie below 2/g.
    """
    if n < 5:
        raise PreconditionError(f"delta_upper_bound needs n >= 5, got {n}")
    base = delta(4, settings=settings)
    witness = list(base.witness)
    gap = base.value
    for size in range(5, n + 1):
        p = _smallest_prime_above(1 / gap, witness[-1])
        if not p < 2 / gap:
            raise ContractViolation(
                f"no prime in (1/g, 2/g) while extending to {size} primes",
                {"gap": f"{gap.numerator}/{gap.denominator}", "prime": str(p)},
            )
        witness.append(p)
        gap -= Fraction(1, p)

    if not (0 < gap <= Fraction(1, 2**n) and gap == _reciprocal_gap(witness)):
        raise ContractViolation(
            f"extended witness does not certify delta({n}) <= 1/2^{n}",
            {"witness": [str(p) for p in witness]},
        )
    return DeltaResult(n=n, value=gap, witness=tuple(witness), exact=False)
