"""Positive splittings sum(d) == sum(beta * a) for Cartier regular pairs.

The recursion follows the divisibility argument step by step and never
searches over the full target: unit weights and linear cones are peeled off,
then the pair is divided by a prime, and the remaining squarefree Fano
configurations are closed with explicit identities.
"""

import logging
from functools import lru_cache
from math import lcm, prod
from typing import List, Sequence, Tuple

from sympy import multiplicity, primefactors

from errors import PreconditionError, ProofPathExhausted
from models import Pair, PairKind, Representation
from pairs.checks import classify, is_cartier, is_regular
from represent.oracle import certify

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def prime_divisors(n: int) -> Tuple[int, ...]:
    return tuple(primefactors(n))


def _describe(degrees: Sequence[int], weights: Sequence[int]) -> str:
    return f"(({','.join(map(str, degrees))}),({','.join(map(str, weights))}))"


class CartierProver:
    """Runs the recursion and records every step it takes in `trace`.

    Degrees and weights are handled as plain lists in whatever order the
    caller supplies; returned coefficients are aligned with that order.
    """

    def __init__(self):
        self.trace: List[str] = []

    def _note(self, depth: int, degrees: Sequence[int], weights: Sequence[int], step: str):
        self.trace.append(f"{'  ' * depth}{_describe(degrees, weights)}: {step}")

    def _fail(self, message: str) -> ProofPathExhausted:
        self.trace.append(f"exhausted: {message}")
        logger.error(f"Cartier recursion exhausted: {message}")
        return ProofPathExhausted(message, self.trace)

    def solve(self, degrees: List[int], weights: List[int], depth: int = 0) -> List[int]:
        index = sum(degrees) - sum(weights)
        if index <= 0 or len(weights) - 1 <= len(degrees):
            raise self._fail(
                f"reached {_describe(degrees, weights)} with index {index}, "
                "outside the general type N > k range"
            )

        if 1 in weights:
            slot = weights.index(1)
            self._note(depth, degrees, weights, f"unit weight at slot {slot}")
            beta = [1] * len(weights)
            beta[slot] = index + 1
            return beta

        for u, degree in enumerate(degrees):
            if degree in weights:
                slot = weights.index(degree)
                self._note(depth, degrees, weights, f"linear cone on value {degree}")
                inner = self.solve(
                    degrees[:u] + degrees[u + 1 :],
                    weights[:slot] + weights[slot + 1 :],
                    depth + 1,
                )
                return inner[:slot] + [1] + inner[slot:]

        primes = sorted({p for a in weights for p in prime_divisors(a)})
        for p in primes:
            top = max(multiplicity(p, a) for a in weights)
            divided = {l for l, a in enumerate(weights) if multiplicity(p, a) == top}
            if any(d % p for d in degrees):
                raise self._fail(f"prime {p} divides a weight but not every degree")
            reduced_degrees = [d // p for d in degrees]
            reduced_weights = [a // p if l in divided else a for l, a in enumerate(weights)]
            reduced_index = sum(reduced_degrees) - sum(reduced_weights)

            if reduced_index == 0:
                self._note(depth, degrees, weights, f"divide by {p}: Calabi-Yau quotient")
                return [1 if l in divided else p for l in range(len(weights))]
            if reduced_index > 0:
                self._note(depth, degrees, weights, f"divide by {p}: general type quotient")
                inner = self.solve(reduced_degrees, reduced_weights, depth + 1)
                return [b if l in divided else p * b for l, b in enumerate(inner)]
            self._note(depth, degrees, weights, f"divide by {p}: Fano quotient")

        return self._squarefree_fano(degrees, weights, primes, depth)

    def _squarefree_fano(
        self, degrees: List[int], weights: List[int], primes: List[int], depth: int
    ) -> List[int]:
        radical = prod(primes)
        if lcm(*weights) != radical:
            raise self._fail("every quotient is Fano but a weight is not squarefree")
        odd = [p for p in primes if p > 2]
        if len(primes) < 2 or not odd:
            raise self._fail("weights share a single prime; the pair cannot be regular")

        multiples = [d // radical for d in degrees]
        if any(d % radical for d in degrees):
            raise self._fail("degrees are not multiples of the weight lcm")
        if any(m > 1 for m in multiples):
            self._note(depth, degrees, weights, f"normalise degrees to {radical}")
            inner = self.solve([radical] * len(degrees), weights, depth + 1)
            correction = sum((m - 1) * radical for m in multiples)
            if correction % weights[0]:
                raise self._fail("normalisation correction is not integral")
            inner[0] += correction // weights[0]
            return inner

        p = odd[0]
        c = radical // p
        k = len(degrees)
        p_slots = [l for l, a in enumerate(weights) if a == p]
        c_slots = [l for l, a in enumerate(weights) if a == c]
        f = len(c_slots)

        if f >= k:
            return self._power_shape(degrees, weights, p, c, p_slots, c_slots, depth)
        if f <= 1:
            raise self._fail(
                f"squarefree Fano configuration with {f} weight(s) equal to {c}"
            )
        if len(p_slots) < 2:
            raise self._fail(f"fewer than two weights equal to {p}")
        return self._split_shape(degrees, weights, p, c, p_slots, c_slots, depth)

    def _power_shape(self, degrees, weights, p, c, p_slots, c_slots, depth) -> List[int]:
        """Degrees (pc)^k against weights (c^k, p^r)."""
        k = len(degrees)
        r = len(p_slots)
        if len(c_slots) != k or r + k != len(weights):
            raise self._fail(f"expected weights ({c}^{k}, {p}^r), found {list(weights)}")

        beta = [0] * len(weights)
        if r == 2:
            self._note(depth, degrees, weights, f"two-degree identity with p={p}, c={c}")
            c_values = [1, p - 1] + [p] * (k - 2)
            p_values = [1, c - 1]
        elif r == 3 and c > 2:
            self._note(depth, degrees, weights, f"three copies of {p}, c={c}")
            c_values = [1, p - 1] + [p] * (k - 2)
            p_values = [1, 1, c - 2]
        elif r == 3:
            self._note(depth, degrees, weights, f"three copies of {p}, c=2")
            c_values = [1 + (k - 2) * p - k] + [1] * (k - 1)
            p_values = [2, 1, 1]
        elif r >= 4:
            self._note(depth, degrees, weights, "peel two degrees with the two-degree identity")
            removed = set(c_slots[:2] + p_slots[:2])
            keep = [l for l in range(len(weights)) if l not in removed]
            inner = self.solve(degrees[2:], [weights[l] for l in keep], depth + 1)
            for l, b in zip(keep, inner):
                beta[l] = b
            beta[c_slots[0]], beta[c_slots[1]] = 1, p - 1
            beta[p_slots[0]], beta[p_slots[1]] = 1, c - 1
            return beta
        else:
            raise self._fail(f"weight {p} occurs only {r} time(s)")

        for l, b in zip(c_slots, c_values):
            beta[l] = b
        for l, b in zip(p_slots, p_values):
            beta[l] = b
        return beta

    def _split_shape(self, degrees, weights, p, c, p_slots, c_slots, depth) -> List[int]:
        """Two copies each of p and c, plus weights dividing pc."""
        k = len(degrees)
        n = len(weights) - 1
        radical = p * c
        paired = [p_slots[0], p_slots[1], c_slots[0], c_slots[1]]
        rest = [l for l in range(len(weights)) if l not in paired]

        beta = [0] * len(weights)
        if n - k > 2:
            self._note(depth, degrees, weights, f"peel {p},{p},{c},{c} against two degrees")
            inner = self.solve(degrees[2:], [weights[l] for l in rest], depth + 1)
            for l, b in zip(rest, inner):
                beta[l] = b
        elif n == k + 1:
            self._note(depth, degrees, weights, "one spare weight per remaining degree")
            for l in rest:
                beta[l] = radical // weights[l]
        else:
            if k == 2:
                raise self._fail("k = 2 with N = k + 2 cannot be regular here")
            coprime = [l for l in rest if weights[l] % p]
            if len(coprime) < 2:
                raise self._fail(f"need two spare weights prime to {p}")
            self._note(depth, degrees, weights, "split the remaining degrees across spare weights")
            first, second = coprime[0], coprime[1]
            for l in rest:
                beta[l] = radical // weights[l]
            beta[first] = c // weights[first]
            beta[second] = (p - 1) * c // weights[second]

        beta[p_slots[0]], beta[p_slots[1]] = 1, c - 1
        beta[c_slots[0]], beta[c_slots[1]] = 1, p - 1
        return beta


def _require_cartier_general_type(pair: Pair) -> None:
    pair.require_nondegenerate()
    problems = {}
    cartier, cartier_witness = is_cartier(pair)
    if not cartier:
        problems["cartier"] = cartier_witness.to_dict()
    regular, regular_witness = is_regular(pair)
    if not regular:
        problems["regular"] = regular_witness.to_dict()
    if classify(pair).kind is not PairKind.GENERAL_TYPE:
        problems["index"] = str(pair.index)
    if pair.N <= pair.k:
        problems["N"] = pair.N
    if problems:
        raise PreconditionError(
            "constructive splitting needs a Cartier regular general type pair with N > k",
            {"pair": pair.to_dict(), "problems": problems},
        )


def constructive_representation_cartier(pair: Pair) -> Representation:
    _require_cartier_general_type(pair)
    prover = CartierProver()
    beta = prover.solve(list(pair.degrees), list(pair.weights))
    logger.debug(f"Cartier splitting for {pair} in {len(prover.trace)} steps")
    rep = Representation(
        tuple(beta), sum(pair.degrees), pair.weights, positive=True, method="cartier"
    )
    if not rep.is_valid():
        raise ProofPathExhausted(
            f"splitting for {pair} failed re-substitution: {beta}", prover.trace
        )
    return certify(rep)
