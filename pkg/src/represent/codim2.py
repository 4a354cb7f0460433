"""Positive splittings for regular general type pairs with one or two degrees.

A single degree reduces to the Cartier recursion. Two degrees follow their own
recursion: unit weights, linear cones, the pairwise coprime split and division
by a prime shared by two weights, closed by two explicit Fano shapes.
"""

import logging
from collections import Counter
from math import gcd
from typing import Dict, List, Optional, Sequence

from config.settings import Settings, load_settings
from errors import PreconditionError, ProofPathExhausted
from models import Pair, PairKind, Representation
from pairs.checks import classify, is_regular
from represent.cartier import (
    CartierProver,
    constructive_representation_cartier,
    prime_divisors,
)
from represent.coins import two_coin_representation
from represent.oracle import certify, find_nonneg_representation

logger = logging.getLogger(__name__)


def _aligned(rep: Representation, weights: Sequence[int]) -> List[int]:
    """Map coefficients given for sorted weights back onto `weights`' order."""
    order = sorted(range(len(weights)), key=lambda l: weights[l])
    coefficients = [0] * len(weights)
    for position, slot in enumerate(order):
        coefficients[slot] = rep.coefficients[position]
    return coefficients


class CodimTwoProver(CartierProver):
    def __init__(self, settings: Settings):
        super().__init__()
        self.settings = settings

    def _certificate(self, target: int, weights: List[int]) -> Optional[List[int]]:
        rep = find_nonneg_representation(target, weights, self.settings)
        return None if rep is None else _aligned(rep, weights)

    def solve_pair(self, d1: int, d2: int, weights: List[int], depth: int = 0) -> List[int]:
        degrees = [d1, d2]
        index = d1 + d2 - sum(weights)
        if index <= 0:
            raise self._fail(f"reached {degrees} against {weights} with index {index}")

        if 1 in weights:
            slot = weights.index(1)
            self._note(depth, degrees, weights, f"unit weight at slot {slot}")
            beta = [1] * len(weights)
            beta[slot] = index + 1
            return beta

        for degree, other in ((d1, d2), (d2, d1)):
            if degree in weights:
                slot = weights.index(degree)
                self._note(depth, degrees, weights, f"linear cone on value {degree}")
                inner = self.solve([other], weights[:slot] + weights[slot + 1 :], depth + 1)
                return inner[:slot] + [1] + inner[slot:]

        shared = self._shared_prime(weights)
        if shared is None:
            return self._coprime_split(d1, d2, weights, depth)
        return self._divide(d1, d2, weights, shared, depth)

    @staticmethod
    def _shared_prime(weights: Sequence[int]) -> Optional[int]:
        best = None
        for l in range(len(weights)):
            for m in range(l + 1, len(weights)):
                common = gcd(weights[l], weights[m])
                if common > 1:
                    candidate = prime_divisors(common)[0]
                    best = candidate if best is None else min(best, candidate)
        return best

    def _coprime_split(self, d1: int, d2: int, weights: List[int], depth: int) -> List[int]:
        degrees = [d1, d2]
        for degree, other in ((d1, d2), (d2, d1)):
            if all(degree % a == 0 for a in weights):
                self._note(depth, degrees, weights, f"every weight divides {degree}")
                main = self.solve([degree], weights, depth + 1)
                extra = self._certificate(other, weights)
                if extra is None:
                    raise self._fail(f"{other} has no certificate by the weights {weights}")
                return [b + g for b, g in zip(main, extra)]

        first = [l for l, a in enumerate(weights) if d1 % a == 0]
        second = [l for l in range(len(weights)) if l not in first]
        if any(d2 % weights[l] for l in second):
            raise self._fail(f"a weight divides neither {d1} nor {d2}")

        groups = [(d1, first, d2, second), (d2, second, d1, first)]
        small = next((g for g in groups if len(g[1]) <= 2), None)
        beta = [0] * len(weights)

        if small is None:
            self._note(depth, degrees, weights, "split weights between the two degrees")
            for degree, slots in ((d1, first), (d2, second)):
                inner = self.solve([degree], [weights[l] for l in slots], depth + 1)
                for l, b in zip(slots, inner):
                    beta[l] = b
            return beta

        degree, slots, other, others = small
        if len(slots) == 1:
            (x,) = slots
            self._note(depth, degrees, weights, f"single weight {weights[x]} divides {degree}")
            beta[x] = degree // weights[x]
            inner = self.solve([other], [weights[l] for l in others], depth + 1)
            for l, b in zip(others, inner):
                beta[l] = b
            return beta

        x0, x1 = slots
        a0, a1 = weights[x0], weights[x1]
        leftover = (degree - a0 - a1) + (other - sum(weights[l] for l in others))
        self._note(depth, degrees, weights, f"two coins {a0},{a1} for {leftover}")
        coins = two_coin_representation(leftover, a0, a1)
        if coins is None:
            raise self._fail(f"{leftover} is not a combination of {a0} and {a1}")
        for l in others:
            beta[l] = 1
        beta[x0], beta[x1] = coins[0] + 1, coins[1] + 1
        return beta

    def _divide(self, d1: int, d2: int, weights: List[int], p: int, depth: int) -> List[int]:
        degrees = [d1, d2]
        slots = [l for l, a in enumerate(weights) if a % p == 0]
        if len(slots) != 2 or d1 % p or d2 % p:
            raise self._fail(f"prime {p} does not divide exactly two weights and both degrees")
        l, m = slots
        reduced = [a // p if s in slots else a for s, a in enumerate(weights)]
        r1, r2 = d1 // p, d2 // p
        reduced_index = r1 + r2 - sum(reduced)

        if reduced_index == 0:
            self._note(depth, degrees, weights, f"divide by {p}: Calabi-Yau quotient")
            return [1 if s in slots else p for s in range(len(weights))]
        if reduced_index > 0:
            self._note(depth, degrees, weights, f"divide by {p}: general type quotient")
            inner = self.solve_pair(r1, r2, reduced, depth + 1)
            return [b if s in slots else p * b for s, b in enumerate(inner)]

        self._note(depth, degrees, weights, f"divide by {p}: Fano quotient")
        if weights[l] != p or weights[m] != p:
            raise self._fail(f"Fano quotient with weights {weights[l]}, {weights[m]} not equal to {p}")
        rest = [s for s in range(len(weights)) if s not in slots]
        rest_values = Counter(weights[s] for s in rest)

        if len(weights) == 4 and rest_values == Counter([r1, r2]):
            alpha, gamma = r1, r2
            s = next(s for s in rest if weights[s] == alpha)
            t = next(u for u in rest if u != s)
            leftover = (p * alpha - alpha - p) + (p * gamma - gamma - p)
            coins = two_coin_representation(leftover, alpha, p)
            if coins is None:
                raise self._fail(f"{leftover} is not a combination of {alpha} and {p}")
            self._note(depth, degrees, weights, f"shape (({p}a,{p}g),(a,g,{p},{p}))")
            beta = [0] * len(weights)
            beta[s], beta[t] = coins[0] + 1, 1
            beta[l], beta[m] = coins[1] + 1, 1
            return beta

        if len(weights) == 5 and p % 2 == 1 and p > 3:
            for six, alpha in ((r1, r2), (r2, r1)):
                if six != 6 or rest_values != Counter([alpha, 2, 3]):
                    continue
                self._note(depth, degrees, weights, f"shape ((a{p},6*{p}),(a,2,3,{p},{p}))")
                beta = [0] * len(weights)
                remaining = list(rest)
                for value, coefficient in ((alpha, p), (2, (p - 3) // 2), (3, 1)):
                    slot = next(s for s in remaining if weights[s] == value)
                    remaining.remove(slot)
                    beta[slot] = coefficient
                beta[l], beta[m] = 1, 4
                return beta

        raise self._fail(f"Fano quotient after dividing by {p} matches no closing shape")


def _require_codim_le2(pair: Pair) -> None:
    pair.require_nondegenerate()
    problems: Dict[str, object] = {}
    if pair.k not in (1, 2):
        problems["k"] = pair.k
    regular, witness = is_regular(pair)
    if not regular:
        problems["regular"] = witness.to_dict()
    if classify(pair).kind is not PairKind.GENERAL_TYPE:
        problems["index"] = str(pair.index)
    if pair.N <= pair.k:
        problems["N"] = pair.N
    if problems:
        raise PreconditionError(
            "codimension <= 2 splitting needs a regular general type pair with N > k",
            {"pair": pair.to_dict(), "problems": problems},
        )


def representation_codim_le2(
    pair: Pair, settings: Optional[Settings] = None
) -> Representation:
    _require_codim_le2(pair)
    settings = settings or load_settings()
    if pair.k == 1:
        return constructive_representation_cartier(pair)

    missing = [
        str(d)
        for d in pair.degrees
        if find_nonneg_representation(d, pair.weights, settings) is None
    ]
    if missing:
        raise PreconditionError(
            "degrees without a nonnegative certificate by the weights",
            {"pair": pair.to_dict(), "missing_certificate": missing},
        )

    prover = CodimTwoProver(settings)
    d1, d2 = pair.degrees
    beta = prover.solve_pair(d1, d2, list(pair.weights))
    logger.debug(f"Codimension two splitting for {pair} in {len(prover.trace)} steps")
    rep = Representation(
        tuple(beta), sum(pair.degrees), pair.weights, positive=True, method="codim2"
    )
    if not rep.is_valid():
        raise ProofPathExhausted(
            f"splitting for {pair} failed re-substitution: {beta}", prover.trace
        )
    return certify(rep)
