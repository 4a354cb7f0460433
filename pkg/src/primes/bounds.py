"""Rigorous checks of prime-counting bounds and the prime-interval lemma.

Real-valued comparisons go through mpmath's interval context; an interval
comparison that cannot be decided at the current precision returns None and the
check is retried at twice the precision, up to the configured maximum.
"""

import logging
import random
from fractions import Fraction
from math import ceil
from typing import Callable, Iterable, List, Optional, Tuple, TypeVar, Union

from mpmath import iv
from mpmath.libmp import prec_to_dps, to_str

from config.settings import Settings, load_settings
from errors import PrecisionExhausted, PreconditionError
from primes.definitions import IntervalLemmaCase, IntervalLemmaReport, RSCheck
from primes.sieve import PrimeTable

logger = logging.getLogger(__name__)

RS_LOWER_VALID_FROM = 17
RS_UPPER_CONSTANT = "1.25506"

T = TypeVar("T")


def _decide(
    evaluate: Callable[[], Optional[T]],
    what: str,
    settings: Settings,
    max_precision: Optional[int] = None,
) -> Tuple[T, int]:
    """Run `evaluate` at growing interval precision until it returns a verdict."""
    precision = settings.rs_start_precision
    ceiling = max_precision or settings.rs_max_precision
    saved = iv.prec
    try:
        while precision <= ceiling:
            iv.prec = precision
            verdict = evaluate()
            if verdict is not None:
                return verdict, precision
            logger.warning(f"{what} indeterminate at {precision} bits, raising precision")
            precision *= 2
    finally:
        iv.prec = saved
    raise PrecisionExhausted(
        f"{what} stayed indeterminate up to {ceiling} bits",
        {"max_precision": ceiling},
    )


def _endpoints(value, precision: int) -> Tuple[str, str]:
    digits = prec_to_dps(precision)
    low, high = value._mpi_
    return to_str(low, digits), to_str(high, digits)


def check_rs_inequality(
    x: int,
    settings: Optional[Settings] = None,
    table: Optional[PrimeTable] = None,
    max_precision: Optional[int] = None,
) -> RSCheck:
    """x / ln x < pi(x) < 1.25506 x / ln x, decided with outward rounding."""
    if x < RS_LOWER_VALID_FROM:
        raise PreconditionError(
            f"the lower bound is only valid for x >= {RS_LOWER_VALID_FROM}",
            {"x": str(x)},
        )
    settings = settings or load_settings()
    if table is None or not table.covers(x):
        table = PrimeTable(x, settings)
    count = table.pi(x)
    bounds = {}

    def evaluate() -> Optional[bool]:
        value = iv.mpf(x)
        base = value / iv.log(value)
        lower, upper = base, iv.mpf(RS_UPPER_CONSTANT) * base
        bounds["lower"], bounds["upper"] = lower, upper
        below = lower < count
        above = count < upper
        if below is None or above is None:
            return None
        return bool(below and above)

    holds, precision = _decide(evaluate, f"bound check at x={x}", settings, max_precision)
    return RSCheck(
        x=x,
        pi=count,
        lower=_endpoints(bounds["lower"], precision),
        upper=_endpoints(bounds["upper"], precision),
        holds=holds,
        precision=precision,
    )


def rs_sample_points(limit: int = 10**6, dense_until: int = 10**4, steps: int = 200) -> List[int]:
    """Every integer from 17 to `dense_until`, then geometric steps up to `limit`."""
    points = list(range(RS_LOWER_VALID_FROM, min(dense_until, limit) + 1))
    if limit > dense_until:
        ratio = (limit / dense_until) ** (1 / steps)
        value = float(dense_until)
        for _ in range(steps):
            value *= ratio
            points.append(min(int(round(value)), limit))
        points = sorted(set(points))
    return points


def check_lemma_auxiliary(
    t: Union[int, Fraction], settings: Optional[Settings] = None
) -> bool:
    """Whether H(t) > 1 for the auxiliary function of the prime-interval lemma."""
    if t <= 0:
        raise PreconditionError(f"t must be positive, got {t}")
    settings = settings or load_settings()
    numerator, denominator = (t.numerator, t.denominator) if isinstance(t, Fraction) else (t, 1)

    def evaluate() -> Optional[bool]:
        point = iv.mpf(numerator) / denominator
        ln2 = iv.log(2)
        ln32 = iv.log(iv.mpf(3) / 2)
        alpha = iv.mpf(RS_UPPER_CONSTANT)
        lead = iv.power(2, point) / (ln2 * point * (point + 1))
        ratio = ((1 - 2 * alpha / 3) * point * ln2 - ln32) / (point * ln2 - ln32)
        return (lead * ratio) > 1

    verdict, _ = _decide(evaluate, f"auxiliary function at t={t}", settings)
    return bool(verdict)


def verify_interval_lemma(
    n: int,
    x_values: Iterable[Union[int, Fraction]],
    settings: Optional[Settings] = None,
    table: Optional[PrimeTable] = None,
) -> IntervalLemmaReport:
    """Count primes in (x, 2x) (n >= 5) and in (2x/3, x) (n >= 7) for each x >= 2^n."""
    if n < 5:
        raise PreconditionError(f"the interval counts are claimed for n >= 5, got {n}")
    xs = [Fraction(x) for x in x_values]
    low = [str(x) for x in xs if x < 2**n]
    if low:
        raise PreconditionError(
            f"every x must be at least 2^{n}", {"below_range": low}
        )
    settings = settings or load_settings()
    top = ceil(2 * max(xs)) if xs else 2
    if table is None or not table.covers(top):
        table = PrimeTable(top, settings)

    report = IntervalLemmaReport(n=n)
    for x in xs:
        upper = table.count_open(x, 2 * x)
        lower = table.count_open(Fraction(2, 3) * x, x) if n >= 7 else None
        case = IntervalLemmaCase(x=x, upper_count=upper, lower_count=lower, required=n + 1)
        if not case.holds:
            logger.error(f"Interval lemma fails for n={n} at x={x}")
        report.cases.append(case)
    return report


def sample_interval_points(n: int, samples: int, upper: int = 10**6, seed: int = 0) -> List[int]:
    """2^n followed by `samples` seeded random integers in [2^n, upper]."""
    start = 2**n
    if upper < start:
        raise PreconditionError(
            f"sampling range [{start}, {upper}] is empty", {"n": n, "upper": upper}
        )
    rng = random.Random(seed)
    return [start] + sorted(rng.randint(start, upper) for _ in range(samples))
