import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
import typer

from cli.output import OutputFormat, domain_errors, emit, emit_table, to_json
from cli.reproduce import reproduce
from config.settings import load_settings
from config.storage import ensure_writable
from construct.counterexample import build_counterexample
from construct.definitions import ScanBounds, ScanRecord
from construct.points import build_point_family
from construct.scan import scan_theorem
from errors import PreconditionError
from hodge.numbers import (
    h0n,
    hodge_level,
    hodge_level_verdict,
    hypersurface_middle_hodge,
)
from models import Pair
from pairs.checks import check_pst_bound, check_report, classify
from pairs.serialization import load_pair
from primes.bounds import check_rs_inequality, sample_interval_points, verify_interval_lemma
from primes.reciprocals import delta, delta_upper_bound, straddle_chain
from primes.sieve import prime_pi
from represent.cartier import constructive_representation_cartier
from represent.codim2 import representation_codim_le2
from represent.oracle import find_positive_representation, verify_representation
from utils.log_setup import configure_logging

logger = logging.getLogger(__name__)


class Method(str, Enum):
    oracle = "oracle"
    cartier = "cartier"
    codim2 = "codim2"


def parse_pair(value: str) -> Pair:
    try:
        return load_pair(value)
    except PreconditionError as exc:
        raise typer.BadParameter(exc.message)


def parse_rational(value: str) -> Fraction:
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise typer.BadParameter(f"expected an integer or a fraction like 256/3, got {value!r}")


PAIR_OPTION = typer.Option(
    ...,
    "--pair",
    parser=parse_pair,
    help='Pair as JSON, e.g. \'{"degrees":[5],"weights":[1,1,1,1,1]}\'',
)

app = typer.Typer(
    help="Hodge levels of weighted complete intersections",
    no_args_is_help=True,
    add_completion=False,
)
primes_app = typer.Typer(
    help="Prime counting, prime-interval and reciprocal-sum checks",
    no_args_is_help=True,
)
app.add_typer(primes_app, name="primes")
app.command("reproduce")(reproduce)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
    log_file: Optional[Path] = typer.Option(None, help="Also write log records to this file"),
):
    """Results go to stdout as JSON; logs go to stderr."""
    configure_logging(verbose, log_file)


@app.command("classify")
def classify_command(pair: Pair = PAIR_OPTION):
    """Fano, Calabi-Yau or general type, with the index i_X."""
    emit(classify(pair).to_dict())


@app.command("check")
def check_command(pair: Pair = PAIR_OPTION):
    """Regularity, well-formedness, Cartier and linear cone checks with witnesses."""
    with domain_errors():
        payload = check_report(pair).to_dict()
        payload.update(classify(pair).to_dict())
        applies = (
            not pair.degenerate
            and payload["regular"]
            and pair.index <= 0
            and not payload["linear_cone"]
        )
        # the minimal-weight bound only speaks about Fano and Calabi-Yau pairs
        payload["pst_bound"] = check_pst_bound(pair) if applies else None
    emit(payload)


@app.command("represent")
def represent_command(
    pair: Pair = PAIR_OPTION,
    method: Method = typer.Option(Method.oracle, help="Search oracle or one of the constructive proofs"),
):
    """Positive representation sum(d) = sum(beta * a) with every beta >= 1."""
    with domain_errors():
        settings = load_settings()
        if method is Method.cartier:
            rep = constructive_representation_cartier(pair)
        elif method is Method.codim2:
            rep = representation_codim_le2(pair, settings)
        else:
            rep = find_positive_representation(pair, settings)
    emit(
        {
            "pair": pair.to_dict(),
            "method": method.value,
            "exists": rep is not None,
            "representation": None if rep is None else rep.to_dict(),
            "verified": rep is not None and verify_representation(rep),
        }
    )


@app.command("hodge")
def hodge_command(
    pair: Pair = PAIR_OPTION,
    h0n_flag: bool = typer.Option(False, "--h0n", help="Number of top-degree holomorphic forms"),
    middle: bool = typer.Option(False, "--middle", help="Primitive middle Hodge numbers (Cartier hypersurfaces)"),
    verdict: bool = typer.Option(False, "--verdict", help="Maximal Hodge level verdict and the predicting theorem"),
    level: bool = typer.Option(False, "--level", help="Hodge level value where it is computable"),
):
    """Hodge-theoretic invariants; without flags prints h0n and, when N > k, the verdict."""
    if not (h0n_flag or middle or verdict or level):
        h0n_flag = True
        verdict = not pair.degenerate and pair.N > pair.k

    payload: Dict[str, Any] = {}
    with domain_errors():
        settings = load_settings()
        if h0n_flag:
            payload["h0n"] = str(h0n(pair, settings))
        if middle:
            payload.update(hypersurface_middle_hodge(pair, settings).to_dict())
        if verdict:
            payload["verdict"] = hodge_level_verdict(pair, settings).to_dict()
        if level:
            payload["hodge_level"] = hodge_level(pair, settings).to_dict()
    emit(payload)


@primes_app.command("pi")
def pi_command(x: int = typer.Argument(..., help="Upper bound x >= 0")):
    """Number of primes <= x."""
    with domain_errors():
        count = prime_pi(x, load_settings())
    emit({"x": str(x), "pi": str(count)})


@primes_app.command("rs-check")
def rs_check_command(
    x: int = typer.Argument(..., help="Point x >= 17"),
    max_precision: Optional[int] = typer.Option(None, help="Precision ceiling in bits"),
):
    """x / ln x < pi(x) < 1.25506 x / ln x with outward-rounded interval arithmetic."""
    with domain_errors():
        settings = load_settings().override(rs_max_precision=max_precision)
        result = check_rs_inequality(x, settings)
    emit(result.to_dict())


@primes_app.command("interval-lemma")
def interval_lemma_command(
    n: int = typer.Option(..., "--n", help="Exponent n >= 5; x ranges over [2^n, ...)"),
    x: Optional[List[Fraction]] = typer.Option(
        None, "--x", parser=parse_rational, help="Point to check (repeatable); sampled when omitted"
    ),
    samples: int = typer.Option(50, help="Number of sampled points besides 2^n"),
    seed: int = typer.Option(0, help="Seed for the sampled points"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json or csv"),
):
    """At least n + 1 primes in (x, 2x), and in (2x/3, x) once n >= 7."""
    with domain_errors():
        points = list(x) if x else sample_interval_points(n, samples, seed=seed)
        report = verify_interval_lemma(n, points, load_settings())
    if fmt is OutputFormat.csv:
        emit_table([case.to_dict() for case in report.cases], fmt.value)
    else:
        emit(report.to_dict())
    if not report.holds:
        raise typer.Exit(code=1)


@primes_app.command("straddle")
def straddle_command(m: int = typer.Option(..., "--m", help="Chain parameter m >= 1")):
    """Greedy primes whose reciprocal sum sits just below 1, and the prime that crosses it."""
    with domain_errors():
        chain = straddle_chain(m)
    emit(chain.to_dict())


@primes_app.command("delta")
def delta_command(
    n: int = typer.Option(..., "--n", help="Number of distinct primes"),
    budget: Optional[int] = typer.Option(None, help="Node budget for the exact search"),
):
    """Exact least positive 1 - sum 1/p_i over n distinct primes."""
    with domain_errors():
        result = delta(n, budget=budget, settings=load_settings())
    emit(result.to_dict())


@primes_app.command("delta-bound")
def delta_bound_command(n: int = typer.Option(..., "--n", help="Number of primes, n >= 5")):
    """A witness that delta(n) <= 1/2^n."""
    with domain_errors():
        result = delta_upper_bound(n, load_settings())
    emit(result.to_dict())


@app.command("counterexample")
def counterexample_command(dim: int = typer.Option(..., "--dim", help="Dimension n >= 3")):
    """General type intersection with h0n = 0, built from a straddle chain."""
    with domain_errors():
        report = build_counterexample(dim)
    emit(report.to_dict())


@app.command("point-family")
def point_family_command(n: int = typer.Option(..., "--n", help="N >= 1")):
    """Regular Cartier general type pair with N = k and no positive representation."""
    with domain_errors():
        report = build_point_family(n, load_settings())
    emit(report.to_dict())


@app.command("scan")
def scan_command(
    max_k: int = typer.Option(..., help="Largest codimension"),
    max_n: int = typer.Option(..., help="Largest N (weights number N + 1)"),
    max_degree_sum: int = typer.Option(..., help="Largest sum of degrees"),
    max_weight: int = typer.Option(..., help="Largest weight"),
    out: Optional[Path] = typer.Option(None, help="Write records here instead of stdout"),
    jobs: Optional[int] = typer.Option(None, help="Worker processes"),
    include_linear_cones: bool = typer.Option(False, help="Also scan pairs with some d_u = a_l"),
    max_pairs: Optional[int] = typer.Option(None, help="Stop after this many pairs"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json (JSONL records) or csv"),
):
    """Check every regular pair within the bounds against the theorems.

    Records are streamed in canonical order; the summary is the last JSON document.
    Exits 1 when any violation was found.
    """
    with domain_errors():
        settings = load_settings().override(scan_jobs=jobs)
        bounds = ScanBounds(
            max_k=max_k,
            max_n=max_n,
            max_degree_sum=max_degree_sum,
            max_weight=max_weight,
            include_linear_cones=include_linear_cones,
            max_pairs=max_pairs,
        )
        if out is not None:
            out = ensure_writable(out)

        rows: List[Dict[str, Any]] = []
        handle = open(out, "w") if out is not None and fmt is OutputFormat.json else None

        def sink(record: ScanRecord) -> None:
            if fmt is OutputFormat.csv:
                rows.append(record.to_row())
                return
            line = json.dumps(record.to_dict(), separators=(",", ":"))
            if handle is not None:
                handle.write(line + "\n")
            else:
                typer.echo(line)

        try:
            summary = scan_theorem(bounds, settings=settings, sink=sink)
        finally:
            if handle is not None:
                handle.close()

    if fmt is OutputFormat.csv:
        table = pd.DataFrame(rows)
        if out is not None:
            table.to_csv(out, index=False)
        else:
            typer.echo(table.to_csv(index=False), nl=False)
    if out is not None:
        logger.info(f"Wrote {summary.total_pairs} records to {out}")
    typer.echo(to_json(summary.to_dict()))
    if summary.violation_count:
        raise typer.Exit(code=1)
