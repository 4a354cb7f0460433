"""Rendering of command results on stdout."""

import json
import logging
from contextlib import contextmanager
from enum import Enum
from typing import Any, Dict, Iterator, List

import pandas as pd
import typer

from errors import HodgeLevelsError

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"


def to_json(payload: Any, indent: int = 2) -> str:
    return json.dumps(payload, indent=indent, default=str)


def emit(payload: Any) -> None:
    typer.echo(to_json(payload))


def emit_table(rows: List[Dict[str, Any]], fmt: str) -> None:
    if fmt == "csv":
        typer.echo(pd.DataFrame(rows).to_csv(index=False), nl=False)
    else:
        emit(rows)


def fail(exc: HodgeLevelsError) -> None:
    logger.error(f"{type(exc).__name__}: {exc.message}")
    emit({"error": exc.to_dict()})
    raise typer.Exit(code=1)


@contextmanager
def domain_errors() -> Iterator[None]:
    """Turn a domain error raised inside a command into the JSON error object and exit 1."""
    try:
        yield
    except HodgeLevelsError as exc:
        fail(exc)
