"""Runtime budgets and limits.

Defaults can be overridden through the environment (or a `.env` file picked up
by python-dotenv). Nothing here is required to be set.
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from typing import Any, Dict

from dotenv import load_dotenv

from errors import PreconditionError

logger = logging.getLogger(__name__)

ENV_PREFIX = "HODGE_LEVELS_"


@dataclass(frozen=True, slots=True)
class Settings:
    # cells in a residue / value DP table
    memory_budget: int = 5_000_000
    # largest sieve bound a single call may allocate
    sieve_limit_budget: int = 50_000_000
    # nodes visited by the delta(n) branch-and-bound
    delta_node_budget: int = 200_000
    # bits of working precision for interval checks
    rs_start_precision: int = 53
    rs_max_precision: int = 1024
    scan_jobs: int = 1

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not isinstance(value, int) or value <= 0:
                raise PreconditionError(
                    f"setting {item.name} must be a positive integer, got {value!r}",
                    {"setting": item.name},
                )
        if self.rs_max_precision < self.rs_start_precision:
            raise PreconditionError(
                "rs_max_precision must not be below rs_start_precision",
                {
                    "rs_start_precision": self.rs_start_precision,
                    "rs_max_precision": self.rs_max_precision,
                },
            )

    def override(self, **changes: Any) -> "Settings":
        """Return a copy with the non-None entries of `changes` applied."""
        applied = {name: value for name, value in changes.items() if value is not None}
        return replace(self, **applied) if applied else self

    def to_dict(self) -> Dict[str, int]:
        return {item.name: getattr(self, item.name) for item in fields(self)}


def _read_env_overrides() -> Dict[str, int]:
    overrides: Dict[str, int] = {}
    for item in fields(Settings):
        raw = os.environ.get(ENV_PREFIX + item.name.upper())
        if raw is None or not raw.strip():
            continue
        try:
            overrides[item.name] = int(raw)
        except ValueError:
            raise PreconditionError(
                f"{ENV_PREFIX}{item.name.upper()} must be an integer, got {raw!r}",
                {"setting": item.name},
            )
    return overrides


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """Defaults, then `.env`, then the process environment."""
    load_dotenv()
    overrides = _read_env_overrides()
    if overrides:
        logger.debug(f"Settings overridden from environment: {overrides}")
    return Settings(**overrides)
