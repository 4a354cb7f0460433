"""JSON codec for pairs. Big integers travel as decimal strings."""

import json
from typing import Any, Dict, List, Union

from errors import PreconditionError
from models import Pair


def parse_integer(value: Any, field_name: str) -> int:
    if isinstance(value, bool):
        raise PreconditionError(f"{field_name}: booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value.strip())
    raise PreconditionError(
        f"{field_name}: expected an integer or a decimal string, got {value!r}",
        {"field": field_name},
    )


def _parse_list(payload: Dict[str, Any], key: str) -> List[int]:
    if key not in payload:
        raise PreconditionError(f"pair JSON is missing '{key}'", {"missing": key})
    values = payload[key]
    if not isinstance(values, list):
        raise PreconditionError(f"'{key}' must be a list", {"field": key})
    return [parse_integer(value, key) for value in values]


def pair_from_dict(payload: Dict[str, Any]) -> Pair:
    if not isinstance(payload, dict):
        raise PreconditionError("pair JSON must be an object")
    return Pair.of(_parse_list(payload, "degrees"), _parse_list(payload, "weights"))


def load_pair(source: Union[str, Dict[str, Any]]) -> Pair:
    if isinstance(source, dict):
        return pair_from_dict(source)
    try:
        payload = json.loads(source)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"pair is not valid JSON: {exc}") from exc
    return pair_from_dict(payload)


def dump_pair(pair: Pair) -> str:
    return json.dumps(pair.to_dict(), separators=(",", ":"))


def canonical_key(pair: Pair) -> str:
    """Stable sort key used to order records independently of scheduling.

    Orders by k, then degrees, then weights, so records of one degree tuple
    stay contiguous.
    """
    degrees = ",".join(f"{d:08d}" for d in pair.degrees)
    weights = ",".join(f"{a:08d}" for a in pair.weights)
    return f"{pair.k:02d}|{degrees}|{weights}"
