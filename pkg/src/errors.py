"""Exception hierarchy shared by every package."""

from typing import Any, Dict, List, Optional


class HodgeLevelsError(Exception):
    """Root of all domain errors raised by the library."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class PreconditionError(HodgeLevelsError, ValueError):
    """An operation was called outside its documented domain."""


class DegeneratePairError(PreconditionError):
    """A pair with an empty degree or weight list reached an operation that needs both."""


class ResourceBudgetExceeded(HodgeLevelsError, RuntimeError):
    """A table or search would grow past the configured budget."""


class BudgetExceeded(ResourceBudgetExceeded):
    """The exact minimisation ran out of nodes before closing the search."""

    def __init__(
        self,
        message: str,
        nodes: int,
        incumbent: Optional[Any] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        merged = dict(details or {})
        merged["nodes"] = nodes
        super().__init__(message, merged)
        self.nodes = nodes
        self.incumbent = incumbent


class PrecisionExhausted(HodgeLevelsError, RuntimeError):
    """Interval evaluation stayed indeterminate at the maximum precision."""


class ProofPathExhausted(HodgeLevelsError, RuntimeError):
    """A constructive proof reached a branch its argument rules out.

    The recursion trace is attached so the offending pair can be replayed.
    """

    def __init__(self, message: str, trace: List[str]):
        super().__init__(message, {"trace": list(trace)})
        self.trace = list(trace)


class ContractViolation(HodgeLevelsError, AssertionError):
    """A returned certificate failed re-verification."""
