"""Exception types shared across the toolkit."""

from __future__ import annotations


class PebblingError(Exception):
    """Base class for all toolkit-specific errors."""


class SizeLimitError(PebblingError):
    """An input exceeds a configured size cap (vertices, pebbles, value)."""


class IllegalMoveError(PebblingError):
    """A pebbling move violates the rules (too few pebbles, non-adjacent pair)."""


class ReplayError(PebblingError):
    """A move sequence failed during replay.

    Attributes:
        step: zero-based index of the offending move.
    """

    def __init__(self, step: int, message: str):
        super().__init__(f"move {step}: {message}")
        self.step = step


class StructureError(PebblingError):
    """A graph transformation would produce an invalid structure
    (self-loop, parallel edge, or too few vertices)."""


class UnsupportedDegreeError(PebblingError):
    """Vertex smoothing was requested at a vertex of degree other than 1 or 2."""


class PreconditionError(PebblingError):
    """A distribution does not satisfy a surgery's pebble-count preconditions."""


class NotApplicableError(PebblingError):
    """A surgery's structural pattern is absent from the distribution."""


class BudgetError(PebblingError):
    """A search exhausted its configured budget before finishing.

    Attributes:
        lower_bound: best proven lower bound on the quantity being computed.
        upper_bound: best proven upper bound, or None if none is known.
        examined: how many candidates were examined before giving up.
    """

    def __init__(self, message: str, *, lower_bound: int | None = None,
                 upper_bound: int | None = None, examined: int = 0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.examined = examined
