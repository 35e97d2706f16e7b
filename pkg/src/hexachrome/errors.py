"""Exception types shared across the package."""

from __future__ import annotations


class HexachromeError(Exception):
    """Base class for every error raised by hexachrome."""


class GraphFormatError(HexachromeError, ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the character offset (graph6) or line number (edge list)
    at which parsing failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class PreconditionError(HexachromeError, ValueError):
    """An operation was called with arguments outside its contract."""


class ClassViolation(HexachromeError):
    """The input graph is not in the class a coloring method requires."""

    def __init__(self, pattern: str, witness: tuple[int, ...] | None, message: str = ""):
        self.pattern = pattern
        self.witness = witness
        if not message:
            if witness is None:
                message = f"graph has no induced {pattern}"
            else:
                message = f"graph contains an induced {pattern} at {list(witness)}"
        super().__init__(message)


class HypothesisViolation(HexachromeError):
    """A structural property derived in a coloring proof failed to hold.

    On a verified class member this indicates a bug (either here or in the
    argument being executed); ``vertices`` carries the offending vertices.
    """

    def __init__(self, step: str, message: str, vertices=()):
        self.step = step
        self.vertices = tuple(sorted(vertices))
        super().__init__(f"[{step}] {message}: {list(self.vertices)}")


class OracleUndecided(HexachromeError):
    """The exact search ran out of its time budget without an answer."""

    def __init__(self, what: str, budget_ms: int):
        self.budget_ms = budget_ms
        super().__init__(f"{what} undecided within {budget_ms} ms budget")
