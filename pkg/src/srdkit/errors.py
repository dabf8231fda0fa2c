"""Exception types shared across the package."""


class SrdKitError(Exception):
    """Base class for all srdkit errors."""


class GraphParseError(SrdKitError):
    """Malformed graph or coloring text; message names the offending line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphStructureError(SrdKitError):
    """Input graph violates a structural precondition (connectivity etc.)."""


class ContractionError(SrdKitError):
    """Invalid vertex set passed to contract()."""


class ColoringError(SrdKitError):
    """A coloring does not fit the graph or a construction precondition fails."""


class NotBipartiteError(ColoringError):
    """Graph is not bipartite; carries an odd closed walk as witness."""

    def __init__(self, odd_cycle: list[int]):
        super().__init__(f"graph is not bipartite, odd cycle witness: {odd_cycle}")
        self.odd_cycle = odd_cycle


class BudgetExceededError(SrdKitError):
    """A bounded search ran out of its node budget before reaching a verdict."""


class ReductionError(SrdKitError):
    """Malformed CNF input for the reduction builder."""


class ExtractionError(SrdKitError):
    """A cut handed to extract_assignment is not one the reduction can decode."""
