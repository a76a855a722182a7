"""Exception types shared across the library."""


class DegcorrError(Exception):
    """Base class for all library errors."""


class EdgeListFormatError(DegcorrError):
    """Raised when an edge-list line cannot be parsed; carries the line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyGraphError(DegcorrError):
    """Measure requested on a graph with no edges."""


class DegenerateSizeError(DegcorrError):
    """Measure undefined because the graph has too few edges (|E| <= 1)."""


class ZeroVarianceError(DegcorrError):
    """Correlation undefined: one side of the edge series has zero variance.

    This is an error rather than NaN because the measure has no meaningful
    value when all source (or all target) degrees seen along edges coincide.
    """


class UnbalancedStubsError(DegcorrError):
    """Configuration model input with sum(out) != sum(in)."""


class BalanceFailedError(DegcorrError):
    """Could not resample an i.i.d. degree sequence into balance within budget."""

    def __init__(self, attempts: int):
        super().__init__(f"no balanced sequence found in {attempts} attempts")
        self.attempts = attempts
