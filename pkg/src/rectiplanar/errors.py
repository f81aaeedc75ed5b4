from __future__ import annotations


class RectiplanarError(Exception):
    """Base class; ``reason`` is the one-line machine-readable code."""

    reason = "error"


class InputError(RectiplanarError):
    """Input is malformed or outside the supported graph class."""


class GraphFormatError(InputError, ValueError):
    reason = "parse error"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DegreeExceeded(InputError):
    reason = "degree exceeded"


class NotBiconnected(InputError):
    reason = "not biconnected"


class SimpleCycle(InputError):
    reason = "simple cycle"


class NotSeriesParallel(InputError):
    reason = "not series-parallel"


class NotIndependentParallel(InputError):
    reason = "not independent-parallel"


class CapExceeded(InputError):
    reason = "size cap exceeded"


class InternalInfeasible(RectiplanarError):
    """An invariant that the theory guarantees was violated."""

    reason = "internal infeasible"
