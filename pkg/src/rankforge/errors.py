"""Exception hierarchy.

Every error raised by the library derives from :class:`RankforgeError`; the
CLI maps the three families below onto exit codes.
"""

from __future__ import annotations


class RankforgeError(Exception):
    """Base class for all library errors."""


class InputError(RankforgeError, ValueError):
    """Bad input data: unparsable text, out-of-range ids, invalid edits."""


class NumericalError(RankforgeError, ArithmeticError):
    """A numerical method failed to produce a trustworthy answer."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NodeRangeError(InputError):
    pass


class DimensionError(InputError):
    pass


class SizeError(InputError):
    pass


class InsufficientDataError(InputError):
    pass


class InvalidProbabilityError(InputError):
    pass


class InvalidRankError(InputError):
    pass


class LabelNotFoundError(InputError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class ScenarioError(InputError):
    """A scenario edit conflicts with the base graph."""

    def __init__(self, message: str, link: tuple[int, int] | None = None):
        self.link = link
        super().__init__(message)


class IncompatibleScenarioError(InputError):
    pass


class ConvergenceError(NumericalError):
    def __init__(self, message: str, residual: float, iterations: int):
        self.residual = residual
        self.iterations = iterations
        super().__init__(message)


class EigenSolverError(NumericalError):
    pass
