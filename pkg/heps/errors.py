"""
Exception hierarchy shared by the solver, the lab and the CLI.
"""
from typing import Optional, Tuple


class HepsError(Exception):
    """Base class for all toolkit failures"""


class InvalidInputError(HepsError, ValueError):
    """A pre-condition on an argument does not hold"""


class SingularInputError(InvalidInputError):
    """The input sits on a singular point of the formula (e.g. tau = 1 for t(tau))"""


class InconsistentPairError(InvalidInputError):
    """A (d, c) pair that cannot come from the tangency system"""


class DomainTooSmallError(InvalidInputError):
    """The grid box does not contain the ball the measure is taken on"""


class UnknownCorpusError(InvalidInputError):
    def __init__(self, name: str, valid: Tuple[str, ...]):
        self.name = name
        self.valid = valid
        super().__init__(f"Unknown corpus function '{name}'. Valid names: {', '.join(valid)}")


class SolverError(HepsError):
    """Iteration budget exhausted; carries the last bracket"""

    def __init__(self, message: str, bracket: Optional[Tuple[float, float]] = None):
        self.bracket = bracket
        if bracket is not None:
            message = f"{message} (last bracket [{bracket[0]!r}, {bracket[1]!r}])"
        super().__init__(message)


class TooFewPointsError(HepsError):
    """Not enough thresholds above the statistical floor to fit a slope"""


class GridFormatError(HepsError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")
