"""
Circuit Core - Errors
Exception hierarchy shared by every subpackage
"""

from typing import Optional


class CircuitCoreError(Exception):
    """Base class for all circuit-core errors"""


class DimensionMismatchError(CircuitCoreError, ValueError):
    """Two operands (matrices, matchings, schedules) disagree on shape"""


class InvariantViolationError(CircuitCoreError, ValueError):
    """A value breaks a domain invariant (negative demand, shared endpoint, ...)"""


class InfeasibleScheduleError(InvariantViolationError):
    """A schedule uses more time than its window allows"""


class GuaranteeNotApplicableError(CircuitCoreError, ValueError):
    """The requested transformation has no guarantee for these parameters"""


class BudgetExceededError(CircuitCoreError):
    """An exhaustive search was asked to go beyond its configured size guard"""


class ParseError(CircuitCoreError, ValueError):
    """
    Raised when an instance, trace, schedule or suite file cannot be loaded

    Attributes:
        path: File that failed to parse (None for in-memory payloads)
        line: 1-based line of a JSON syntax error, if known
        field: Dotted location of the offending field, if known
    """

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None, field: Optional[str] = None):
        self.path = path
        self.line = line
        self.field = field

        where = []
        if path:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field '{field}'")

        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")
