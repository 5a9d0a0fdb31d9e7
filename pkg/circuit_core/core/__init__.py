"""
Circuit Core - Problem Model Package
Exposes the core types, the throughput objective and shared helpers
"""

from .constants import (
    CERTIFICATE_ONE_MINUS_INV_E,
    GREEDY_THRESHOLD,
    ONE_MINUS_INV_E_LOWER,
    ONE_MINUS_INV_E_UPPER,
)
from .errors import (
    BudgetExceededError,
    CircuitCoreError,
    DimensionMismatchError,
    GuaranteeNotApplicableError,
    InfeasibleScheduleError,
    InvariantViolationError,
    ParseError,
)
from .objective import (
    evaluate_throughput,
    integral_schedule,
    is_feasible,
    residual,
    schedule_load,
    shrink_schedule,
)
from .streams import STREAMS, derive_seed, make_rng
from .types import (
    Configuration,
    DemandMatrix,
    Edge,
    Instance,
    Matching,
    RationalMatrix,
    Schedule,
    format_rational,
    to_nonnegative,
    to_rational,
)

__all__ = [
    # Types
    'Configuration',
    'DemandMatrix',
    'Edge',
    'Instance',
    'Matching',
    'RationalMatrix',
    'Schedule',
    'format_rational',
    'to_nonnegative',
    'to_rational',
    # Objective
    'evaluate_throughput',
    'integral_schedule',
    'is_feasible',
    'residual',
    'schedule_load',
    'shrink_schedule',
    # Constants
    'CERTIFICATE_ONE_MINUS_INV_E',
    'GREEDY_THRESHOLD',
    'ONE_MINUS_INV_E_LOWER',
    'ONE_MINUS_INV_E_UPPER',
    # Random streams
    'STREAMS',
    'derive_seed',
    'make_rng',
    # Errors
    'BudgetExceededError',
    'CircuitCoreError',
    'DimensionMismatchError',
    'GuaranteeNotApplicableError',
    'InfeasibleScheduleError',
    'InvariantViolationError',
    'ParseError',
]
