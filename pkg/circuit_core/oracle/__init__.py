"""
Circuit Core - Oracle Package
Exhaustive ground-truth solvers for desk-scale instances
"""

from .exhaustive import optimal_online_no_delay, optimal_schedule_integer

__all__ = [
    'optimal_online_no_delay',
    'optimal_schedule_integer',
]
