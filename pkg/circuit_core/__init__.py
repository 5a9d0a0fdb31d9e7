"""
Circuit Core
Throughput scheduling for circuit switches with reconfiguration delay
"""

from .core import DemandMatrix, Instance, Matching, Schedule, evaluate_throughput
from .offline import greedy_schedule, hybrid_schedule, lp_schedule
from .online import Trace, online_blocked, online_no_delay
from .oracle import optimal_schedule_integer

__all__ = [
    'DemandMatrix',
    'Instance',
    'Matching',
    'Schedule',
    'Trace',
    'evaluate_throughput',
    'greedy_schedule',
    'hybrid_schedule',
    'lp_schedule',
    'online_blocked',
    'online_no_delay',
    'optimal_schedule_integer',
]

__version__ = '1.0.0'
