"""
Circuit Core - Online Package
Traces, online algorithms and the adversarial lower-bound construction
"""

from .adversary import adversarial_trace, expected_policy_value, hold_policy, switch_policy
from .algorithms import OfflineHandle, online_blocked, online_no_delay, run_policy
from .types import IDLE, SEND, SWITCH, OnlineRun, StepAction, Trace

__all__ = [
    'IDLE',
    'SEND',
    'SWITCH',
    'OfflineHandle',
    'OnlineRun',
    'StepAction',
    'Trace',
    'adversarial_trace',
    'expected_policy_value',
    'hold_policy',
    'online_blocked',
    'online_no_delay',
    'run_policy',
    'switch_policy',
]
