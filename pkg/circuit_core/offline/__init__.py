"""
Circuit Core - Offline Scheduling Package
Greedy, configuration-LP and hybrid schedulers for a known demand matrix
"""

from .greedy import GreedyChoice, best_configuration, greedy_schedule
from .hybrid import hybrid_branch, hybrid_report, hybrid_schedule
from .lp import (
    DualPrices,
    DurationProfile,
    FractionalColumn,
    FractionalSolution,
    LpReport,
    default_slot_count,
    enumerate_duration_profiles,
    expected_capped_sum,
    expected_rounded_throughput,
    lp_schedule,
    lp_schedule_report,
    maximal_profiles,
    price_matching,
    round_solution,
    solve_configuration_lp,
)
from .simplex import SimplexTableau, UnboundedProgramError, solve_lp

__all__ = [
    # Greedy
    'GreedyChoice',
    'best_configuration',
    'greedy_schedule',
    # Configuration LP
    'DualPrices',
    'DurationProfile',
    'FractionalColumn',
    'FractionalSolution',
    'LpReport',
    'default_slot_count',
    'enumerate_duration_profiles',
    'expected_capped_sum',
    'expected_rounded_throughput',
    'lp_schedule',
    'lp_schedule_report',
    'maximal_profiles',
    'price_matching',
    'round_solution',
    'solve_configuration_lp',
    # Hybrid
    'hybrid_branch',
    'hybrid_report',
    'hybrid_schedule',
    # Simplex
    'SimplexTableau',
    'UnboundedProgramError',
    'solve_lp',
]
