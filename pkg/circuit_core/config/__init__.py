"""
Circuit Core - Configuration Module
Exposes configuration settings and helper functions
"""

from .config import (
    BENCHMARK,
    DATABASE,
    LOGGING,
    ONLINE,
    ORACLE_LIMITS,
    SOLVER,
    get_database_url,
    get_logging_config,
    get_oracle_limit,
    get_solver_config,
)

__all__ = [
    'BENCHMARK',
    'DATABASE',
    'LOGGING',
    'ONLINE',
    'ORACLE_LIMITS',
    'SOLVER',
    'get_database_url',
    'get_logging_config',
    'get_oracle_limit',
    'get_solver_config',
]
