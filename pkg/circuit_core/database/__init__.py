"""
Circuit Core - Results Database
Optional SQLAlchemy store for benchmark runs
"""

from .models import (
    Base,
    BenchmarkResult,
    BenchmarkRun,
    SolverEvent,
    create_db_engine,
    create_db_session,
    get_db_connection,
)
from .setup_database import create_tables
from .store import record_benchmark

__all__ = [
    'Base',
    'BenchmarkResult',
    'BenchmarkRun',
    'SolverEvent',
    'create_db_engine',
    'create_db_session',
    'create_tables',
    'get_db_connection',
    'record_benchmark',
]
