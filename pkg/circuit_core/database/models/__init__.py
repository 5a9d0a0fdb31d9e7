# Circuit Core - Database Models
# Imports all models so SQLAlchemy can resolve relationships correctly

from .base import Base

# Benchmark results
from .runs import BenchmarkResult, BenchmarkRun, SolverEvent

# Connection helpers
from .connection import create_db_engine, create_db_session, get_db_connection

__all__ = [
    'Base',
    # Benchmarks
    'BenchmarkResult',
    'BenchmarkRun',
    'SolverEvent',
    # Connection
    'create_db_engine',
    'create_db_session',
    'get_db_connection',
]
