"""
Circuit Core - Benchmark Package
Deterministic generators and the benchmark harness
"""

from .generators import (
    exhaustive_instances,
    exhaustive_unit_traces,
    random_instance,
    random_trace,
    random_unit_trace,
)
from .harness import BenchmarkReport, BenchmarkRow, run_benchmark, suite_instances, write_report

__all__ = [
    # Generators
    'exhaustive_instances',
    'exhaustive_unit_traces',
    'random_instance',
    'random_trace',
    'random_unit_trace',
    # Harness
    'BenchmarkReport',
    'BenchmarkRow',
    'run_benchmark',
    'suite_instances',
    'write_report',
]
