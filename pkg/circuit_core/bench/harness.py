"""
Circuit Core - Benchmark Harness
Runs a suite of instances through the registered solvers and the oracle
"""

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from ..config import BENCHMARK
from ..coordinator import SolverCoordinator
from ..core.errors import BudgetExceededError, InvariantViolationError
from ..core.objective import evaluate_throughput, is_feasible
from ..core.streams import derive_seed
from ..core.types import Instance, format_rational
from ..formats import SuiteFile, instance_hash
from ..online.adversary import adversarial_trace
from ..oracle import optimal_schedule_integer
from .generators import exhaustive_instances, random_instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchmarkRow:
    """
    One (instance, algorithm) result

    Attributes:
        index: Instance index within the suite
        instance_hash: Content hash of the instance
        generator: Suite generator name
        algorithm: Solver name
        throughput: f of the solver's schedule
        oracle_throughput: Integer-duration optimum (None when out of budget)
        ratio: throughput / oracle_throughput (None when the oracle is absent)
        wall_ms: Solver wall time
        diagnostics: LP per-profile entries (empty for non-LP runs)
    """
    index: int
    instance_hash: str
    generator: str
    algorithm: str
    throughput: Fraction
    oracle_throughput: Optional[Fraction]
    ratio: Optional[Fraction]
    wall_ms: float
    diagnostics: Tuple[dict, ...] = ()

    def cells(self, timings: bool = False) -> List[str]:
        cells = [
            str(self.index),
            self.instance_hash,
            self.generator,
            self.algorithm,
            str(format_rational(self.throughput)),
            '' if self.oracle_throughput is None else str(format_rational(self.oracle_throughput)),
            '' if self.ratio is None else f"{float(self.ratio):.6f}",
        ]
        if timings:
            cells.append(f"{self.wall_ms:.3f}")
        return cells


@dataclass(frozen=True)
class BenchmarkReport:
    """Rows in instance order plus the suite that produced them"""
    suite: SuiteFile
    rows: Tuple[BenchmarkRow, ...]
    instance_count: int

    def summary(self) -> dict:
        """
        JSON-ready summary: ratios per algorithm

        Returns:
            dict with schema_version, seed, generator, instance_count and
            per-algorithm rows, min_ratio, mean_ratio and wall_ms
        """
        algorithms = {}
        for name in self.suite.algorithms:
            rows = [row for row in self.rows if row.algorithm == name]
            ratios = [row.ratio for row in rows if row.ratio is not None]
            algorithms[name] = {
                'rows': len(rows),
                'rated': len(ratios),
                'min_ratio': float(min(ratios)) if ratios else None,
                'mean_ratio': float(sum(ratios, Fraction(0)) / len(ratios)) if ratios else None,
                'wall_ms': sum(row.wall_ms for row in rows),
            }
        return {
            'schema_version': BENCHMARK['schema_version'],
            'seed': self.suite.seed,
            'generator': self.suite.generator,
            'instance_count': self.instance_count,
            'algorithms': algorithms,
        }

    def to_csv(self, timings: bool = False) -> str:
        """CSV text with the stable column order (header always present)"""
        header = list(BENCHMARK['csv_columns'])
        if timings:
            header.append(BENCHMARK['timing_column'])
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        for row in self.rows:
            writer.writerow(row.cells(timings))
        return buffer.getvalue()


def suite_instances(suite: SuiteFile) -> List[Instance]:
    """Every instance the suite describes, in a fixed order"""
    instances: List[Instance] = []
    for senders, receivers in suite.sizes:
        for delta in suite.deltas:
            for window in suite.windows:
                if suite.generator == 'random':
                    for _ in range(suite.count):
                        instances.append(random_instance(
                            senders, receivers, suite.max_demand, delta, window,
                            seed=suite.seed, index=len(instances),
                        ))
                elif suite.generator == 'exhaustive':
                    instances.extend(exhaustive_instances(senders, receivers, suite.max_demand, delta, window))
                else:
                    trace = adversarial_trace(senders, delta, int(window), seed=suite.seed)
                    instances.append(Instance(trace.aggregate(), delta, window))
    return instances


def _oracle_value(inst: Instance, k: Optional[int]) -> Optional[Fraction]:
    try:
        _, value = optimal_schedule_integer(inst, max_configs=k)
    except (BudgetExceededError, InvariantViolationError) as e:
        logger.debug(f"oracle skipped: {e}")
        return None
    return value


def _ratio(value: Fraction, oracle: Optional[Fraction]) -> Optional[Fraction]:
    if oracle is None:
        return None
    if oracle == 0:
        return Fraction(1)
    return value / oracle


def run_benchmark(suite: SuiteFile, workers: Optional[int] = None,
                  coordinator: Optional[SolverCoordinator] = None) -> BenchmarkReport:
    """
    Solve every suite instance with every requested algorithm

    Instances run in parallel worker threads; rows are merged in instance
    order, so the report does not depend on the worker count.

    Args:
        suite: Suite configuration
        workers: Thread count (default BENCHMARK['workers'])
        coordinator: Solver registry (default: a fresh SolverCoordinator)

    Returns:
        BenchmarkReport
    """
    workers = workers or BENCHMARK['workers']
    coordinator = coordinator or SolverCoordinator()
    instances = suite_instances(suite)
    logger.info(f"Benchmark: {len(instances)} instances x {len(suite.algorithms)} algorithms, {workers} workers")

    def evaluate(item: Tuple[int, Instance]) -> List[BenchmarkRow]:
        index, inst = item
        digest = instance_hash(inst)
        oracle = _oracle_value(inst, suite.k) if suite.oracle else None
        seed = derive_seed(suite.seed, 'rounding', index)
        rows = []
        for name in suite.algorithms:
            with coordinator.clock.measure(f"bench:{name}") as timing:
                schedule, diagnostics = coordinator.solve_report(name, inst, epsilon=suite.epsilon, k=suite.k, seed=seed)
            if not is_feasible(schedule):
                raise InvariantViolationError(f"{name} returned an infeasible schedule for instance {index}")
            value = evaluate_throughput(schedule, inst.demand)
            rows.append(BenchmarkRow(
                index=index,
                instance_hash=digest,
                generator=suite.generator,
                algorithm=name,
                throughput=value,
                oracle_throughput=oracle,
                ratio=_ratio(value, oracle),
                wall_ms=timing['seconds'] * 1000,
                diagnostics=diagnostics,
            ))
        return rows

    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(evaluate, enumerate(instances)))

    rows = tuple(row for batch in batches for row in batch)
    logger.info(f"✓ Benchmark finished: {len(rows)} rows")
    return BenchmarkReport(suite=suite, rows=rows, instance_count=len(instances))


def write_report(report: BenchmarkReport, csv_path, summary_path=None, timings: bool = False):
    """Write the CSV rows and, optionally, the JSON summary"""
    Path(csv_path).write_text(report.to_csv(timings))
    if summary_path is not None:
        Path(summary_path).write_text(json.dumps(report.summary(), indent=2, sort_keys=True) + '\n')
