"""
Circuit Core - Results Store
Persist benchmark reports through the SQLAlchemy models
"""

import logging
from datetime import datetime, timezone

from sqlalchemy.orm import Session

from ..bench.harness import BenchmarkReport
from ..core.types import format_rational
from .models import BenchmarkResult, BenchmarkRun, SolverEvent

logger = logging.getLogger(__name__)


def record_benchmark(session: Session, report: BenchmarkReport) -> BenchmarkRun:
    """
    Store one benchmark report

    Args:
        session: SQLAlchemy session (committed on success, rolled back on failure)
        report: Report from run_benchmark

    Returns:
        BenchmarkRun: The stored run
    """
    summary = report.summary()
    run = BenchmarkRun(
        seed=report.suite.seed,
        suite=report.suite.model_dump(mode='json'),
        schema_version=summary['schema_version'],
        summary=summary,
        finished_at=datetime.now(timezone.utc),
    )
    for row in report.rows:
        run.results.append(BenchmarkResult(
            instance_index=row.index,
            instance_hash=row.instance_hash,
            generator=row.generator,
            algorithm=row.algorithm,
            throughput=str(format_rational(row.throughput)),
            oracle_throughput=None if row.oracle_throughput is None else str(format_rational(row.oracle_throughput)),
            ratio=None if row.ratio is None else float(row.ratio),
            wall_ms=row.wall_ms,
        ))
        if row.oracle_throughput is None and report.suite.oracle:
            run.events.append(SolverEvent(
                event_type='oracle_skipped',
                algorithm=row.algorithm,
                instance_index=row.index,
                event_data={'instance_hash': row.instance_hash},
            ))
        for entry in row.diagnostics:
            run.events.append(SolverEvent(
                event_type='lp_profile',
                algorithm=row.algorithm,
                instance_index=row.index,
                event_data={'instance_hash': row.instance_hash, **entry},
            ))

    try:
        session.add(run)
        session.commit()
    except Exception as e:
        session.rollback()
        logger.error(f"✗ Failed to store benchmark run: {e}", exc_info=True)
        raise

    logger.info(f"✓ Stored benchmark run {run.run_id} ({len(report.rows)} results)")
    return run
