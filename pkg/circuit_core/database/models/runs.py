"""
Circuit Core - Benchmark Models
Benchmark runs, their per-instance results and solver events
"""

import uuid

from sqlalchemy import JSON, CheckConstraint, Column, DateTime, Float, ForeignKey, Integer, String, Uuid
from sqlalchemy.orm import relationship
from sqlalchemy.sql import func

from .base import Base


class BenchmarkRun(Base):
    """
    One `bench` invocation

    Columns:
        run_id:         Primary key, auto-generated UUID.
        started_at:     UTC timestamp when the run began (set by DB).
        finished_at:    UTC timestamp when the report was stored.
        seed:           Root seed of every random stream in the run.
        suite:          JSON copy of the suite configuration.
        schema_version: Report schema version.
        summary:        JSON summary (min/mean ratio per algorithm).

    Relationships:
        results: One-to-many -> BenchmarkResult.
        events:  One-to-many -> SolverEvent.
    """
    __tablename__ = 'benchmark_runs'

    run_id = Column(Uuid, primary_key=True, default=uuid.uuid4)
    started_at = Column(DateTime(timezone=True), nullable=False, server_default=func.now())
    finished_at = Column(DateTime(timezone=True))
    seed = Column(Integer, nullable=False)
    suite = Column(JSON)
    schema_version = Column(Integer, nullable=False)
    summary = Column(JSON)

    results = relationship("BenchmarkResult", back_populates="run", cascade="all, delete-orphan")
    events = relationship("SolverEvent", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<BenchmarkRun(id={self.run_id}, seed={self.seed}, results={len(self.results)})>"


class BenchmarkResult(Base):
    """
    One CSV row of a run

    Throughputs are stored as exact "p/q" strings; ratio is a float view
    and stays NULL when the oracle was out of budget.
    """
    __tablename__ = 'benchmark_results'

    result_id = Column(Uuid, primary_key=True, default=uuid.uuid4)
    run_id = Column(Uuid, ForeignKey('benchmark_runs.run_id', ondelete='CASCADE'), nullable=False)

    instance_index = Column(Integer, nullable=False)
    instance_hash = Column(String, nullable=False)
    generator = Column(String, nullable=False)
    algorithm = Column(String, nullable=False)

    throughput = Column(String, nullable=False)
    oracle_throughput = Column(String)
    ratio = Column(Float)
    wall_ms = Column(Float)

    run = relationship("BenchmarkRun", back_populates="results")

    __table_args__ = (
        CheckConstraint('ratio IS NULL OR ratio >= 0', name='valid_ratio'),
    )

    def __repr__(self):
        return f"<BenchmarkResult(index={self.instance_index}, algorithm='{self.algorithm}', f={self.throughput})>"


class SolverEvent(Base):
    """Solver diagnostics attached to a run (e.g. per-profile LP statistics)"""
    __tablename__ = 'solver_events'

    event_id = Column(Uuid, primary_key=True, default=uuid.uuid4)
    run_id = Column(Uuid, ForeignKey('benchmark_runs.run_id', ondelete='CASCADE'), nullable=False)
    time = Column(DateTime(timezone=True), nullable=False, server_default=func.now())

    event_type = Column(String, nullable=False)
    algorithm = Column(String)
    instance_index = Column(Integer)
    event_data = Column(JSON)

    run = relationship("BenchmarkRun", back_populates="events")

    def __repr__(self):
        return f"<SolverEvent(type='{self.event_type}', algorithm='{self.algorithm}')>"
