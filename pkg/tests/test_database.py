"""
Tests for the results store (in-memory SQLite)
"""

import pytest

from circuit_core.bench import run_benchmark
from circuit_core.database import (
    BenchmarkResult,
    BenchmarkRun,
    SolverEvent,
    create_db_engine,
    create_db_session,
    create_tables,
    record_benchmark,
)
from circuit_core.formats import SuiteFile


@pytest.fixture
def session():
    engine = create_db_engine('sqlite://')
    assert create_tables(engine)
    session = create_db_session(engine)
    yield session
    session.close()


def _report(**fields):
    suite = SuiteFile(**{'generator': 'random', 'count': 2, 'windows': [4], 'seed': 5, **fields})
    return run_benchmark(suite)


class TestResultsStore:

    def test_record_run(self, session):
        report = _report(algorithms=['greedy', 'oracle'])
        run = record_benchmark(session, report)

        assert session.query(BenchmarkRun).count() == 1
        assert session.query(BenchmarkResult).count() == 4
        assert session.query(SolverEvent).count() == 0
        assert run.seed == 5
        assert run.summary['instance_count'] == 2
        assert run.suite['generator'] == 'random'
        assert run.finished_at is not None

    def test_exact_throughputs(self, session):
        report = _report(algorithms=['oracle'])
        record_benchmark(session, report)

        stored = session.query(BenchmarkResult).order_by(BenchmarkResult.instance_index).all()
        assert [result.instance_index for result in stored] == [0, 1]
        for result, row in zip(stored, report.rows):
            assert result.throughput == str(row.throughput)
            assert result.ratio == 1.0

    def test_skipped_oracle_is_an_event(self, session):
        record_benchmark(session, _report(windows=[13]))

        events = session.query(SolverEvent).all()
        assert len(events) == 2
        assert {event.event_type for event in events} == {'oracle_skipped'}
        assert all(result.ratio is None for result in session.query(BenchmarkResult))

    def test_oracle_disabled_records_no_events(self, session):
        record_benchmark(session, _report(oracle=False))
        assert session.query(SolverEvent).count() == 0

    def test_lp_profiles_are_events(self, session):
        report = _report(algorithms=['greedy', 'lp'], epsilon='1/2')
        record_benchmark(session, report)

        events = session.query(SolverEvent).filter_by(event_type='lp_profile').all()
        expected = sum(len(row.diagnostics) for row in report.rows)
        assert expected > 0
        assert len(events) == expected
        assert {event.algorithm for event in events} == {'lp'}
        assert all('lp_objective' in event.event_data and 'instance_hash' in event.event_data for event in events)
