"""
Circuit Core - File Ingestion
Load and write instance, trace, schedule and suite files (JSON)
"""

import hashlib
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ..core.errors import CircuitCoreError, ParseError
from ..core.objective import evaluate_throughput
from ..core.types import Configuration, DemandMatrix, Instance, Matching, Schedule, format_rational
from ..online.types import Trace
from .schemas import InstanceFile, ScheduleFile, SuiteFile, TraceFile

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
Model = TypeVar('Model', bound=BaseModel)


# ============================================================================
# LOADING
# ============================================================================

def _load(path: PathLike, schema: Type[Model]) -> Model:
    """Read and validate one JSON file, turning every failure into ParseError"""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", path=str(path)) from e
    return load_text(text, schema, path=str(path))


def load_text(text: str, schema: Type[Model], path: Optional[str] = None) -> Model:
    """Validate a JSON document against a file schema"""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", path=path, line=e.lineno) from e

    try:
        return schema.model_validate(payload)
    except ValidationError as e:
        error = e.errors()[0]
        field = '.'.join(str(part) for part in error['loc']) or None
        raise ParseError(error['msg'], path=path, field=field) from e


def _matrix(rows, name: str, path: Optional[str]) -> DemandMatrix:
    try:
        return DemandMatrix(rows)
    except CircuitCoreError as e:
        raise ParseError(str(e), path=path, field=name) from e


def instance_from_model(model: InstanceFile, path: Optional[str] = None) -> Instance:
    return Instance(_matrix(model.demands, 'demands', path), model.delta, model.window)


def trace_from_model(model: TraceFile, path: Optional[str] = None) -> Trace:
    steps = tuple(_matrix(step, f"steps.{t}", path) for t, step in enumerate(model.steps))
    return Trace(model.senders, model.receivers, steps)


def parse_instance(path: PathLike) -> Instance:
    """
    Load an instance file

    Format: {"senders": n, "receivers": m, "demands": [[...]], "delta": d, "window": W}

    Raises:
        ParseError: unreadable file, malformed JSON, schema or invariant violation
    """
    inst = instance_from_model(_load(path, InstanceFile), str(path))
    logger.debug(f"loaded instance {path}: {inst.senders}x{inst.receivers}")
    return inst


def parse_trace(path: PathLike) -> Trace:
    """Load a trace file: {"senders": n, "receivers": m, "steps": [[[...]], ...]}"""
    trace = trace_from_model(_load(path, TraceFile), str(path))
    logger.debug(f"loaded trace {path}: T={trace.horizon}")
    return trace


def parse_schedule(path: PathLike) -> Schedule:
    """
    Load a schedule file: {"configs": [{"edges": [[i, j], ...], "alpha": a}, ...]}

    delta defaults to 0 and window to the time the schedule uses.
    """
    model = _load(path, ScheduleFile)
    try:
        configs = tuple(
            Configuration(Matching(tuple(tuple(edge) for edge in entry.edges)), entry.alpha)
            for entry in model.configs
        )
    except CircuitCoreError as e:
        raise ParseError(str(e), path=str(path), field='configs') from e

    delta = model.delta if model.delta is not None else Fraction(0)
    schedule = Schedule(configs, delta, Fraction(0))
    window = model.window if model.window is not None else schedule.time_used
    return schedule.with_configs(configs, window=window)


def parse_suite(path: PathLike) -> SuiteFile:
    """Load a benchmark suite configuration"""
    return _load(path, SuiteFile)


# ============================================================================
# WRITING
# ============================================================================

def _rows(matrix) -> list:
    return [[format_rational(value) for value in row] for row in matrix.values]


def instance_to_dict(inst: Instance) -> dict:
    return {
        'senders': inst.senders,
        'receivers': inst.receivers,
        'demands': _rows(inst.demand),
        'delta': format_rational(inst.delta),
        'window': format_rational(inst.window),
    }


def trace_to_dict(trace: Trace) -> dict:
    return {
        'senders': trace.senders,
        'receivers': trace.receivers,
        'steps': [_rows(step) for step in trace.steps],
    }


def schedule_to_dict(schedule: Schedule, senders: int, receivers: int,
                     demand: Optional[DemandMatrix] = None) -> dict:
    payload = {
        'senders': senders,
        'receivers': receivers,
        'delta': format_rational(schedule.delta),
        'window': format_rational(schedule.window),
        'configs': [
            {'edges': [list(edge) for edge in config.matching], 'alpha': format_rational(config.duration)}
            for config in schedule.configs
        ],
    }
    if demand is not None:
        payload['throughput'] = format_rational(evaluate_throughput(schedule, demand))
    return payload


def canonical_json(payload: dict) -> str:
    """Compact, key-sorted JSON (stable across runs)"""
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


def instance_hash(inst: Instance) -> str:
    """Short content hash of an instance"""
    return hashlib.sha256(canonical_json(instance_to_dict(inst)).encode()).hexdigest()[:16]


def _write(payload: dict, path: PathLike):
    Path(path).write_text(json.dumps(payload, indent=2) + '\n')


def write_instance(inst: Instance, path: PathLike):
    _write(instance_to_dict(inst), path)


def write_trace(trace: Trace, path: PathLike):
    _write(trace_to_dict(trace), path)


def write_schedule(schedule: Schedule, path: PathLike, senders: int, receivers: int,
                   demand: Optional[DemandMatrix] = None):
    """Write a schedule; with a demand matrix its throughput is included"""
    _write(schedule_to_dict(schedule, senders, receivers, demand), path)
