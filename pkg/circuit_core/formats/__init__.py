"""
Circuit Core - File Formats Package
JSON schemas and the parse/write functions built on them
"""

from .files import (
    canonical_json,
    instance_from_model,
    instance_hash,
    instance_to_dict,
    load_text,
    parse_instance,
    parse_schedule,
    parse_suite,
    parse_trace,
    schedule_to_dict,
    trace_from_model,
    trace_to_dict,
    write_instance,
    write_schedule,
    write_trace,
)
from .schemas import ConfigurationEntry, InstanceFile, ScheduleFile, SuiteFile, TraceFile

__all__ = [
    # Schemas
    'ConfigurationEntry',
    'InstanceFile',
    'ScheduleFile',
    'SuiteFile',
    'TraceFile',
    # Loading
    'instance_from_model',
    'load_text',
    'parse_instance',
    'parse_schedule',
    'parse_suite',
    'parse_trace',
    'trace_from_model',
    # Writing
    'canonical_json',
    'instance_hash',
    'instance_to_dict',
    'schedule_to_dict',
    'trace_to_dict',
    'write_instance',
    'write_schedule',
    'write_trace',
]
