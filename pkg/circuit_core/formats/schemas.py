"""
Circuit Core - File Schemas
Pydantic models for instance, trace, schedule and benchmark suite files

Numbers are exact: JSON integers, decimal literals (converted exactly) or
"p/q" strings.
"""

from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, model_validator

from ..core.types import format_rational, to_nonnegative

Rational = Annotated[
    Fraction,
    BeforeValidator(lambda value: to_nonnegative(value, 'value')),
    PlainSerializer(format_rational, when_used='json'),
]


class _FileModel(BaseModel):
    model_config = ConfigDict(extra='forbid', arbitrary_types_allowed=True)


def _check_matrix(rows: List[List[Fraction]], senders: int, receivers: int, name: str):
    if len(rows) != senders:
        raise ValueError(f"{name} has {len(rows)} rows, expected senders={senders}")
    for i, row in enumerate(rows):
        if len(row) != receivers:
            raise ValueError(f"{name} row {i} has {len(row)} entries, expected receivers={receivers}")


class InstanceFile(_FileModel):
    senders: int = Field(ge=1)
    receivers: int = Field(ge=1)
    demands: List[List[Rational]]
    delta: Rational
    window: Rational

    @model_validator(mode='after')
    def check_dimensions(self):
        _check_matrix(self.demands, self.senders, self.receivers, 'demands')
        return self


class TraceFile(_FileModel):
    senders: int = Field(ge=1)
    receivers: int = Field(ge=1)
    steps: List[List[List[Rational]]]

    @model_validator(mode='after')
    def check_dimensions(self):
        for t, step in enumerate(self.steps):
            _check_matrix(step, self.senders, self.receivers, f"step {t}")
        return self


class ConfigurationEntry(_FileModel):
    edges: List[Tuple[int, int]]
    alpha: Rational


class ScheduleFile(_FileModel):
    """Only `configs` is required; the rest is written by write_schedule"""
    configs: List[ConfigurationEntry]
    senders: Optional[int] = Field(default=None, ge=1)
    receivers: Optional[int] = Field(default=None, ge=1)
    delta: Optional[Rational] = None
    window: Optional[Rational] = None
    throughput: Optional[Rational] = None
    algorithm: Optional[str] = None

    @model_validator(mode='after')
    def check_edges(self):
        if self.senders is None or self.receivers is None:
            return self
        for index, entry in enumerate(self.configs):
            for i, j in entry.edges:
                if not (0 <= i < self.senders and 0 <= j < self.receivers):
                    raise ValueError(
                        f"configuration {index} edge ({i}, {j}) outside {self.senders}x{self.receivers}"
                    )
        return self


class SuiteFile(_FileModel):
    """
    Benchmark suite

    random: `count` instances per size drawn from the instance stream.
    exhaustive: every integer demand matrix up to max_demand per size.
    adversarial: one adversarial trace per size, solved offline on its aggregate.
    """
    generator: Literal['random', 'exhaustive', 'adversarial']
    sizes: List[Tuple[int, int]] = [(2, 2)]
    deltas: List[Rational] = [Fraction(1)]
    windows: List[Rational] = [Fraction(4)]
    max_demand: int = Field(default=3, ge=0)
    count: int = Field(default=10, ge=0)
    seed: int = Field(default=0, ge=0)
    algorithms: List[Literal['greedy', 'lp', 'hybrid', 'oracle']] = ['greedy']
    epsilon: Rational = Fraction(1, 5)
    k: Optional[int] = Field(default=None, ge=1)
    oracle: bool = True
