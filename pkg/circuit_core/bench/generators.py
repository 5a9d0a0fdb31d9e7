"""
Circuit Core - Generators
Deterministic instance and trace generators keyed by the named random streams
"""

import itertools
from typing import Iterator, List

from ..core.streams import make_rng
from ..core.types import DemandMatrix, Edge, Instance
from ..matching import MultiEdgeSet
from ..online.types import Trace


def random_instance(senders: int, receivers: int, max_demand: int, delta, window,
                    seed: int = 0, index: int = 0) -> Instance:
    """Integer demands drawn uniformly from 0..max_demand (instance stream, key = index)"""
    rng = make_rng(seed, 'instance', index)
    values = rng.integers(0, max_demand + 1, size=(senders, receivers))
    return Instance(DemandMatrix(values.tolist()), delta, window)


def exhaustive_instances(senders: int, receivers: int, max_demand: int, delta, window) -> Iterator[Instance]:
    """Every integer demand matrix with entries in 0..max_demand, row-major odometer order"""
    for flat in itertools.product(range(max_demand + 1), repeat=senders * receivers):
        rows = [flat[i * receivers:(i + 1) * receivers] for i in range(senders)]
        yield Instance(DemandMatrix(rows), delta, window)


def random_trace(senders: int, receivers: int, horizon: int, max_demand: int,
                 seed: int = 0, index: int = 0) -> Trace:
    """Integer arrivals per step drawn uniformly from 0..max_demand (generator stream)"""
    rng = make_rng(seed, 'generator', index)
    values = rng.integers(0, max_demand + 1, size=(horizon, senders, receivers))
    return Trace(senders, receivers, tuple(DemandMatrix(step) for step in values.tolist()))


def _all_edges(senders: int, receivers: int) -> List[Edge]:
    return [(i, j) for i in range(senders) for j in range(receivers)]


def random_unit_trace(senders: int, receivers: int, horizon: int, max_edges: int,
                      seed: int = 0, index: int = 0) -> Trace:
    """Up to max_edges unit edges per step, drawn with repetition (generator stream)"""
    rng = make_rng(seed, 'generator', index)
    edges = _all_edges(senders, receivers)
    steps = []
    for _ in range(horizon):
        count = int(rng.integers(0, max_edges + 1))
        picks = rng.integers(0, len(edges), size=count)
        steps.append(MultiEdgeSet.from_edges(senders, receivers, [edges[p] for p in picks.tolist()]))
    return Trace(senders, receivers, tuple(steps))


def exhaustive_unit_traces(senders: int, receivers: int, horizon: int, max_edges: int) -> Iterator[Trace]:
    """Every trace whose steps are multisets of at most max_edges unit edges"""
    edges = _all_edges(senders, receivers)
    step_choices = [
        MultiEdgeSet.from_edges(senders, receivers, combo)
        for size in range(max_edges + 1)
        for combo in itertools.combinations_with_replacement(edges, size)
    ]
    for steps in itertools.product(step_choices, repeat=horizon):
        yield Trace(senders, receivers, steps)
