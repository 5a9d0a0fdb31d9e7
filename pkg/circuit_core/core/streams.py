"""
Circuit Core - Random Streams
Named, splittable random streams derived from a single seed
"""

import numpy as np

# Stream identifiers are part of the reproducibility contract: never renumber
STREAMS = {
    'generator': 0,
    'instance': 1,
    'rounding': 2,
    'adversary': 3,
}


def make_rng(seed: int, stream: str, *keys: int) -> np.random.Generator:
    """
    Build an independent generator for one named stream

    Args:
        seed: Root seed of the run (nonnegative integer)
        stream: Stream name, one of STREAMS
        *keys: Further nonnegative integers splitting the stream
            (e.g. profile index and repetition for rounding)

    Returns:
        numpy Generator; identical arguments always give identical draws
    """
    if stream not in STREAMS:
        raise ValueError(f"Unknown random stream: {stream}")
    if seed < 0 or any(key < 0 for key in keys):
        raise ValueError("Seeds and stream keys must be nonnegative")

    sequence = np.random.SeedSequence(
        entropy=int(seed),
        spawn_key=(STREAMS[stream], *(int(key) for key in keys)),
    )
    return np.random.default_rng(sequence)


def derive_seed(seed: int, stream: str, *keys: int) -> int:
    """Integer seed for a nested solver call, drawn from one named stream"""
    return int(make_rng(seed, stream, *keys).integers(0, 2 ** 31 - 1))
