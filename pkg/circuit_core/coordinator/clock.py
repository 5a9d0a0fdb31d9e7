"""
Solve Clock
Monotonic timing of solver calls, shared by the coordinator and the benchmark harness
"""

import logging
import threading
import time
from contextlib import contextmanager
from typing import Dict, Iterator

logger = logging.getLogger(__name__)


class SolveClock:
    """
    Thread-safe timer for solver calls

    Keeps, per solver name:
    - number of measured calls
    - accumulated seconds
    Several worker threads may measure at once.
    """

    def __init__(self):
        """Initialize solve clock"""
        self._lock = threading.Lock()
        self._calls: Dict[str, int] = {}
        self._seconds: Dict[str, float] = {}
        self._last_elapsed = 0.0

        logger.debug("Solve clock initialized")

    def now(self) -> float:
        """
        Current monotonic time

        Returns:
            float: Seconds from an arbitrary fixed origin
        """
        return time.perf_counter()

    @contextmanager
    def measure(self, name: str) -> Iterator[dict]:
        """
        Time the enclosed block and charge it to `name`

        Yields:
            dict: Filled with 'seconds' when the block exits
        """
        record = {'name': name, 'seconds': None}
        start = self.now()
        try:
            yield record
        finally:
            elapsed = self.now() - start
            record['seconds'] = elapsed
            with self._lock:
                self._calls[name] = self._calls.get(name, 0) + 1
                self._seconds[name] = self._seconds.get(name, 0.0) + elapsed
                self._last_elapsed = elapsed

    def reset(self):
        """Forget all measurements (useful for testing)"""
        with self._lock:
            self._calls.clear()
            self._seconds.clear()
            self._last_elapsed = 0.0
            logger.debug("Solve clock reset")

    def get_stats(self) -> dict:
        """
        Get timing statistics

        Returns:
            dict: Total calls and per-solver call counts and seconds
        """
        with self._lock:
            return {
                'total_calls': sum(self._calls.values()),
                'last_seconds': self._last_elapsed,
                'solvers': {
                    name: {'calls': self._calls[name], 'seconds': self._seconds[name]}
                    for name in sorted(self._calls)
                },
            }

    def __repr__(self):
        return f"<SolveClock(calls={sum(self._calls.values())})>"
