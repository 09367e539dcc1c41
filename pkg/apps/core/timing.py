"""
Timing Utilities

Helpers that log how long the heavier computations take.
"""

import logging
import time
from functools import wraps

logger = logging.getLogger(__name__)


def timed(func):
    """
    Decorator logging the wall-clock time of a computation.

    Usage:
        @timed
        def compute_rmatrix(shape, n):
            ...
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = time.perf_counter() - start_time
        logger.info("%s finished in %.3fs", func.__qualname__, elapsed)
        return result
    return wrapper


class Stopwatch:
    """
    Context manager measuring a block.

    Usage:
        with Stopwatch('golden [2]') as sw:
            report = golden_compare('2', 4)

        print(f"Took {sw.elapsed:.2f}s")
    """

    def __init__(self, label=''):
        self.label = label
        self.elapsed = 0.0
        self._start = 0.0

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self._start
        if self.label:
            logger.debug("%s took %.3fs", self.label, self.elapsed)
