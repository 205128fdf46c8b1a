"""Bounded worker pool for independent parameter points.

Results always come back in input order, so sweep output is deterministic
regardless of the worker count.  ADIABATIC_LAB_WORKERS overrides the default
of one worker; threads suffice because the hot kernels run outside the GIL.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = ["worker_count", "parallel_map"]


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        if explicit < 1:
            raise ValueError("worker count must be >= 1")
        return explicit
    env = os.environ.get("ADIABATIC_LAB_WORKERS", "").strip()
    if env:
        count = int(env)
        if count < 1:
            raise ValueError("ADIABATIC_LAB_WORKERS must be >= 1")
        return count
    return 1


def parallel_map(fn, items, workers: int | None = None) -> list:
    items = list(items)
    count = worker_count(workers)
    if count == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items))
