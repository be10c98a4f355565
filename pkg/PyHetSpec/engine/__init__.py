# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Deterministic random streams and ordered parallel execution."""

import logging
from concurrent.futures import ProcessPoolExecutor
import numpy as np
from . import nd

_log = logging.getLogger(__name__)

__all__ = ["nd", "STREAMS", "substream", "as_generator", "map_ordered"]

# Fixed spawn-key slots so every random draw has a stable address
STREAMS = {
    "lo": 0,
    "signal": 1,
    "detector": 2,
    "dark": 3,
}


def substream(seed, *key):
    """Independent generator addressed by the master `seed` and an integer `key`.

    String parts of `key` are looked up in `STREAMS`.
    """
    spawn_key = tuple(STREAMS[k] if isinstance(k, str) else int(k) for k in key)
    return np.random.default_rng(
        np.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key)
    )


def as_generator(seed):
    """Accept a Generator, a SeedSequence or an integer seed."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def map_ordered(func, tasks, workers=1):
    """Apply `func(*task)` to every task, returning results in task order.

    With more than one worker the tasks run in a process pool; the results do
    not depend on the number of workers.
    """
    tasks = list(tasks)
    if workers is None or workers <= 1 or len(tasks) <= 1:
        return [func(*task) for task in tasks]
    _log.debug("Running %d tasks on %d workers.", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, *zip(*tasks)))
