"""Parallel map over independent cells (regions of the parameter
plane, initial conditions of a basin map).

Each task carries its own index, so the results are merged by index
whatever the order in which the workers return them.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import os
from   multiprocessing import Pool

from tanner.utils.errors import ConfigError, tanner_error


THREADS_ENV = "TANNER_THREADS"


def resolve_threads(threads=None):
    """Number of workers: [threads] if given, else the TANNER_THREADS
    environment variable, else 1.
    """
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        if env is None:
            return 1
        try:
            threads = int(env)
        except ValueError:
            tanner_error(ConfigError, "resolve_threads",
                "{} must be an integer, got {!r}.".format(THREADS_ENV, env))
    if threads < 1:
        tanner_error(ConfigError, "resolve_threads",
            "The number of threads must be at least 1, got {}.".format(threads))
    return threads


def _call(job):
    fct, index, args = job
    return index, fct(*args)


def _jobs(fct, tasks, stop):
    for index, args in tasks:
        if stop is not None and stop.is_set():
            return
        yield fct, index, args


def parallel_map(fct, tasks, threads=1, stop=None):
    """Run fct(*args) for every (index, args) of [tasks] and return the
    dict index -> result. [fct] must be a module-level function.

    [stop] is an optional Event: once set, no new task is scheduled and
    the missing indices are absent from the result.
    """
    results = {}
    if threads <= 1:
        for _, index, args in _jobs(fct, tasks, stop):
            results[index] = fct(*args)
        return results
    with Pool(threads) as pool:
        for index, res in pool.imap_unordered(_call, _jobs(fct, tasks, stop)):
            results[index] = res
    return results
