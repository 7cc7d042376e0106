"""Runs the verification suites, optionally on a pool of worker processes."""

# Utilities
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

# Verification
from api.verification.suites import SUITES, run_suite

# Exceptions
from api.utils.exceptions import InvalidInput

# Utils
from api.utils.config import default_jobs, default_seed


logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 6


def _select(keys):
    if keys is None:
        return list(SUITES)
    unknown = [key for key in keys if key not in SUITES]
    if unknown:
        raise InvalidInput('unknown suites: {}'.format(', '.join(unknown)))
    # registry order, whatever order was asked for
    return [key for key in SUITES if key in set(keys)]


def run_verify_all(n_max=DEFAULT_N_MAX, jobs=None, seed=None, keys=None):
    """Results of the selected suites, in registry order.

    The results do not depend on ``jobs``: each suite is deterministic given
    ``n_max`` and ``seed`` and the merge keeps registry order.
    """
    if n_max < 1:
        raise InvalidInput('n_max must be positive')
    jobs = jobs if jobs is not None else default_jobs()
    seed = seed if seed is not None else default_seed()
    selected = _select(keys)
    logger.info('running %d suites up to degree %d with %d jobs', len(selected), n_max, jobs)
    if jobs > 1 and len(selected) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(run_suite, selected, repeat(n_max), repeat(seed)))
    else:
        results = [run_suite(key, n_max, seed) for key in selected]
    return results


def first_failure(results):
    return next((result for result in results if not result.passed), None)
