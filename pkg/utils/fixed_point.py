import logging
from typing import Callable, Sequence, Tuple

import numpy as np

from errors import ConvergenceError
from .helpers import max_norm


logger = logging.getLogger(__name__)

MAX_ITERATIONS = 10_000
TOLERANCE = 1e-12


def iterate_to_fixed_point(update: Callable[[np.ndarray], np.ndarray],
                           start: Sequence[float],
                           tol: float = TOLERANCE,
                           max_iter: int = MAX_ITERATIONS,
                           damping: float = 1.0,
                           name: str = 'fixed point') -> Tuple[np.ndarray, int]:
    """Repeats x <- x + damping * (update(x) - x) until successive iterates differ
    by less than `tol` in max norm, relative to the iterate once it exceeds 1.
    Returns the last iterate and the iteration count"""
    current = np.asarray(start, dtype=float)
    delta = np.inf

    for iteration in range(1, max_iter + 1):
        proposed = np.asarray(update(current), dtype=float)
        following = current + damping * (proposed - current)

        delta = max_norm(following - current)
        current = following

        if delta < tol * max(1.0, max_norm(current)):
            logger.debug(f'{name}: converged after {iteration} iterations (delta {delta:.3e})')
            return current, iteration

    raise ConvergenceError(f'{name}: no convergence within {max_iter} iterations (last delta {delta:.3e})',
                           iterations=max_iter, delta=float(delta))
