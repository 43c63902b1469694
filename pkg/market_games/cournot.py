import logging
from typing import Iterable, List, Tuple

import numpy as np

from models import CournotMarket, CournotOutcome
from utils import CaseInsensitiveEnum, iterate_to_fixed_point, MAX_ITERATIONS, TOLERANCE


logger = logging.getLogger(__name__)


class CournotMethod(CaseInsensitiveEnum):
    closed = "closed"
    iterate = "iterate"


def best_response(market: CournotMarket, q_rival: float) -> float:
    """Solves a - 2q - q_rival = 0 for q, clamped at zero"""
    if q_rival < 0:
        raise ValueError(f'rival quantity must be non-negative, got {q_rival}')

    return max(0.0, (market.cap - q_rival) / 2)


def profits(market: CournotMarket, q_a: float, q_b: float) -> Tuple[float, float]:
    """Pure formula evaluation: the price may go negative off equilibrium"""
    if q_a < 0 or q_b < 0:
        raise ValueError(f'quantities must be non-negative, got ({q_a}, {q_b})')

    price = market.cap - q_a - q_b
    return price * q_a, price * q_b


def _to_outcome(market: CournotMarket, q_a: float, q_b: float) -> CournotOutcome:
    profit_a, profit_b = profits(market, q_a, q_b)
    return CournotOutcome(q_a=q_a,
                          q_b=q_b,
                          price=market.cap - q_a - q_b,
                          profit_a=profit_a,
                          profit_b=profit_b)


def _closed_form(market: CournotMarket) -> CournotOutcome:
    q = market.cap / 3
    return CournotOutcome(q_a=q, q_b=q, price=q, profit_a=market.cap ** 2 / 9, profit_b=market.cap ** 2 / 9)


def _iterate(market: CournotMarket,
             start: Tuple[float, float],
             tol: float,
             max_iter: int) -> CournotOutcome:
    def simultaneous_update(q: np.ndarray) -> np.ndarray:
        return np.array([best_response(market, q[1]), best_response(market, q[0])])

    (q_a, q_b), iterations = iterate_to_fixed_point(simultaneous_update,
                                                    start=start,
                                                    tol=tol,
                                                    max_iter=max_iter,
                                                    name=f'cournot best response (cap={market.cap})')
    return _to_outcome(market, float(q_a), float(q_b))


def equilibrium(market: CournotMarket,
                method: CournotMethod | str = CournotMethod.closed,
                start: Tuple[float, float] = (0.0, 0.0),
                tol: float = TOLERANCE,
                max_iter: int = MAX_ITERATIONS) -> CournotOutcome:
    method = CournotMethod(method)

    if market.cap == 0:
        logger.warning('empty market (cap = 0): every quantity and profit is zero')

    if method == CournotMethod.closed:
        return _closed_form(market)

    if min(start) < 0:
        raise ValueError(f'starting quantities must be non-negative, got {start}')

    return _iterate(market, start=start, tol=tol, max_iter=max_iter)


def capacity_path(caps: Iterable[float], method: CournotMethod | str = CournotMethod.closed) -> List[CournotOutcome]:
    return [equilibrium(CournotMarket(cap=cap), method=method) for cap in caps]
