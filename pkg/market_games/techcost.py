import logging
import math
from typing import List, Tuple

from errors import ScheduleError
from models import TechSchedule
from utils import bracket_minimum, golden_section_search


logger = logging.getLogger(__name__)

SEARCH_TOLERANCE = 1e-12


def progress(sched: TechSchedule, t: int) -> float:
    """A(t): explicit table when given, otherwise (1 + growth)^t (growth defaults to 0)"""
    if t < 0:
        raise ValueError(f'period must be non-negative, got {t}')

    if sched.table is not None:
        if t >= len(sched.table):
            raise ScheduleError(f'progress table covers periods 0..{len(sched.table) - 1}, requested {t}')
        return float(sched.table[t])

    return (1 + (sched.growth or 0.0)) ** t


def _labor_for_unit(sched: TechSchedule, log_k: float) -> float:
    # k^alpha * l^(1 - alpha) = 1, in log space
    return math.exp(-sched.alpha / (1 - sched.alpha) * log_k)


def optimal_inputs(sched: TechSchedule) -> Tuple[float, float]:
    """Cost minimizing (k, l) producing one unit at t = 0. The search runs over log(k)"""
    def expenditure(log_k: float) -> float:
        try:
            return sched.v * math.exp(log_k) + sched.w * _labor_for_unit(sched, log_k)
        except OverflowError:
            return math.inf

    low, high = bracket_minimum(expenditure)
    log_k = golden_section_search(expenditure, low, high, tol=SEARCH_TOLERANCE)
    k = math.exp(log_k)
    logger.debug(f'unit cost search: bracket [{low}, {high}], k = {k}')

    return k, _labor_for_unit(sched, log_k)


def unit_cost(sched: TechSchedule) -> float:
    k, l = optimal_inputs(sched)
    return sched.v * k + sched.w * l


def analytic_unit_cost(sched: TechSchedule) -> float:
    alpha = sched.alpha
    return (sched.v / alpha) ** alpha * (sched.w / (1 - alpha)) ** (1 - alpha)


def total_cost(sched: TechSchedule, q: float, t: int) -> float:
    if q < 0:
        raise ValueError(f'output must be non-negative, got {q}')

    return q * (unit_cost(sched) / progress(sched, t))


def cost_decline_check(sched: TechSchedule, q: float, t: int) -> bool:
    if q <= 0:
        raise ValueError(f'output must be positive, got {q}')

    return total_cost(sched, q, t) < total_cost(sched, q, 0)


def cost_path(sched: TechSchedule, q: float, periods: int) -> List[float]:
    return [total_cost(sched, q, t) for t in range(periods)]
