import logging
import math
from typing import Callable, Tuple

from errors import SearchError


logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1/phi
INV_PHI_SQ = (3 - math.sqrt(5)) / 2  # 1/phi^2


def bracket_minimum(obj: Callable[[float], float],
                    center: float = 0.0,
                    half_width: float = 1.0,
                    max_expansions: int = 200) -> Tuple[float, float]:
    """Widen (and shift) [center - h, center + h] until the midpoint beats both ends.
    Valid for unimodal objectives"""
    for _ in range(max_expansions):
        y_left, y_mid, y_right = obj(center - half_width), obj(center), obj(center + half_width)

        if y_mid < y_left and y_mid < y_right:
            logger.debug(f'bracket found: [{center - half_width}, {center + half_width}]')
            return center - half_width, center + half_width

        if y_left <= y_mid:
            center -= half_width
        elif y_right <= y_mid:
            center += half_width
        half_width *= 2

    raise SearchError(f'no interior minimum found after {max_expansions} expansions')


def golden_section_search(obj: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
    """ golden section search optimizer

    Args:

        obj (callable): 1d function to minimize
        a (float): minimum of starting bracket
        b (float): maximum of starting bracket
        tol (float,optional): width of the final bracket

    Returns:

        (float): argmin estimate

    """
    # a. distance
    dist = b - a
    if dist <= tol:
        return (a + b) / 2

    # b. number of iterations
    n = int(math.ceil(math.log(tol / dist) / math.log(INV_PHI)))

    # c. potential new mid-points
    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = obj(c)
    yd = obj(d)

    # d. loop
    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            dist = INV_PHI * dist
            c = a + INV_PHI_SQ * dist
            yc = obj(c)
        else:
            a = c
            c = d
            yc = yd
            dist = INV_PHI * dist
            d = a + INV_PHI * dist
            yd = obj(d)

    # e. return
    if yc < yd:
        return (a + d) / 2
    else:
        return (c + b) / 2
