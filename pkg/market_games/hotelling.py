import logging
from typing import Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import ValidationError

from errors import InvalidLocations, InvalidStep, OutOfInterior
from models import HotellingOutcome, LinearMarket, Locations, PricePair
from output_helpers.columns import SWEEP_COLUMNS
from utils import CaseInsensitiveEnum, derivative, iterate_to_fixed_point, MAX_ITERATIONS, TOLERANCE


logger = logging.getLogger(__name__)

RELATIVE_STEP = 1e-5


class PriceMethod(CaseInsensitiveEnum):
    closed = "closed"
    numeric = "numeric"


# The helpers below use plain arithmetic only, so they accept floats as well as numpy arrays
def _f_poly(L, a, b):
    return L ** 2 + a ** 2 + b ** 2 - 2 * a * L - 2 * b * L + 2 * a * b


def _split(L, c, a, b, p_a, p_b):
    gap = L - a - b
    x = (p_b - p_a) / (2 * c * gap) + _f_poly(L, a, b) / (2 * gap)
    y = (p_a - p_b) / (2 * c * gap) + _f_poly(L, a, b) / (2 * gap)
    return x, y


def _closed_form_prices(L, c, a, b):
    p_a = c / 3 * (3 * L ** 2 - a ** 2 + b ** 2 - 2 * a * L - 4 * b * L)
    p_b = c / 3 * (3 * L ** 2 + a ** 2 - b ** 2 - 4 * a * L - 2 * b * L)
    return p_a, p_b


def _e_share(L, a, b):
    return (-a ** 2 + b ** 2 - 2 * a * L - 4 * b * L + 3 * L ** 2) / (6 * (L - a - b))


def _e_share_b(L, a, b):
    return (a ** 2 - b ** 2 - 4 * a * L - 2 * b * L + 3 * L ** 2) / (6 * (L - a - b))


def _price_slope(L, c, own):
    # d(p_own)/d(own location) of the closed form price
    return c / 3 * (-2 * own - 2 * L)


def _equilibrium_profits(L, c, a, b):
    p_a, p_b = _closed_form_prices(L, c, a, b)
    x, y = _split(L, c, a, b, p_a, p_b)
    return p_a * (a + x), p_b * (b + y)


def _gap(market: LinearMarket, locs: Locations) -> float:
    gap = market.length - locs.loc_a - locs.loc_b
    if gap <= 0:
        raise InvalidLocations(f'firms must be strictly ordered: loc_a + loc_b = {locs.loc_a + locs.loc_b} '
                               f'>= length {market.length}')
    return gap


def _locations(loc_a: float, loc_b: float) -> Locations:
    try:
        return Locations(loc_a=loc_a, loc_b=loc_b)
    except ValidationError as e:
        raise InvalidLocations(f'invalid locations ({loc_a}, {loc_b})') from e


def f_value(market: LinearMarket, locs: Locations) -> float:
    return _f_poly(market.length, locs.loc_a, locs.loc_b)


def split(market: LinearMarket, locs: Locations, prices: PricePair) -> Tuple[float, float]:
    """Distances from firm A and firm B to the indifferent consumer"""
    _gap(market, locs)

    x, y = _split(market.length, market.disutility, locs.loc_a, locs.loc_b, prices.p_a, prices.p_b)
    if x < 0 or y < 0:
        raise OutOfInterior(f'no interior indifferent consumer at prices ({prices.p_a}, {prices.p_b}), '
                            f'locations ({locs.loc_a}, {locs.loc_b}): x = {x}, y = {y}')
    return x, y


def stage_profits(market: LinearMarket, locs: Locations, prices: PricePair) -> Tuple[float, float]:
    x, y = split(market, locs, prices)
    return prices.p_a * (locs.loc_a + x), prices.p_b * (locs.loc_b + y)


def closed_form_profits(market: LinearMarket, locs: Locations, prices: PricePair) -> Tuple[float, float]:
    L, c, a, b = market.length, market.disutility, locs.loc_a, locs.loc_b
    gap = _gap(market, locs)
    p_a, p_b = prices.p_a, prices.p_b

    profit_a = p_a * ((p_b - p_a) / (2 * c * gap) + (L ** 2 - a ** 2 + b ** 2 - 2 * b * L) / (2 * gap))
    profit_b = p_b * ((p_a - p_b) / (2 * c * gap) + (L ** 2 + a ** 2 - b ** 2 - 2 * a * L) / (2 * gap))
    return profit_a, profit_b


def foc_residuals(market: LinearMarket, locs: Locations, prices: PricePair) -> Tuple[float, float]:
    """d(profit_a)/d(p_a) and d(profit_b)/d(p_b) on the interior branch"""
    L, c, a, b = market.length, market.disutility, locs.loc_a, locs.loc_b
    gap = _gap(market, locs)
    p_a, p_b = prices.p_a, prices.p_b

    residual_a = (p_b - 2 * p_a) / (2 * c * gap) + (L ** 2 - a ** 2 + b ** 2 - 2 * b * L) / (2 * gap)
    residual_b = (p_a - 2 * p_b) / (2 * c * gap) + (L ** 2 + a ** 2 - b ** 2 - 2 * a * L) / (2 * gap)
    return residual_a, residual_b


def _numeric_prices(market: LinearMarket, locs: Locations, tol: float, max_iter: int) -> Tuple[float, float]:
    L, c, a, b = market.length, market.disutility, locs.loc_a, locs.loc_b
    # each first order condition is linear in the firm's own price
    own_a = c * (L ** 2 - a ** 2 + b ** 2 - 2 * b * L)
    own_b = c * (L ** 2 + a ** 2 - b ** 2 - 2 * a * L)

    def alternating_update(p: np.ndarray) -> np.ndarray:
        p_a = (p[1] + own_a) / 2
        p_b = (p_a + own_b) / 2
        return np.array([p_a, p_b])

    (p_a, p_b), _ = iterate_to_fixed_point(alternating_update,
                                           start=(0.0, 0.0),
                                           tol=tol,
                                           max_iter=max_iter,
                                           name=f'hotelling price best response (locs={a}, {b})')
    return float(p_a), float(p_b)


def price_equilibrium(market: LinearMarket,
                      locs: Locations,
                      method: PriceMethod | str = PriceMethod.closed,
                      tol: float = TOLERANCE,
                      max_iter: int = MAX_ITERATIONS) -> PricePair:
    method = PriceMethod(method)
    _gap(market, locs)

    if method == PriceMethod.closed:
        p_a, p_b = _closed_form_prices(market.length, market.disutility, locs.loc_a, locs.loc_b)
    else:
        p_a, p_b = _numeric_prices(market, locs, tol=tol, max_iter=max_iter)

    return PricePair(p_a=p_a, p_b=p_b)


def e_share(market: LinearMarket, locs: Locations) -> float:
    _gap(market, locs)
    return _e_share(market.length, locs.loc_a, locs.loc_b)


def e_share_b(market: LinearMarket, locs: Locations) -> float:
    _gap(market, locs)
    return _e_share_b(market.length, locs.loc_a, locs.loc_b)


def price_slopes(market: LinearMarket, locs: Locations) -> Tuple[float, float]:
    """Analytic d(p_a)/d(loc_a) and d(p_b)/d(loc_b) at the equilibrium prices. Both are negative"""
    _gap(market, locs)
    L, c = market.length, market.disutility
    return _price_slope(L, c, locs.loc_a), _price_slope(L, c, locs.loc_b)


def equilibrium_outcome(market: LinearMarket,
                        locs: Locations,
                        method: PriceMethod | str = PriceMethod.closed) -> HotellingOutcome:
    prices = price_equilibrium(market, locs, method=method)
    x, y = split(market, locs, prices)
    profit_a, profit_b = stage_profits(market, locs, prices)

    return HotellingOutcome(p_a=prices.p_a,
                            p_b=prices.p_b,
                            x=x,
                            y=y,
                            demand_a=locs.loc_a + x,
                            demand_b=locs.loc_b + y,
                            profit_a=profit_a,
                            profit_b=profit_b,
                            e_share=e_share(market, locs))


def maximal_differentiation(market: LinearMarket) -> HotellingOutcome:
    """Both firms on the endpoints: prices c*L^2, profits c*L^3/2"""
    L, c = market.length, market.disutility
    return HotellingOutcome(p_a=c * L ** 2,
                            p_b=c * L ** 2,
                            x=L / 2,
                            y=L / 2,
                            demand_a=L / 2,
                            demand_b=L / 2,
                            profit_a=c * L ** 3 / 2,
                            profit_b=c * L ** 3 / 2,
                            e_share=L / 2)


def _default_step(market: LinearMarket, step: Optional[float]) -> float:
    return RELATIVE_STEP * market.length if step is None else step


def location_gradient(market: LinearMarket,
                      locs: Locations,
                      step: Optional[float] = None) -> Tuple[float, float]:
    """Finite difference derivatives of each firm's equilibrium profit in its own location"""
    _gap(market, locs)
    step = _default_step(market, step)

    def profit_a_at(loc_a: float) -> float:
        return equilibrium_outcome(market, _locations(loc_a, locs.loc_b)).profit_a

    def profit_b_at(loc_b: float) -> float:
        return equilibrium_outcome(market, _locations(locs.loc_a, loc_b)).profit_b

    try:
        return derivative(profit_a_at, locs.loc_a, step), derivative(profit_b_at, locs.loc_b, step)
    except InvalidLocations as e:
        raise InvalidStep(f'step {step} moves the firms off the valid region from '
                          f'({locs.loc_a}, {locs.loc_b})') from e


def diagnostics_f_de(market: LinearMarket,
                     locs: Locations,
                     step: Optional[float] = None) -> Tuple[float, float]:
    """F from its defining polynomial and the finite difference slope of e_share in loc_a"""
    _gap(market, locs)
    step = _default_step(market, step)

    try:
        de = derivative(lambda loc_a: e_share(market, _locations(loc_a, locs.loc_b)), locs.loc_a, step)
    except InvalidLocations as e:
        raise InvalidStep(f'step {step} moves firm A off the valid region from {locs.loc_a}') from e

    return f_value(market, locs), de


def _array_derivative(func, values: np.ndarray, step: float) -> np.ndarray:
    forward = (-3 * func(values) + 4 * func(values + step) - func(values + 2 * step)) / (2 * step)
    central = (func(values + step) - func(values - step)) / (2 * step)
    return np.where(values == 0, forward, central)


def sweep(market: LinearMarket,
          grid_a: np.ndarray,
          grid_b: np.ndarray,
          step: Optional[float] = None) -> pd.DataFrame:
    """Equilibrium prices, profits, F, dE and location gradients over a location grid.
    Points where the firms are not strictly ordered, the finite difference stencil leaves
    the region, or the equilibrium split is not interior are dropped"""
    L, c = market.length, market.disutility
    step = _default_step(market, step)

    a, b = (m.ravel() for m in np.meshgrid(np.asarray(grid_a, dtype=float), np.asarray(grid_b, dtype=float),
                                          indexing='ij'))

    valid = ((a >= 0) & (b >= 0) & (a + b + 2 * step < L)
             & ((a == 0) | (a >= step)) & ((b == 0) | (b >= step)))
    a, b = a[valid], b[valid]

    p_a, p_b = _closed_form_prices(L, c, a, b)
    x, y = _split(L, c, a, b, p_a, p_b)
    interior = (x >= 0) & (y >= 0)

    dropped = int((~valid).sum() + (~interior).sum())
    if dropped:
        logger.info(f'sweep: {dropped} grid points dropped (invalid locations or cornered market)')

    a, b, p_a, p_b, x, y = (v[interior] for v in (a, b, p_a, p_b, x, y))

    df = pd.DataFrame({
        'loc_a': a,
        'loc_b': b,
        'p_a': p_a,
        'p_b': p_b,
        'profit_a': p_a * (a + x),
        'profit_b': p_b * (b + y),
        'f': _f_poly(L, a, b),
        'de_dloc_a': _array_derivative(lambda s: _e_share(L, s, b), a, step),
        'dp_a_dloc_a': _price_slope(L, c, a),
        'dpi_a_dloc_a': _array_derivative(lambda s: _equilibrium_profits(L, c, s, b)[0], a, step),
        'dpi_b_dloc_b': _array_derivative(lambda s: _equilibrium_profits(L, c, a, s)[1], b, step),
    })
    return df[SWEEP_COLUMNS].reset_index(drop=True)
