import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from errors import InvalidGameError
from models import BimatrixGame, DilemmaCertificate, DominantStrategies, StrategyProfile


logger = logging.getLogger(__name__)


def best_responses(game: BimatrixGame) -> Tuple[Dict[str, List[str]], Dict[str, List[str]]]:
    """Row replies to every column strategy and column replies to every row strategy"""
    row_pay, col_pay = game.row_payoffs(), game.col_payoffs()

    row_replies = {col: [game.row_strategies[i] for i in np.flatnonzero(row_pay[:, j] == row_pay[:, j].max())]
                   for j, col in enumerate(game.col_strategies)}
    col_replies = {row: [game.col_strategies[j] for j in np.flatnonzero(col_pay[i, :] == col_pay[i, :].max())]
                   for i, row in enumerate(game.row_strategies)}
    return row_replies, col_replies


def pure_nash(game: BimatrixGame) -> List[StrategyProfile]:
    """Profiles where no player has a strictly improving unilateral deviation, in row-major order"""
    row_pay, col_pay = game.row_payoffs(), game.col_payoffs()

    row_ok = row_pay >= row_pay.max(axis=0, keepdims=True)
    col_ok = col_pay >= col_pay.max(axis=1, keepdims=True)

    equilibria = [game.profile(int(i), int(j)) for i, j in zip(*np.nonzero(row_ok & col_ok))]
    logger.debug(f'pure nash: {len(equilibria)} equilibria in a {game.shape} game')
    return equilibria


def _strictly_dominant(payoffs: np.ndarray) -> Optional[int]:
    # payoffs[own strategy, rival strategy]
    for own in range(payoffs.shape[0]):
        others = np.delete(payoffs, own, axis=0)
        if np.all(payoffs[own] > others):
            return own
    return None


def dominant_strategies(game: BimatrixGame) -> DominantStrategies:
    row_idx = _strictly_dominant(game.row_payoffs())
    col_idx = _strictly_dominant(game.col_payoffs().T)

    return DominantStrategies(row=None if row_idx is None else game.row_strategies[row_idx],
                              col=None if col_idx is None else game.col_strategies[col_idx])


def pareto_dominators(game: BimatrixGame, profile: StrategyProfile) -> List[StrategyProfile]:
    """Profiles that are strictly better than `profile` for both players"""
    row_pay, col_pay = game.row_payoffs(), game.col_payoffs()
    better = (row_pay > profile.payoffs[0]) & (col_pay > profile.payoffs[1])
    return [game.profile(int(i), int(j)) for i, j in zip(*np.nonzero(better))]


def classify_prisoners_dilemma(game: BimatrixGame) -> DilemmaCertificate:
    if game.shape != (2, 2):
        raise InvalidGameError(f'the dilemma classification needs a 2x2 game, got {game.shape}')

    dominant = dominant_strategies(game)
    if dominant.row is None or dominant.col is None:
        return DilemmaCertificate(is_dilemma=False)

    row_idx = game.row_strategies.index(dominant.row)
    col_idx = game.col_strategies.index(dominant.col)
    equilibrium = game.profile(row_idx, col_idx)

    dominators = pareto_dominators(game, equilibrium)
    if not dominators:
        return DilemmaCertificate(is_dilemma=False, equilibrium=equilibrium)

    return DilemmaCertificate(is_dilemma=True, equilibrium=equilibrium, dominating=dominators[0])
