import itertools
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import InvalidGameError
from market_games import rdgame
from models import BimatrixGame
from parsing_utils import load_game


GAME_PATH = Path(__file__).parent.parent / 'data' / 'graphics_rd.game'

CARD_MAKERS = BimatrixGame(row_strategies=['R&D', 'NoR&D'],
                       col_strategies=['R&D', 'NoR&D'],
                       payoffs=[[(50, 50), (200, 0)], [(0, 200), (100, 100)]])

CONSTANT = BimatrixGame(row_strategies=['A', 'B'],
                        col_strategies=['A', 'B'],
                        payoffs=[[(1, 1), (1, 1)], [(1, 1), (1, 1)]])

COORDINATION = BimatrixGame(row_strategies=['A', 'B'],
                            col_strategies=['A', 'B'],
                            payoffs=[[(2, 2), (0, 0)], [(0, 0), (1, 1)]])

MATCHING_PENNIES = BimatrixGame(row_strategies=['H', 'T'],
                                col_strategies=['H', 'T'],
                                payoffs=[[(1, -1), (-1, 1)], [(-1, 1), (1, -1)]])

HARMONY = BimatrixGame(row_strategies=['C', 'D'],
                       col_strategies=['C', 'D'],
                       payoffs=[[(4, 4), (3, 1)], [(1, 3), (0, 0)]])

# (game, expected equilibria as (row, col))
MOCK_DATA_NASH = [
    (CARD_MAKERS, [('R&D', 'R&D')]),
    (CONSTANT, [('A', 'A'), ('A', 'B'), ('B', 'A'), ('B', 'B')]),
    (COORDINATION, [('A', 'A'), ('B', 'B')]),
    (MATCHING_PENNIES, []),
]

# (game, (row dominant, col dominant))
MOCK_DATA_DOMINANT = [
    (CARD_MAKERS, ('R&D', 'R&D')),
    (MATCHING_PENNIES, (None, None)),
    (CONSTANT, (None, None)),
    (HARMONY, ('C', 'C')),
]


def brute_force_nash(game: BimatrixGame) -> list:
    rows, cols = game.shape
    found = []
    for i, j in itertools.product(range(rows), range(cols)):
        row_gain = any(game.payoffs[k][j][0] > game.payoffs[i][j][0] for k in range(rows))
        col_gain = any(game.payoffs[i][k][1] > game.payoffs[i][j][1] for k in range(cols))
        if not row_gain and not col_gain:
            found.append((game.row_strategies[i], game.col_strategies[j]))
    return found


def as_keys(profiles) -> list:
    return [(p.row_choice, p.col_choice) for p in profiles]


@st.composite
def small_games(draw):
    rows = draw(st.integers(min_value=2, max_value=4))
    cols = draw(st.integers(min_value=2, max_value=4))
    payoff = st.integers(min_value=-3, max_value=3)
    payoffs = [[(draw(payoff), draw(payoff)) for _ in range(cols)] for _ in range(rows)]
    return BimatrixGame(row_strategies=[f'r{i}' for i in range(rows)],
                        col_strategies=[f'c{j}' for j in range(cols)],
                        payoffs=payoffs)


def transform_row_player(game: BimatrixGame, scale: float, shift: float) -> BimatrixGame:
    payoffs = [[(scale * r + shift, c) for r, c in row] for row in game.payoffs]
    return game.model_copy(update={'payoffs': tuple(tuple(row) for row in payoffs)})


class PureNashTest(unittest.TestCase):

    def test_examples(self):
        for game, expected in MOCK_DATA_NASH:
            self.assertListEqual(as_keys(rdgame.pure_nash(game)), expected)

    def test_card_makers_payoffs(self):
        equilibrium, = rdgame.pure_nash(CARD_MAKERS)
        self.assertTupleEqual(equilibrium.payoffs, (50, 50))

    def test_bundled_file(self):
        game = load_game(GAME_PATH)
        self.assertEqual(game, CARD_MAKERS)
        self.assertListEqual(as_keys(rdgame.pure_nash(game)), [('R&D', 'R&D')])

    def test_best_responses(self):
        row_replies, col_replies = rdgame.best_responses(COORDINATION)
        self.assertDictEqual(row_replies, {'A': ['A'], 'B': ['B']})
        self.assertDictEqual(col_replies, {'A': ['A'], 'B': ['B']})


class DominanceTest(unittest.TestCase):

    def test_examples(self):
        for game, (row, col) in MOCK_DATA_DOMINANT:
            dominant = rdgame.dominant_strategies(game)
            self.assertEqual((dominant.row, dominant.col), (row, col))

    def test_pareto_dominators(self):
        equilibrium, = rdgame.pure_nash(CARD_MAKERS)
        self.assertListEqual(as_keys(rdgame.pareto_dominators(CARD_MAKERS, equilibrium)), [('NoR&D', 'NoR&D')])


class PrisonersDilemmaTest(unittest.TestCase):

    def test_card_makers_is_a_dilemma(self):
        certificate = rdgame.classify_prisoners_dilemma(load_game(GAME_PATH))
        self.assertTrue(certificate.is_dilemma)
        self.assertEqual((certificate.equilibrium.row_choice, certificate.equilibrium.col_choice), ('R&D', 'R&D'))
        self.assertTupleEqual(certificate.equilibrium.payoffs, (50, 50))
        self.assertEqual((certificate.dominating.row_choice, certificate.dominating.col_choice), ('NoR&D', 'NoR&D'))
        self.assertTupleEqual(certificate.dominating.payoffs, (100, 100))

    def test_coordination_is_not(self):
        self.assertFalse(rdgame.classify_prisoners_dilemma(COORDINATION).is_dilemma)

    def test_pareto_optimal_equilibrium_is_not(self):
        certificate = rdgame.classify_prisoners_dilemma(HARMONY)
        self.assertFalse(certificate.is_dilemma)
        self.assertEqual(certificate.equilibrium.payoffs, (4, 4))
        self.assertIsNone(certificate.dominating)

    def test_rejects_larger_games(self):
        game = BimatrixGame(row_strategies=['a', 'b', 'c'], col_strategies=['x', 'y'],
                            payoffs=[[(0, 0), (0, 0)]] * 3)
        with self.assertRaises(InvalidGameError):
            rdgame.classify_prisoners_dilemma(game)


@settings(max_examples=200, deadline=None)
@given(small_games())
def test_pure_nash_matches_brute_force(game):
    assert as_keys(rdgame.pure_nash(game)) == brute_force_nash(game)


@settings(max_examples=200, deadline=None)
@given(small_games())
def test_dominant_strategies_give_the_only_equilibrium(game):
    dominant = rdgame.dominant_strategies(game)
    if dominant.row is not None and dominant.col is not None:
        assert as_keys(rdgame.pure_nash(game)) == [(dominant.row, dominant.col)]


@settings(max_examples=200, deadline=None)
@given(small_games(), st.floats(min_value=0.1, max_value=10), st.integers(min_value=-5, max_value=5))
def test_affine_transform_changes_nothing(game, scale, shift):
    transformed = transform_row_player(game, scale, shift)

    assert as_keys(rdgame.pure_nash(transformed)) == as_keys(rdgame.pure_nash(game))
    assert rdgame.dominant_strategies(transformed) == rdgame.dominant_strategies(game)
    if game.shape == (2, 2):
        assert (rdgame.classify_prisoners_dilemma(transformed).is_dilemma
                == rdgame.classify_prisoners_dilemma(game).is_dilemma)


def test_card_makers_payoff_arrays():
    np.testing.assert_array_equal(CARD_MAKERS.row_payoffs(), [[50, 200], [0, 100]])
    np.testing.assert_array_equal(CARD_MAKERS.col_payoffs(), [[50, 0], [200, 100]])
