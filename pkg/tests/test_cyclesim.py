import unittest
from pathlib import Path

from errors import MultipleEquilibriaError, TrajectoryTooShort, UnmodeledOutcomeError
from market_games import cyclesim, hotelling, techcost
from models import BimatrixGame, CycleConfig, CycleRecord, LinearMarket, Locations, TechSchedule, Trajectory
from parsing_utils import load_config, load_game


DATA_DIR = Path(__file__).parent.parent / 'data'

LABELS = ['R&D', 'NoR&D']


def make_config(num_cycles: int = 5, rd_game: BimatrixGame = None) -> CycleConfig:
    return CycleConfig(num_cycles=num_cycles,
                       cournot_cap=3.0,
                       market=LinearMarket(length=1.0, disutility=1.0),
                       rd_game=rd_game or load_game(DATA_DIR / 'graphics_rd.game'),
                       sched=TechSchedule(v=1.0, w=1.0, alpha=0.5, growth=1.0),
                       rd_fixed_cost=0.2)


def make_game(payoffs) -> BimatrixGame:
    return BimatrixGame(row_strategies=LABELS, col_strategies=LABELS, payoffs=payoffs)


def make_record(cycle: int, cost_level: float, differentiation: float) -> CycleRecord:
    return CycleRecord(cycle=cycle, phase1_profit_a=1, phase1_profit_b=1, choice_a='R&D', choice_b='R&D',
                       phase2_gross_a=0.5, phase2_gross_b=0.5, progress=1, cost_paid_a=0, cost_paid_b=0,
                       net_profit_a=0.5, net_profit_b=0.5, differentiation=differentiation, cost_level=cost_level)


# (cost before, cost after, D before, D after, expected dT)
MOCK_DATA_DECOMPOSE = [
    (1.0, 0.9, 1.0, 1.0, 0.1),
    (1.0, 1.0, 0.0, 1.0, 1.0),
    (1.0, 0.9, 0.0, 1.0, 1.1),
]


class CycleRunTest(unittest.TestCase):

    def test_two_cycles(self):
        records = cyclesim.run(make_config(num_cycles=2)).records
        self.assertEqual(len(records), 2)

        for record in records:
            self.assertAlmostEqual(record.phase1_profit_a, 1, places=12)
            self.assertAlmostEqual(record.phase1_profit_b, 1, places=12)
            self.assertEqual((record.choice_a, record.choice_b), ('R&D', 'R&D'))
            self.assertAlmostEqual(record.phase2_gross_a, 0.5, places=12)
            self.assertAlmostEqual(record.phase2_gross_b, 0.5, places=12)
            self.assertEqual(record.differentiation, 1.0)

        self.assertEqual((records[0].cost_paid_a, records[0].cost_paid_b), (0.2, 0.2))
        self.assertEqual((records[1].cost_paid_a, records[1].cost_paid_b), (0.1, 0.1))

    def test_five_cycles(self):
        trajectory = cyclesim.run(make_config())

        for t, record in enumerate(trajectory.records):
            self.assertEqual(record.cycle, t)
            self.assertEqual(record.progress, 2 ** t)
            self.assertEqual(record.cost_paid_a, 0.2 / 2 ** t)
            self.assertAlmostEqual(record.cost_level, 2 / 2 ** t, delta=1e-8)
            self.assertEqual(record.net_profit_a, record.phase2_gross_a - record.cost_paid_a)

        for step in cyclesim.decompose(trajectory):
            self.assertEqual(step.d_t, -step.d_c + step.d_d)
            self.assertLess(step.d_c, 0)
            self.assertEqual(step.d_d, 0)

    def test_phase2_uses_endpoint_locations(self):
        config = make_config(num_cycles=2).model_copy(update={'market': LinearMarket(length=2.0, disutility=0.5)})
        endpoints = hotelling.equilibrium_outcome(config.market, Locations(loc_a=0, loc_b=0))

        for record in cyclesim.run(config).records:
            self.assertAlmostEqual(record.phase2_gross_a, endpoints.profit_a, places=12)
            self.assertAlmostEqual(record.phase2_gross_b, endpoints.profit_b, places=12)
            self.assertEqual(record.differentiation, 2.0)

    def test_cost_levels_follow_cost_path(self):
        config = make_config()
        levels = [r.cost_level for r in cyclesim.run(config).records]
        self.assertListEqual(levels, techcost.cost_path(config.sched, 1.0, config.num_cycles))

    def test_rerun_is_identical(self):
        self.assertEqual(cyclesim.run(make_config()).model_dump_json(), cyclesim.run(make_config()).model_dump_json())

    def test_bundled_config(self):
        self.assertEqual(cyclesim.run(load_config(DATA_DIR / 'simulation.yaml')), cyclesim.run(make_config()))

    def test_net_profit_grows_with_progress(self):
        nets = [r.net_profit_a for r in cyclesim.run(make_config()).records]
        self.assertTrue(all(later > earlier for earlier, later in zip(nets, nets[1:])))

    def test_single_cycle(self):
        record, = cyclesim.run(make_config(num_cycles=1)).records
        self.assertEqual(record.progress, 1)
        self.assertEqual(record.cost_paid_a, 0.2)
        self.assertEqual(record.cost_paid_b, 0.2)

    def test_no_innovation(self):
        # NoR&D strictly dominant for both firms
        game = make_game([[(0, 0), (0, 1)], [(1, 0), (1, 1)]])
        for record in cyclesim.run(make_config(rd_game=game)).records:
            self.assertEqual((record.choice_a, record.choice_b), ('NoR&D', 'NoR&D'))
            self.assertEqual(record.differentiation, 0)
            self.assertEqual(record.phase2_gross_a, record.phase1_profit_a)
            self.assertEqual(record.phase2_gross_b, record.phase1_profit_b)
            self.assertEqual((record.cost_paid_a, record.cost_paid_b), (0, 0))

    def test_multiple_equilibria(self):
        game = make_game([[(2, 2), (0, 0)], [(0, 0), (1, 1)]])
        with self.assertRaises(MultipleEquilibriaError):
            cyclesim.run(make_config(rd_game=game))

    def test_no_pure_equilibrium(self):
        game = make_game([[(1, -1), (-1, 1)], [(-1, 1), (1, -1)]])
        with self.assertRaises(MultipleEquilibriaError):
            cyclesim.run(make_config(rd_game=game))

    def test_single_innovator(self):
        game = make_game([[(1, 0), (1, 1)], [(0, 0), (0, 1)]])
        with self.assertRaises(UnmodeledOutcomeError):
            cyclesim.run(make_config(rd_game=game))


class DecomposeTest(unittest.TestCase):

    def test_examples(self):
        for cost_0, cost_1, d_0, d_1, expected in MOCK_DATA_DECOMPOSE:
            trajectory = Trajectory(records=(make_record(0, cost_0, d_0), make_record(1, cost_1, d_1)))
            step, = cyclesim.decompose(trajectory)
            self.assertEqual((step.from_cycle, step.to_cycle), (0, 1))
            self.assertAlmostEqual(step.d_t, expected, places=12)

    def test_too_short(self):
        with self.assertRaises(TrajectoryTooShort):
            cyclesim.decompose(cyclesim.run(make_config(num_cycles=1)))


class SummarizeTest(unittest.TestCase):

    def test_summary(self):
        summary = cyclesim.summarize(cyclesim.run(make_config(num_cycles=2)))
        self.assertEqual(summary.cycles, 2)
        self.assertEqual(summary.innovation_cycles, 2)
        self.assertAlmostEqual(summary.cumulative_net_a, 0.3 + 0.4, places=12)
        self.assertAlmostEqual(summary.differentiation_premium_b, -1.0, places=12)
