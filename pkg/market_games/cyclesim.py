import logging
from typing import List

from errors import MultipleEquilibriaError, TrajectoryTooShort, UnmodeledOutcomeError
from models import CournotMarket, CycleConfig, CycleRecord, DecompositionStep, Trajectory, TrajectorySummary
from . import cournot, hotelling, rdgame, techcost


logger = logging.getLogger(__name__)


def _innovation_choice(config: CycleConfig) -> tuple[str, str, bool]:
    equilibria = rdgame.pure_nash(config.rd_game)
    if len(equilibria) != 1:
        found = ', '.join(f'({p.row_choice}, {p.col_choice})' for p in equilibria) or 'none'
        raise MultipleEquilibriaError(f'the R&D game needs exactly one pure equilibrium, found: {found}')

    choice = equilibria[0]
    innovate_a = choice.row_choice == config.rd_label
    innovate_b = choice.col_choice == config.rd_label

    if innovate_a != innovate_b:
        raise UnmodeledOutcomeError(f'equilibrium ({choice.row_choice}, {choice.col_choice}) has a single '
                                    f'innovator; the one-sided differentiated state has no payoff model')

    return choice.row_choice, choice.col_choice, innovate_a


def run(config: CycleConfig) -> Trajectory:
    logger.info(f'simulation: {config.num_cycles} cycles, cap {config.cournot_cap}, '
                f'L {config.market.length}, c {config.market.disutility}')

    phase1 = cournot.equilibrium(CournotMarket(cap=config.cournot_cap))
    choice_a, choice_b, innovating = _innovation_choice(config)

    if innovating:
        phase2 = hotelling.maximal_differentiation(config.market)
        gross_a, gross_b = phase2.profit_a, phase2.profit_b
        differentiation = config.market.length
    else:
        gross_a, gross_b = phase1.profit_a, phase1.profit_b
        differentiation = 0.0

    cost_levels = techcost.cost_path(config.sched, 1.0, config.num_cycles)

    records = []
    for t in range(config.num_cycles):
        progress = techcost.progress(config.sched, t)
        cost_paid = config.rd_fixed_cost / progress if innovating else 0.0

        records.append(CycleRecord(cycle=t,
                                   phase1_profit_a=phase1.profit_a,
                                   phase1_profit_b=phase1.profit_b,
                                   choice_a=choice_a,
                                   choice_b=choice_b,
                                   phase2_gross_a=gross_a,
                                   phase2_gross_b=gross_b,
                                   progress=progress,
                                   cost_paid_a=cost_paid,
                                   cost_paid_b=cost_paid,
                                   net_profit_a=gross_a - cost_paid,
                                   net_profit_b=gross_b - cost_paid,
                                   differentiation=differentiation,
                                   cost_level=cost_levels[t]))
        logger.debug(f'cycle {t}: A = {progress}, cost paid {cost_paid}')

    logger.info('simulation complete')
    return Trajectory(records=tuple(records))


def decompose(trajectory: Trajectory) -> List[DecompositionStep]:
    """Splits each step of technological progress into cost decline and differentiation gain"""
    records = trajectory.records
    if len(records) < 2:
        raise TrajectoryTooShort(f'decomposition needs at least two cycles, got {len(records)}')

    steps = []
    for prev, curr in zip(records, records[1:]):
        d_c = curr.cost_level - prev.cost_level
        d_d = curr.differentiation - prev.differentiation
        steps.append(DecompositionStep(from_cycle=prev.cycle, to_cycle=curr.cycle, d_t=-d_c + d_d, d_c=d_c, d_d=d_d))

    return steps


def summarize(trajectory: Trajectory) -> TrajectorySummary:
    records = trajectory.records
    return TrajectorySummary(cycles=len(records),
                             innovation_cycles=sum(1 for r in records if r.differentiation > 0),
                             cumulative_net_a=sum(r.net_profit_a for r in records),
                             cumulative_net_b=sum(r.net_profit_b for r in records),
                             differentiation_premium_a=sum(r.phase2_gross_a - r.phase1_profit_a for r in records),
                             differentiation_premium_b=sum(r.phase2_gross_b - r.phase1_profit_b for r in records))
