from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')


# COURNOT STAGE
class CournotMarket(FrozenModel):
    cap: float = Field(ge=0)  # demand intercept, p = cap - (q_a + q_b)


class CournotOutcome(FrozenModel):
    q_a: float
    q_b: float
    price: float
    profit_a: float
    profit_b: float


# HOTELLING STAGE
class LinearMarket(FrozenModel):
    length: float = Field(gt=0)
    disutility: float = Field(gt=0)  # c in c * x^2


class Locations(FrozenModel):
    """loc_a is measured from the left endpoint, loc_b from the right one.
    The ordering constraint loc_a + loc_b < length needs a market and is checked by the solvers"""
    loc_a: float = Field(ge=0)
    loc_b: float = Field(ge=0)


class PricePair(FrozenModel):
    p_a: float = Field(ge=0)
    p_b: float = Field(ge=0)


class HotellingOutcome(FrozenModel):
    p_a: float
    p_b: float
    x: float
    y: float
    demand_a: float
    demand_b: float
    profit_a: float
    profit_b: float
    e_share: float


# TECHNOLOGICAL PROGRESS
class TechSchedule(FrozenModel):
    v: float = Field(gt=0)  # capital rental rate
    w: float = Field(gt=0)  # wage
    alpha: float = Field(gt=0, lt=1)
    growth: Optional[float] = Field(default=None, ge=0)
    table: Optional[Tuple[float, ...]] = None

    @field_validator('table')
    @classmethod
    def _check_table(cls, table: Optional[Tuple[float, ...]]) -> Optional[Tuple[float, ...]]:
        if table is None:
            return table

        if not table:
            raise ValueError('progress table is empty')
        if table[0] != 1:
            raise ValueError(f'progress table must start with A(0) = 1, got {table[0]}')
        if any(later < earlier for earlier, later in zip(table, table[1:])):
            raise ValueError('progress table must be non-decreasing')

        return table

    @model_validator(mode='after')
    def _one_progress_rule(self) -> 'TechSchedule':
        if self.growth is not None and self.table is not None:
            raise ValueError('set either growth or table, not both')
        return self


# R&D GAME
class BimatrixGame(FrozenModel):
    row_strategies: Tuple[str, ...]
    col_strategies: Tuple[str, ...]
    payoffs: Tuple[Tuple[Tuple[float, float], ...], ...]  # payoffs[row][col] = (row payoff, col payoff)

    @field_validator('row_strategies', 'col_strategies')
    @classmethod
    def _check_labels(cls, labels: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(labels) < 2:
            raise ValueError('each player needs at least two strategies')
        if len(set(labels)) != len(labels):
            raise ValueError(f'duplicated strategy labels: {labels}')
        return labels

    @model_validator(mode='after')
    def _check_shape(self) -> 'BimatrixGame':
        if len(self.payoffs) != len(self.row_strategies):
            raise ValueError(f'{len(self.payoffs)} payoff rows for {len(self.row_strategies)} row strategies')

        for idx, row in enumerate(self.payoffs):
            if len(row) != len(self.col_strategies):
                raise ValueError(f'payoff row {idx} has {len(row)} entries, '
                                 f'expected {len(self.col_strategies)}')
        return self

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_strategies), len(self.col_strategies)

    def row_payoffs(self) -> np.ndarray:
        return np.array([[pair[0] for pair in row] for row in self.payoffs], dtype=float)

    def col_payoffs(self) -> np.ndarray:
        return np.array([[pair[1] for pair in row] for row in self.payoffs], dtype=float)

    def profile(self, row_idx: int, col_idx: int) -> 'StrategyProfile':
        return StrategyProfile(row_choice=self.row_strategies[row_idx],
                               col_choice=self.col_strategies[col_idx],
                               payoffs=self.payoffs[row_idx][col_idx])


class StrategyProfile(FrozenModel):
    row_choice: str
    col_choice: str
    payoffs: Tuple[float, float]


class DominantStrategies(FrozenModel):
    row: Optional[str] = None
    col: Optional[str] = None


class DilemmaCertificate(FrozenModel):
    is_dilemma: bool
    equilibrium: Optional[StrategyProfile] = None
    dominating: Optional[StrategyProfile] = None


# CYCLE SIMULATION
class CycleConfig(FrozenModel):
    num_cycles: int = Field(ge=1)
    cournot_cap: float = Field(ge=0)
    market: LinearMarket
    rd_game: BimatrixGame
    sched: TechSchedule
    rd_fixed_cost: float = Field(ge=0)
    rd_label: str = 'R&D'

    @model_validator(mode='after')
    def _rd_label_exists(self) -> 'CycleConfig':
        for side, labels in (('row', self.rd_game.row_strategies), ('column', self.rd_game.col_strategies)):
            if self.rd_label not in labels:
                raise ValueError(f'innovation label {self.rd_label!r} is not a {side} strategy {labels}')
        return self


class CycleRecord(FrozenModel):
    cycle: int
    phase1_profit_a: float
    phase1_profit_b: float
    choice_a: str
    choice_b: str
    phase2_gross_a: float
    phase2_gross_b: float
    progress: float  # A(t)
    cost_paid_a: float
    cost_paid_b: float
    net_profit_a: float
    net_profit_b: float
    differentiation: float  # D(t)
    cost_level: float  # production cost of one unit at t


class Trajectory(FrozenModel):
    records: Tuple[CycleRecord, ...]


class DecompositionStep(FrozenModel):
    from_cycle: int
    to_cycle: int
    d_t: float
    d_c: float
    d_d: float


class TrajectorySummary(FrozenModel):
    cycles: int
    innovation_cycles: int
    cumulative_net_a: float
    cumulative_net_b: float
    differentiation_premium_a: float
    differentiation_premium_b: float

