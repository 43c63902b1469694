import functools
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import click

from errors import DuopolyError
from logging_setup import setup_loggers
from market_games import cournot, cyclesim, hotelling, rdgame, techcost, CournotMethod, PriceMethod
from models import LinearMarket, Locations, TechSchedule
from output_helpers import (OutputEnvelope, OutputFormat, COURNOT_COLUMNS, PRICES_COLUMNS, OUTCOME_COLUMNS,
                            SWEEP_COLUMNS, COST_COLUMNS, RDGAME_COLUMNS, TRAJECTORY_COLUMNS)
from parsing_utils import load_config, load_game
from settings import LOG_DIR, LOG_LEVEL
from utils import parse_grid_pair


logger = logging.getLogger(__name__)


def _choices(enum_cls) -> click.Choice:
    return click.Choice([m.value for m in enum_cls], case_sensitive=False)


def output_options(func: Callable) -> Callable:
    func = click.option('--output', 'output', type=click.Path(dir_okay=False), default=None,
                        help='Write the result to this file instead of stdout.')(func)
    func = click.option('--format', 'fmt', type=_choices(OutputFormat), default=OutputFormat.json.value,
                        show_default=True, help='Result format.')(func)
    return func


def handle_errors(func: Callable) -> Callable:
    """Domain and validation failures become a one line diagnostic and exit status 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (DuopolyError, ValueError) as e:
            logger.debug('command failed', exc_info=True)
            raise click.ClickException(f'{type(e).__name__}: {e}') from e
    return wrapper


def _emit(fmt: str, output: Optional[str], document: Dict[str, Any], rows: List[Dict[str, Any]],
          columns: List[str]) -> None:
    envelope = OutputEnvelope(fmt, destination=output)
    envelope.render(document, rows, columns)
    envelope.emit()


# CLI
@click.group(name='duopoly')
@click.option('--log-level', default=LOG_LEVEL, show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False))
def duopoly_cli(log_level: str):
    """Duopoly cycle solver: Cournot stage, Hotelling differentiation, cost decline and the R&D game."""
    setup_loggers(log_level.upper(), LOG_DIR)


# COURNOT
@duopoly_cli.command(name='cournot')
@click.option('--cap', 'caps', type=float, required=True, multiple=True,
              help='Demand intercept. Repeat the option to compare market sizes.')
@click.option('--method', type=_choices(CournotMethod), default=CournotMethod.closed.value, show_default=True)
@output_options
@handle_errors
def cournot_command(caps: Tuple[float, ...], method: str, fmt: str, output: Optional[str]):
    """Cournot equilibrium of the homogeneous product stage, one row per market size."""
    method = CournotMethod(method).value
    outcomes = cournot.capacity_path(caps, method=method)

    rows = [{'cap': cap, 'method': method, **outcome.model_dump()} for cap, outcome in zip(caps, outcomes)]
    document = {'method': method,
                'outcomes': [{'cap': cap, **outcome.model_dump()} for cap, outcome in zip(caps, outcomes)]}
    _emit(fmt, output, document, rows, COURNOT_COLUMNS)


# HOTELLING
@duopoly_cli.group(name='hotelling')
def hotelling_group():
    """Differentiation stage on the preference line."""


def hotelling_options(func: Callable) -> Callable:
    func = click.option('--locB', 'loc_b', type=float, required=True, help='Firm B distance from the right end.')(func)
    func = click.option('--locA', 'loc_a', type=float, required=True, help='Firm A distance from the left end.')(func)
    func = click.option('--c', 'disutility', type=float, required=True, help='Disutility per squared distance.')(func)
    func = click.option('--L', 'length', type=float, required=True, help='Length of the preference line.')(func)
    return func


@hotelling_group.command(name='prices')
@hotelling_options
@click.option('--method', type=_choices(PriceMethod), default=PriceMethod.closed.value, show_default=True)
@output_options
@handle_errors
def hotelling_prices_command(length: float, disutility: float, loc_a: float, loc_b: float, method: str,
                             fmt: str, output: Optional[str]):
    """Equilibrium prices for given locations."""
    market = LinearMarket(length=length, disutility=disutility)
    locs = Locations(loc_a=loc_a, loc_b=loc_b)
    prices = hotelling.price_equilibrium(market, locs, method=method)
    foc_a, foc_b = hotelling.foc_residuals(market, locs, prices)
    slope_a, slope_b = hotelling.price_slopes(market, locs)

    row = {**market.model_dump(), **locs.model_dump(), 'method': PriceMethod(method).value,
           **prices.model_dump(), 'foc_a': foc_a, 'foc_b': foc_b}
    document = {'market': market.model_dump(),
                'locations': locs.model_dump(),
                'method': row['method'],
                'prices': prices.model_dump(),
                'foc_residuals': {'a': foc_a, 'b': foc_b},
                'price_slopes': {'a': slope_a, 'b': slope_b}}
    _emit(fmt, output, document, [row], PRICES_COLUMNS)


@hotelling_group.command(name='outcome')
@hotelling_options
@output_options
@handle_errors
def hotelling_outcome_command(length: float, disutility: float, loc_a: float, loc_b: float,
                              fmt: str, output: Optional[str]):
    """Split, demands and profits at the equilibrium prices."""
    market = LinearMarket(length=length, disutility=disutility)
    locs = Locations(loc_a=loc_a, loc_b=loc_b)
    outcome = hotelling.equilibrium_outcome(market, locs)

    row = {**market.model_dump(), **locs.model_dump(), **outcome.model_dump()}
    document = {'market': market.model_dump(), 'locations': locs.model_dump(), 'outcome': outcome.model_dump()}
    _emit(fmt, output, document, [row], OUTCOME_COLUMNS)


@hotelling_group.command(name='sweep')
@click.option('--grid', required=True,
              help="Location grid 'start:stop:num' for both firms, or 'start:stop:num,start:stop:num'.")
@click.option('--L', 'length', type=float, default=1.0, show_default=True)
@click.option('--c', 'disutility', type=float, default=1.0, show_default=True)
@click.option('--step', type=float, default=None, help='Finite difference step (default 1e-5 * L).')
@output_options
@handle_errors
def hotelling_sweep_command(grid: str, length: float, disutility: float, step: Optional[float],
                            fmt: str, output: Optional[str]):
    """Prices, profits, F, dE and location gradients over a grid."""
    market = LinearMarket(length=length, disutility=disutility)
    grid_a, grid_b = parse_grid_pair(grid)
    frame = hotelling.sweep(market, grid_a, grid_b, step=step)

    rows = frame.to_dict(orient='records')
    document = {'market': market.model_dump(), 'grid': grid, 'rows': rows}
    _emit(fmt, output, document, rows, SWEEP_COLUMNS)


# COST
@duopoly_cli.command(name='cost')
@click.option('--v', 'v', type=float, required=True, help='Capital rental rate.')
@click.option('--w', 'w', type=float, required=True, help='Wage.')
@click.option('--alpha', type=float, required=True, help='Capital share of the Cobb-Douglas technology.')
@click.option('--q', 'q', type=float, required=True, help='Output.')
@click.option('--A', 'progress', type=float, default=1.0, show_default=True, help='Technology level A(t) >= 1.')
@output_options
@handle_errors
def cost_command(v: float, w: float, alpha: float, q: float, progress: float, fmt: str, output: Optional[str]):
    """Unit cost, total cost now and at the base period."""
    sched = TechSchedule(v=v, w=w, alpha=alpha, table=(1.0, progress))
    k, l = techcost.optimal_inputs(sched)

    row = {'v': v, 'w': w, 'alpha': alpha, 'q': q, 'progress': progress, 'k': k, 'l': l,
           'unit_cost': techcost.unit_cost(sched),
           'analytic_unit_cost': techcost.analytic_unit_cost(sched),
           'cost_at_t0': techcost.total_cost(sched, q, 0),
           'total_cost': techcost.total_cost(sched, q, 1),
           'cost_declined': techcost.cost_decline_check(sched, q, 1) if q > 0 else False}
    document = {'schedule': sched.model_dump(), **{k_: v_ for k_, v_ in row.items() if k_ not in ('v', 'w', 'alpha')}}
    _emit(fmt, output, document, [row], COST_COLUMNS)


# R&D GAME
@duopoly_cli.command(name='rdgame')
@click.option('--file', 'path', type=click.Path(exists=True, dir_okay=False), required=True)
@output_options
@handle_errors
def rdgame_command(path: str, fmt: str, output: Optional[str]):
    """Pure equilibria, dominant strategies and the dilemma classification of a game file."""
    game = load_game(path)
    equilibria = rdgame.pure_nash(game)
    nash_keys = {(p.row_choice, p.col_choice) for p in equilibria}
    dilemma = rdgame.classify_prisoners_dilemma(game) if game.shape == (2, 2) else None

    rows = [{'row_choice': r, 'col_choice': c, 'row_payoff': pay[0], 'col_payoff': pay[1],
             'is_nash': (r, c) in nash_keys}
            for r, payoff_row in zip(game.row_strategies, game.payoffs)
            for c, pay in zip(game.col_strategies, payoff_row)]
    document = {'game': game.model_dump(),
                'pure_nash': [p.model_dump() for p in equilibria],
                'dominant_strategies': rdgame.dominant_strategies(game).model_dump(),
                'prisoners_dilemma': dilemma and dilemma.model_dump()}
    _emit(fmt, output, document, rows, RDGAME_COLUMNS)


# SIMULATION
@duopoly_cli.command(name='simulate')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True)
@output_options
@handle_errors
def simulate_command(config_path: str, fmt: str, output: Optional[str]):
    """Run the periodic game cycle; CSV holds one row per cycle."""
    config = load_config(config_path)
    trajectory = cyclesim.run(config)

    rows = [r.model_dump() for r in trajectory.records]
    steps = cyclesim.decompose(trajectory) if len(trajectory.records) > 1 else []
    document = {'config': config.model_dump(),
                'trajectory': rows,
                'decomposition': [s.model_dump() for s in steps],
                'summary': cyclesim.summarize(trajectory).model_dump()}
    _emit(fmt, output, document, rows, TRAJECTORY_COLUMNS)


def dispatch(argv: Optional[List[str]] = None) -> int:
    try:
        duopoly_cli.main(args=argv, prog_name='duopoly', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(dispatch())
