"""Antagonistic and cooperative values of weighted arenas."""

import typing as tp
from fractions import Fraction

from regret_games.log import solver_logger
from regret_games.models.arena import Arena
from regret_games.models.common import PayoffKind
from regret_games.models.results import GameValueResult
from regret_games.models.strategy import MooreStrategy
from regret_games.utils import parallel_map

from .attractors import (
    Strategy,
    attractor,
    default_strategy,
    solve_buchi,
    trap_strategy,
)
from .graphs import GameGraph, arena_graph, best_lasso
from .mean_payoff import mean_payoff_values


class GraphValues(tp.NamedTuple):
    values: tp.Dict[int, Fraction]
    eve_strategy: Strategy
    adam_strategy: Strategy


class ValueMap(tp.NamedTuple):
    values: tp.Dict[str, Fraction]
    eve_strategy: MooreStrategy
    adam_strategy: MooreStrategy


class _ThresholdGame(tp.NamedTuple):
    # vertices where Eve ensures a payoff >= threshold
    region: tp.Set[int]
    eve_strategy: Strategy
    adam_strategy: Strategy


def _threshold_game(
    graph: GameGraph,
    weights: tp.Sequence[Fraction],
    payoff: PayoffKind,
    threshold: Fraction,
) -> _ThresholdGame:
    alive = set(range(graph.size))
    high = {i for i, w in enumerate(weights) if w >= threshold}
    low = set(range(len(weights))) - high

    if payoff is PayoffKind.limsup:
        buchi = solve_buchi(graph, True, alive, high)
        return _ThresholdGame(
            buchi.region, buchi.strategy, buchi.opponent_strategy,
        )
    if payoff is PayoffKind.liminf:
        buchi = solve_buchi(graph, False, alive, low)
        return _ThresholdGame(
            alive - buchi.region, buchi.opponent_strategy, buchi.strategy,
        )
    if payoff is PayoffKind.inf:
        forced = attractor(graph, False, alive, target_edges=low)
        safe = alive - forced.region
        return _ThresholdGame(
            safe, trap_strategy(graph, True, safe, low), forced.strategy,
        )
    if payoff is PayoffKind.sup:
        forced = attractor(graph, True, alive, target_edges=high)
        rest = alive - forced.region
        return _ThresholdGame(
            forced.region,
            forced.strategy,
            trap_strategy(graph, False, rest, high),
        )
    raise ValueError(f"No threshold game for {payoff.value}")


def _threshold_values(
    graph: GameGraph,
    weights: tp.Sequence[Fraction],
    payoff: PayoffKind,
    jobs: int,
) -> GraphValues:
    """
    Values from the threshold games over the distinct weights.

    At a vertex of value x_i Eve follows the winning strategy of game i and
    Adam the one of game i+1. Values are monotone along plays consistent
    with either combined strategy, so the combination is optimal.
    """
    thresholds = sorted(set(weights))
    games = parallel_map(
        lambda x: _threshold_game(graph, weights, payoff, x),
        thresholds,
        jobs,
    )
    values: tp.Dict[int, Fraction] = {}
    eve: Strategy = {}
    adam: Strategy = {}
    for vertex in range(graph.size):
        rank = max(
            i for i, game in enumerate(games) if vertex in game.region
        )
        values[vertex] = thresholds[rank]
        if graph.is_player(vertex, True):
            if vertex in games[rank].eve_strategy:
                eve[vertex] = games[rank].eve_strategy[vertex]
        elif rank + 1 < len(games):
            if vertex in games[rank + 1].adam_strategy:
                adam[vertex] = games[rank + 1].adam_strategy[vertex]
    return GraphValues(
        values,
        default_strategy(graph, True, eve),
        default_strategy(graph, False, adam),
    )


def solve_values(
    graph: GameGraph,
    weights: tp.Sequence[Fraction],
    payoff: PayoffKind,
    jobs: int = 1,
) -> GraphValues:
    """Antagonistic values of all vertices with positional strategies."""
    if payoff.is_mean_payoff:
        solution = mean_payoff_values(graph, weights)
        return GraphValues(
            solution.values,
            default_strategy(graph, True, solution.eve_strategy),
            default_strategy(graph, False, solution.adam_strategy),
        )
    return _threshold_values(graph, weights, payoff, jobs)


def antagonistic_values(
    g: Arena,
    p: PayoffKind,
    jobs: int = 1,
) -> ValueMap:
    graph = GameGraph.from_arena(g)
    solution = solve_values(graph, [e.weight for e in g.edges], p, jobs)
    solver_logger.debug(
        "Antagonistic values solved: payoff=%s, vertices=%d, edges=%d",
        p.value,
        len(g.vertices),
        len(g.edges),
    )
    return ValueMap(
        {g.vertices[i]: value for i, value in solution.values.items()},
        _positional(g, solution.eve_strategy),
        _positional(g, solution.adam_strategy),
    )


def _positional(g: Arena, strategy: Strategy) -> MooreStrategy:
    return MooreStrategy.positional(
        {g.vertices[v]: edge for v, edge in strategy.items()}
    )


def antagonistic_value(
    g: Arena,
    p: PayoffKind,
    v: tp.Optional[str] = None,
    jobs: int = 1,
) -> GameValueResult:
    """aVal from v (the initial vertex by default)."""
    vertex = g.initial if v is None else v
    g.check_vertex(vertex)
    solution = antagonistic_values(g, p, jobs)
    return GameValueResult(
        value=solution.values[vertex],
        eve_strategy=solution.eve_strategy,
        adam_strategy=solution.adam_strategy,
    )


def cooperative_value(
    g: Arena,
    p: PayoffKind,
    v: tp.Optional[str] = None,
) -> GameValueResult:
    """
    cVal from v: the best play both players can produce together.

    Both strategies follow a witness lasso and take the lowest edge
    elsewhere.
    """
    vertex = g.initial if v is None else v
    g.check_vertex(vertex)
    value, lasso = best_lasso(arena_graph(g), vertex, p)
    eve: tp.Dict[str, int] = {}
    adam: tp.Dict[str, int] = {}
    for source, _, key in lasso.edges():
        (eve if g.is_eve(source) else adam)[source] = key
    for name in g.vertices:
        owned = eve if g.is_eve(name) else adam
        owned.setdefault(name, g.out_edges(name)[0])
    return GameValueResult(
        value=value,
        eve_strategy=MooreStrategy.positional(eve),
        adam_strategy=MooreStrategy.positional(adam),
    )


def cooperative_values(g: Arena, p: PayoffKind) -> tp.Dict[str, Fraction]:
    graph = arena_graph(g)
    return {v: best_lasso(graph, v, p)[0] for v in g.vertices}
