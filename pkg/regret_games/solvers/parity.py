"""
Recursive (Zielonka) parity game solver.

Edge priorities are moved onto fresh middle vertices, one per edge; the
original vertices get a priority above every edge priority so that only
edges decide the least priority seen infinitely often.
"""

import typing as tp

from regret_games.log import solver_logger
from regret_games.models.common import Player
from regret_games.models.games import ParityGame, ParitySolution

from .attractors import Strategy, attractor
from .graphs import GameGraph


class _Solved(tp.NamedTuple):
    eve_region: tp.FrozenSet[int]
    adam_region: tp.FrozenSet[int]
    eve_strategy: Strategy
    adam_strategy: Strategy

    def region(self, eve: bool) -> tp.FrozenSet[int]:
        return self.eve_region if eve else self.adam_region

    def strategy(self, eve: bool) -> Strategy:
        return self.eve_strategy if eve else self.adam_strategy


def _solved(
    eve: bool,
    player_region: tp.AbstractSet[int],
    opponent_region: tp.AbstractSet[int],
    player_strategy: Strategy,
    opponent_strategy: Strategy,
) -> _Solved:
    if eve:
        return _Solved(
            frozenset(player_region),
            frozenset(opponent_region),
            player_strategy,
            opponent_strategy,
        )
    return _Solved(
        frozenset(opponent_region),
        frozenset(player_region),
        opponent_strategy,
        player_strategy,
    )


def _restrict(strategy: Strategy, region: tp.AbstractSet[int]) -> Strategy:
    return {v: e for v, e in strategy.items() if v in region}


class _Zielonka:

    def __init__(self, graph: GameGraph, priority: tp.List[int]) -> None:
        self.graph = graph
        self.priority = priority

    def solve(self, alive: tp.FrozenSet[int]) -> _Solved:
        if not alive:
            return _Solved(frozenset(), frozenset(), {}, {})
        graph = self.graph
        least = min(self.priority[v] for v in alive)
        eve = least % 2 == 1
        top = {v for v in alive if self.priority[v] == least}
        forced = attractor(graph, eve, alive, target=top)
        inner = self.solve(alive - forced.region)

        if not inner.region(not eve):
            strategy = dict(inner.strategy(eve))
            strategy.update(forced.strategy)
            for vertex in top:
                if graph.is_player(vertex, eve):
                    strategy[vertex] = graph.alive_edges(vertex, alive)[0]
            return _solved(eve, alive, frozenset(), strategy, {})

        lost = inner.region(not eve)
        pulled = attractor(graph, not eve, alive, target=lost)
        rest = self.solve(alive - pulled.region)
        opponent = _restrict(inner.strategy(not eve), lost)
        opponent.update(pulled.strategy)
        opponent.update(
            _restrict(rest.strategy(not eve), rest.region(not eve))
        )
        return _solved(
            eve,
            rest.region(eve),
            pulled.region | rest.region(not eve),
            _restrict(rest.strategy(eve), rest.region(eve)),
            opponent,
        )


def solve_parity(pg: ParityGame) -> ParitySolution:
    """Winning regions and positional strategies of both players."""
    n = pg.size
    top = max((p for _, _, p in pg.edges), default=0) + 1
    edges = []
    for i, (source, target, _) in enumerate(pg.edges):
        edges.append((source, n + i))
        edges.append((n + i, target))
    graph = GameGraph(
        n + len(pg.edges),
        [v in pg.eve_vertices for v in range(n)] + [True] * len(pg.edges),
        edges,
    )
    priority = [top] * n + [p for _, _, p in pg.edges]
    solved = _Zielonka(graph, priority).solve(frozenset(range(graph.size)))

    strategies: tp.Dict[bool, Strategy] = {True: {}, False: {}}
    for vertex in range(n):
        eve = vertex in pg.eve_vertices
        edge = solved.strategy(eve).get(vertex)
        if edge is None:
            strategies[eve][vertex] = pg.out_edges(vertex)[0]
        else:
            strategies[eve][vertex] = edge // 2

    eve_region = frozenset(v for v in solved.eve_region if v < n)
    solver_logger.debug(
        "Parity game solved: vertices=%d, edges=%d, eve_region=%d",
        n,
        len(pg.edges),
        len(eve_region),
    )
    return ParitySolution(
        winner=Player.eve if pg.initial in eve_region else Player.adam,
        eve_region=eve_region,
        adam_region=frozenset(range(n)) - eve_region,
        eve_strategy=strategies[True],
        adam_strategy=strategies[False],
    )
