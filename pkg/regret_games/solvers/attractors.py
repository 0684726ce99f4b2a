import typing as tp
from collections import deque

from .graphs import GameGraph

Strategy = tp.Dict[int, int]


class Attractor(tp.NamedTuple):
    region: tp.Set[int]
    strategy: Strategy


class BuchiSolution(tp.NamedTuple):
    region: tp.Set[int]
    strategy: Strategy
    opponent_strategy: Strategy


def attractor(
    graph: GameGraph,
    eve: bool,
    alive: tp.AbstractSet[int],
    target: tp.AbstractSet[int] = frozenset(),
    target_edges: tp.AbstractSet[int] = frozenset(),
) -> Attractor:
    """
    Vertices of `alive` from which the player forces a visit to `target`
    or a traversal of one of `target_edges`, moving inside `alive` only.

    The strategy maps the player's attracted vertices outside `target` to
    the edge that makes progress.
    """
    region = set(target) & set(alive)
    strategy: Strategy = {}
    remaining = {
        v: len(graph.alive_edges(v, alive))
        for v in alive
        if not graph.is_player(v, eve)
    }
    queue = deque(sorted(region))

    def hit(edge: int) -> None:
        source = graph.edges[edge][0]
        if source in region or source not in alive:
            return
        if graph.is_player(source, eve):
            region.add(source)
            strategy[source] = edge
            queue.append(source)
            return
        remaining[source] -= 1
        if remaining[source] == 0:
            region.add(source)
            queue.append(source)

    for edge in sorted(target_edges):
        source, dest = graph.edges[edge]
        if source in alive and dest in alive:
            hit(edge)
    while queue:
        vertex = queue.popleft()
        for edge in graph.inc[vertex]:
            if edge not in target_edges:
                hit(edge)
    return Attractor(region, strategy)


def trap_strategy(
    graph: GameGraph,
    eve: bool,
    region: tp.AbstractSet[int],
    avoid_edges: tp.AbstractSet[int] = frozenset(),
) -> Strategy:
    """Lowest edge staying in `region` and avoiding `avoid_edges`."""
    strategy = {}
    for vertex in sorted(region):
        if not graph.is_player(vertex, eve):
            continue
        for edge in graph.out[vertex]:
            if graph.edges[edge][1] in region and edge not in avoid_edges:
                strategy[vertex] = edge
                break
    return strategy


def solve_buchi(
    graph: GameGraph,
    eve: bool,
    alive: tp.AbstractSet[int],
    accepting_edges: tp.AbstractSet[int],
) -> BuchiSolution:
    """
    Region where the player forces infinitely many accepting edges.

    `alive` must induce a subgame. The opponent strategy is winning for the
    opponent on the rest of `alive`.
    """
    sub = set(alive)
    opponent: Strategy = {}
    while True:
        forced = attractor(graph, eve, sub, target_edges=accepting_edges)
        escape = sub - forced.region
        if not escape:
            return BuchiSolution(sub, forced.strategy, opponent)
        opponent.update(
            trap_strategy(graph, not eve, escape, accepting_edges)
        )
        lost = attractor(graph, not eve, sub, target=escape)
        opponent.update(lost.strategy)
        sub -= lost.region


def default_strategy(
    graph: GameGraph,
    eve: bool,
    strategy: Strategy,
) -> Strategy:
    """Complete a strategy with the lowest edge wherever it is undefined."""
    full = dict(strategy)
    for vertex in range(graph.size):
        if graph.is_player(vertex, eve) and vertex not in full:
            full[vertex] = graph.out[vertex][0]
    return full
