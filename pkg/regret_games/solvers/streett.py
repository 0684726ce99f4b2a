"""
Streett games through an index appearance record.

The record is a permutation of the pair indices. Entering a vertex moves the
pairs whose F-set contains it to the back. Pairs whose F-set is seen finitely
often end up in a fixed prefix of the record, so a violated pair shows as an
E-visit left of every move position. Priorities encode exactly that: an
E-visit at position i emits 2i, a move starting at position i emits 2i-1.
"""

import typing as tp
from collections import deque

from regret_games.log import solver_logger
from regret_games.models.common import Player
from regret_games.models.games import (
    ParityGame,
    StreettGame,
    StreettSolution,
)
from regret_games.models.strategy import MooreStrategy

from .parity import solve_parity

Pair = tp.Tuple[tp.FrozenSet[int], tp.FrozenSet[int]]
Record = tp.Tuple[int, ...]


def reduce_pairs(pairs: tp.Iterable[Pair]) -> tp.List[Pair]:
    """
    Equivalent pair list with disjoint E and F and pairwise distinct F.

    Pairs with E inside F are always satisfied and are dropped.
    """
    merged: tp.Dict[tp.FrozenSet[int], tp.Set[int]] = {}
    for e_set, f_set in pairs:
        rest = e_set - f_set
        if rest:
            merged.setdefault(f_set, set()).update(rest)
    return [(frozenset(e_set), f_set) for f_set, e_set in merged.items()]


class _Record:

    def __init__(self, pairs: tp.Sequence[Pair]) -> None:
        self.pairs = pairs
        self.neutral = 2 * len(pairs) + 1

    def enter(self, record: Record, vertex: int) -> tp.Tuple[Record, int]:
        priority = self.neutral
        for position, pair in enumerate(record, start=1):
            if vertex in self.pairs[pair][0]:
                priority = 2 * position
                break
        moved = [pair for pair in record if vertex in self.pairs[pair][1]]
        if moved:
            first = record.index(moved[0]) + 1
            priority = min(priority, 2 * first - 1)
            record = tuple(
                pair for pair in record if pair not in moved
            ) + tuple(moved)
        return record, priority


class _Product(tp.NamedTuple):
    parity: ParityGame
    states: tp.List[tp.Tuple[int, Record]]
    edge_origin: tp.List[int]
    updates: tp.Dict[tp.Tuple[Record, int], Record]


def _product(sg: StreettGame, pairs: tp.Sequence[Pair]) -> _Product:
    record = _Record(pairs)
    start: Record = tuple(range(len(pairs)))
    index: tp.Dict[tp.Tuple[int, Record], int] = {}
    states: tp.List[tp.Tuple[int, Record]] = []
    queue: tp.Deque[tp.Tuple[int, Record]] = deque()

    def visit(state: tp.Tuple[int, Record]) -> int:
        if state not in index:
            index[state] = len(states)
            states.append(state)
            queue.append(state)
        return index[state]

    for vertex in range(sg.size):
        visit((vertex, start))
    edges: tp.List[tp.Tuple[int, int, int]] = []
    edge_origin: tp.List[int] = []
    updates: tp.Dict[tp.Tuple[Record, int], Record] = {}
    while queue:
        vertex, memory = queue.popleft()
        source = index[(vertex, memory)]
        for i in sg.out_edges(vertex):
            target = sg.edges[i][1]
            following, priority = record.enter(memory, target)
            updates[(memory, target)] = following
            edges.append((source, visit((target, following)), priority))
            edge_origin.append(i)

    parity = ParityGame(
        size=len(states),
        eve_vertices=frozenset(
            i for i, (v, _) in enumerate(states) if v in sg.eve_vertices
        ),
        initial=index[(sg.initial, start)],
        edges=tuple(edges),
    )
    return _Product(parity, states, edge_origin, updates)


def _strategy(
    product: _Product,
    strategy: tp.Dict[int, int],
    start: Record,
) -> MooreStrategy:
    choice = {}
    for state, edge in strategy.items():
        vertex, memory = product.states[state]
        choice[(memory, vertex)] = product.edge_origin[edge]
    memory_states = tuple(dict.fromkeys(m for _, m in product.states))
    return MooreStrategy(
        memory_states=memory_states,
        initial_memory=start,
        choice=choice,
        update={
            key: value
            for key, value in product.updates.items()
            if key[0] != value
        },
    )


def solve_streett(sg: StreettGame) -> StreettSolution:
    """Winner at the initial vertex with finite-memory strategies."""
    pairs = reduce_pairs(sg.pairs)
    product = _product(sg, pairs)
    solution = solve_parity(product.parity)
    start: Record = tuple(range(len(pairs)))
    solver_logger.debug(
        "Streett game solved: vertices=%d, pairs=%d, reduced=%d, product=%d",
        sg.size,
        len(sg.pairs),
        len(pairs),
        product.parity.size,
    )
    # product states 0..size-1 are the vertices with the initial record
    eve_region = frozenset(
        v for v in range(sg.size) if v in solution.eve_region
    )
    return StreettSolution(
        winner=Player.eve if sg.initial in eve_region else Player.adam,
        eve_region=eve_region,
        adam_region=frozenset(range(sg.size)) - eve_region,
        eve_strategy=_strategy(product, solution.eve_strategy, start),
        adam_strategy=_strategy(product, solution.adam_strategy, start),
    )
