"""Runs of automata over lasso words and under fixed-memory strategies."""

import typing as tp
from fractions import Fraction

import networkx as nx

from regret_games.exceptions import StrategyError
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.common import PayoffKind
from regret_games.models.lasso import Lasso, LassoWord
from regret_games.models.strategy import MooreStrategy
from regret_games.payoffs import lasso_value
from regret_games.solvers.graphs import best_lasso

# (transition index, next memory)
Step = tp.Tuple[int, tp.Any]
Resolver = tp.Callable[[tp.Any, str, str], tp.Optional[Step]]


def next_position(word: LassoWord, position: int) -> int:
    position += 1
    if position < len(word.stem) + len(word.cycle):
        return position
    return len(word.stem)


def word_graph(a: WeightedAutomaton, word: LassoWord) -> nx.MultiDiGraph:
    """Runs of `a` on `word`; nodes are (state, position) pairs."""
    graph = nx.MultiDiGraph()
    length = len(word.stem) + len(word.cycle)
    for state in a.states:
        for position in range(length):
            letter = word.letter(position)
            following = next_position(word, position)
            for i in a.moves(state, letter):
                trans = a.transitions[i]
                graph.add_edge(
                    (state, position),
                    (trans.target, following),
                    key=i,
                    weight=trans.weight,
                )
    return graph


def word_value(
    a: WeightedAutomaton,
    word: LassoWord,
    payoff: PayoffKind,
) -> Fraction:
    """Value of the word: the best value over all runs."""
    value, _ = best_lasso(word_graph(a, word), (a.initial, 0), payoff)
    return value


def strategy_step(
    a: WeightedAutomaton,
    strategy: MooreStrategy,
) -> Resolver:
    """Resolver picking transitions the way `strategy` does."""

    def step(memory: tp.Any, state: str, letter: str) -> Step:
        moves = a.moves(state, letter)
        position = (state, letter)
        if len(moves) == 1 and not strategy.has_choice(memory, position):
            picked = moves[0]
        else:
            picked = strategy.next_choice(memory, position)
        if picked not in moves:
            raise StrategyError(
                f"Transition {picked!r} does not read {letter!r} "
                f"from {state!r}"
            )
        return picked, strategy.next_memory(memory, picked)

    return step


def strategy_run(
    a: WeightedAutomaton,
    strategy: MooreStrategy,
    word: LassoWord,
) -> Lasso:
    """Weights of the run the strategy builds on the word."""
    step = strategy_step(a, strategy)
    seen: tp.Dict[tp.Tuple[str, tp.Any, int], int] = {}
    weights: tp.List[Fraction] = []
    state, memory, position = a.initial, strategy.initial_memory, 0
    while (state, memory, position) not in seen:
        seen[(state, memory, position)] = len(weights)
        picked, memory = step(memory, state, word.letter(position))
        trans = a.transitions[picked]
        weights.append(trans.weight)
        state = trans.target
        position = next_position(word, position)
    start = seen[(state, memory, position)]
    return Lasso(stem=weights[:start], cycle=weights[start:])


def strategy_value(
    a: WeightedAutomaton,
    strategy: MooreStrategy,
    word: LassoWord,
    payoff: PayoffKind,
) -> Fraction:
    return lasso_value(strategy_run(a, strategy, word), payoff)
