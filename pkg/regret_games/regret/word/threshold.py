"""Threshold and value queries for regret against word strategies."""

import typing as tp
from fractions import Fraction

from regret_games.exceptions import UndecidableRequestError
from regret_games.log import solver_logger
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.common import PayoffKind, Player
from regret_games.models.games import ParityGame
from regret_games.models.results import WordRegretCertificate
from regret_games.models.strategy import MooreStrategy
from regret_games.solvers.parity import solve_parity
from regret_games.solvers.streett import solve_streett

from .fixed_memory import fixed_memory_regret_search
from .games import (
    SimulationGame,
    build_parity_regret_game,
    build_streett_regret_game,
    eve_strategy,
    spoiler,
)


def _solve(
    sim: SimulationGame,
) -> tp.Tuple[Player, MooreStrategy, MooreStrategy]:
    if isinstance(sim.game, ParityGame):
        solution = solve_parity(sim.game)
        return (
            solution.winner,
            MooreStrategy.positional(solution.eve_strategy),
            MooreStrategy.positional(solution.adam_strategy),
        )
    streett = solve_streett(sim.game)
    return streett.winner, streett.eve_strategy, streett.adam_strategy


def regret_word_threshold(
    a: WeightedAutomaton,
    p: PayoffKind,
    r: Fraction,
    strict: bool = False,
    jobs: int = 1,
) -> WordRegretCertificate:
    """
    Whether Eve can keep the regret against word strategies at most r
    (below r when strict), with a strategy or a spoiling word as proof.
    """
    if p.is_mean_payoff:
        raise UndecidableRequestError()
    if p in (PayoffKind.inf, PayoffKind.liminf):
        sim = build_parity_regret_game(a, r, strict, p)
    else:
        sim = build_streett_regret_game(a, r, strict, p, jobs)
    winner, eve, adam = _solve(sim)
    if winner is Player.eve:
        return WordRegretCertificate(
            answer=True, eve_strategy=eve_strategy(sim, eve),
        )
    return WordRegretCertificate(
        answer=False, spoiler=spoiler(sim, eve, adam),
    )


def _candidates(a: WeightedAutomaton) -> tp.List[Fraction]:
    weights = a.weights
    return sorted(
        {x - y for x in weights for y in weights if x >= y} | {Fraction(0)}
    )


def regret_word_value(
    a: WeightedAutomaton,
    p: PayoffKind,
    jobs: int = 1,
) -> tp.Tuple[Fraction, MooreStrategy]:
    """
    Least regret against word strategies, with a strategy achieving it.

    The regret is a difference of two weights, so a binary search over
    those differences with non-strict threshold queries finds it.
    """
    candidates = _candidates(a)
    low, high = 0, len(candidates) - 1
    best = regret_word_threshold(a, p, candidates[high], jobs=jobs)
    while low < high:
        middle = (low + high) // 2
        found = regret_word_threshold(a, p, candidates[middle], jobs=jobs)
        if found.answer:
            high, best = middle, found
        else:
            low = middle + 1
    solver_logger.info(
        "Word regret computed: payoff=%s, regret=%s",
        p.value,
        candidates[high],
    )
    return candidates[high], tp.cast(MooreStrategy, best.eve_strategy)


def is_good_for_games(
    a: WeightedAutomaton,
    p: PayoffKind,
    alpha: Fraction,
    strict: bool = False,
    jobs: int = 1,
) -> bool:
    """Whether nondeterminism can be resolved on the fly within alpha."""
    return regret_word_threshold(a, p, alpha, strict, jobs).answer


def is_dbp(
    a: WeightedAutomaton,
    p: PayoffKind,
    alpha: Fraction,
    k: int,
    strict: bool = False,
    budget: tp.Optional[int] = None,
) -> bool:
    """Whether pruning a k-bit refinement of `a` stays within alpha."""
    found = fixed_memory_regret_search(a, p, 2 ** k, alpha, strict, budget)
    return found is not None
