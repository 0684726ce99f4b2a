"""
Exact antagonistic mean-payoff values.

Values of a mean-payoff game on n vertices are fractions p/q with q <= n.
The vertex set is split recursively by threshold games: for a candidate c,
the vertices where Eve ensures mean payoff >= c form a subgame on which all
values are >= c, and the rest is a subgame on which all values are < c.
Each threshold game is an energy game on the shifted weights.
"""

import typing as tp
from fractions import Fraction

from regret_games.log import solver_logger
from regret_games.utils import common_denominator

from .attractors import Strategy
from .energy import solve_energy
from .graphs import GameGraph


class MeanPayoffSolution(tp.NamedTuple):
    values: tp.Dict[int, Fraction]
    eve_strategy: Strategy
    adam_strategy: Strategy


def _candidates(bound: int, size: int) -> tp.List[Fraction]:
    found = set()
    for q in range(1, size + 1):
        for p in range(-bound * q, bound * q + 1):
            found.add(Fraction(p, q))
    return sorted(found)


def _split_index(candidates: tp.Sequence[Fraction]) -> int:
    """Index of a middle candidate with the smallest denominator."""
    n = len(candidates)
    low = max(1, n // 4)
    high = min(n - 1, max(low, (3 * n) // 4))
    return min(
        range(low, high + 1),
        key=lambda i: (candidates[i].denominator, abs(i - n // 2)),
    )


def _shifted(
    weights: tp.Sequence[int],
    threshold: Fraction,
    sign: int,
) -> tp.List[int]:
    p, q = threshold.numerator, threshold.denominator
    return [sign * (q * w - p) for w in weights]


def mean_payoff_values(
    graph: GameGraph,
    weights: tp.Sequence[Fraction],
) -> MeanPayoffSolution:
    """Values of every vertex with optimal positional strategies."""
    scale = common_denominator(weights)
    scaled = [int(w * scale) for w in weights]
    bound = max((abs(w) for w in scaled), default=0)

    values: tp.Dict[int, Fraction] = {}
    eve: Strategy = {}
    adam: Strategy = {}
    splits = 0
    pending = [
        (frozenset(range(graph.size)), _candidates(bound, graph.size)),
    ]
    while pending:
        alive, candidates = pending.pop()
        if not alive:
            continue
        candidates = [c for c in candidates if c.denominator <= len(alive)]
        if len(candidates) == 1:
            (value,) = candidates
            eve.update(
                solve_energy(
                    graph, True, alive, _shifted(scaled, value, 1),
                ).strategy
            )
            adam.update(
                solve_energy(
                    graph, False, alive, _shifted(scaled, value, -1),
                ).strategy
            )
            values.update((v, value / scale) for v in alive)
            continue

        index = _split_index(candidates)
        threshold = candidates[index]
        region = frozenset(
            solve_energy(
                graph, True, alive, _shifted(scaled, threshold, 1),
            ).region
        )
        splits += 1
        pending.append((region, candidates[index:]))
        pending.append((alive - region, candidates[:index]))

    solver_logger.debug(
        "Mean-payoff values computed: vertices=%d, scale=%d, splits=%d",
        graph.size,
        scale,
        splits,
    )
    return MeanPayoffSolution(values, eve, adam)

