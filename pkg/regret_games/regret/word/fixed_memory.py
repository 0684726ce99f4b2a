"""
Regret of fixed-memory strategies against word strategies.

A strategy is checked on the synchronous product of the automaton, which
follows the best run, with the automaton driven by the strategy. The
worst word is then a cycle of that product maximizing the gap between the
two components.
"""

import typing as tp
from fractions import Fraction

import networkx as nx

from regret_games.exceptions import Budget, StrategyError
from regret_games.log import solver_logger
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.common import PayoffKind
from regret_games.models.lasso import LassoWord
from regret_games.models.results import Spoiler
from regret_games.models.strategy import MooreStrategy
from regret_games.settings import get_config
from regret_games.solvers.graphs import (
    EdgeKey,
    GraphLasso,
    cyclic_components,
    lasso_through,
    max_cycle_mean,
    reachable,
)
from regret_games.transforms import RecordMode

from .runs import Resolver, strategy_step, strategy_value, word_value

_MODES = {PayoffKind.inf: RecordMode.min, PayoffKind.sup: RecordMode.max}


class StrategyRegret(tp.NamedTuple):
    regret: Fraction
    spoiler: Spoiler


def difference_product(
    a: WeightedAutomaton,
    p: PayoffKind,
    step: Resolver,
    memory: tp.Any,
) -> tp.Tuple[nx.MultiDiGraph, tp.Hashable]:
    """
    Product of the best run with the run `step` builds.

    Nodes are (best state, best record, own state, memory, own record);
    records hold the running extremum for Inf and Sup and are None
    otherwise. Edges carry the letter and both weights; `weight` is their
    difference. Own moves `step` leaves open are not expanded.
    """
    mode = _MODES.get(p)
    record: tp.Optional[Fraction] = None
    if mode is not None:
        bound = a.max_abs_weight
        record = bound if mode is RecordMode.min else -bound

    def combine(
        recorded: tp.Optional[Fraction],
        weight: Fraction,
    ) -> tp.Tuple[tp.Optional[Fraction], Fraction]:
        if mode is None or recorded is None:
            return None, weight
        value = mode.combine(recorded, weight)
        return value, value

    source = (a.initial, record, a.initial, memory, record)
    graph = nx.MultiDiGraph()
    graph.add_node(source)
    stack = [source]
    seen = {source}
    while stack:
        node = stack.pop()
        best_state, best_record, own_state, own_memory, own_record = node
        for letter in a.alphabet:
            picked = step(own_memory, own_state, letter)
            if picked is None:
                continue
            own, next_memory = picked
            own_trans = a.transitions[own]
            next_own, own_weight = combine(own_record, own_trans.weight)
            for i in a.moves(best_state, letter):
                trans = a.transitions[i]
                next_best, best_weight = combine(best_record, trans.weight)
                target = (
                    trans.target,
                    next_best,
                    own_trans.target,
                    next_memory,
                    next_own,
                )
                graph.add_edge(
                    node,
                    target,
                    key=(letter, i),
                    letter=letter,
                    best=best_weight,
                    own=own_weight,
                    weight=best_weight - own_weight,
                )
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
    return graph, source


def _gap_edges(
    graph: nx.MultiDiGraph,
    payoff: PayoffKind,
) -> tp.Iterator[tp.Tuple[Fraction, EdgeKey, nx.MultiDiGraph]]:
    """
    Gaps witnessed by cycles, each with an edge the cycle must take and
    the subgraph the cycle must stay in.
    """
    edges = list(graph.edges(keys=True, data=True))
    if payoff is PayoffKind.limsup:
        for bound in sorted({data["own"] for *_, data in edges}):
            low = graph.edge_subgraph(
                (u, v, k) for u, v, k, data in edges if data["own"] <= bound
            )
            for component in cyclic_components(low):
                for u, v, k, best in low.edges(keys=True, data="best"):
                    if u in component and v in component:
                        yield best - bound, (u, v, k), low
    else:
        for bound in sorted({data["best"] for *_, data in edges}):
            high = graph.edge_subgraph(
                (u, v, k) for u, v, k, data in edges if data["best"] >= bound
            )
            for component in cyclic_components(high):
                for u, v, k, own in high.edges(keys=True, data="own"):
                    if u in component and v in component:
                        yield bound - own, (u, v, k), high


def worst_gap(
    graph: nx.MultiDiGraph,
    source: tp.Hashable,
    p: PayoffKind,
) -> tp.Optional[tp.Tuple[Fraction, GraphLasso]]:
    """Largest gap over lassos from source, None if no cycle is reachable."""
    sub = graph.subgraph(reachable(graph, source))
    if not cyclic_components(sub):
        return None
    if p.is_mean_payoff:
        return max_cycle_mean(sub, source)
    gap, edge, within = max(
        _gap_edges(sub, p.recorded), key=lambda found: found[0],
    )
    return gap, lasso_through(sub, source, edge, within)


def _word(graph: nx.MultiDiGraph, lasso: GraphLasso) -> LassoWord:
    def letters(edges: tp.List[EdgeKey]) -> tp.List[str]:
        return [graph.edges[e]["letter"] for e in edges]

    return LassoWord(stem=letters(lasso.stem), cycle=letters(lasso.cycle))


def strategy_regret(
    a: WeightedAutomaton,
    p: PayoffKind,
    sigma: MooreStrategy,
) -> StrategyRegret:
    """Exact regret of `sigma` against word strategies, with a worst word."""
    graph, source = difference_product(
        a, p, strategy_step(a, sigma), sigma.initial_memory,
    )
    found = worst_gap(graph, source, p)
    if found is None:
        raise StrategyError("Strategy answers no infinite word")
    regret, lasso = found
    word = _word(graph, lasso)
    return StrategyRegret(
        regret,
        Spoiler(
            word=word,
            best_value=word_value(a, word, p),
            achieved_value=strategy_value(a, sigma, word, p),
        ),
    )


def _within(regret: Fraction, r: Fraction, strict: bool) -> bool:
    return regret < r if strict else regret <= r


def fixed_memory_regret_check(
    a: WeightedAutomaton,
    p: PayoffKind,
    sigma: MooreStrategy,
    r: Fraction,
    strict: bool = False,
) -> tp.Tuple[bool, tp.Optional[Spoiler]]:
    """Whether `sigma` keeps regret within r, with a spoiler if it does not."""
    regret, found = strategy_regret(a, p, sigma)
    if _within(regret, r, strict):
        return True, None
    return False, found


class _Plan:
    """Partial strategy grown along the configurations it reaches."""

    def __init__(self, a: WeightedAutomaton, memory: int) -> None:
        self.a = a
        self.memory = memory
        self.choice: tp.Dict[tp.Tuple[int, str, str], int] = {}
        self.update: tp.Dict[tp.Tuple[int, int], int] = {}
        self.configs: tp.List[tp.Tuple[int, str]] = [(0, a.initial)]
        self.known = {(0, a.initial)}
        self.used = 1

    def step(
        self,
        memory: int,
        state: str,
        letter: str,
    ) -> tp.Optional[tp.Tuple[int, int]]:
        picked = self.choice.get((memory, state, letter))
        if picked is None:
            return None
        return picked, self.update[(memory, picked)]

    def strategy(self) -> MooreStrategy:
        return MooreStrategy(
            memory_states=tuple(range(self.used)),
            initial_memory=0,
            choice={
                (memory, (state, letter)): picked
                for (memory, state, letter), picked in self.choice.items()
            },
            update={
                key: target
                for key, target in self.update.items()
                if key[0] != target
            },
        )


class _Search:
    """
    Depth-first enumeration of memory-bounded strategies.

    Decisions are taken per reachable (memory, state) configuration and
    letter; a fresh memory value is always the least unused one. Whenever a
    configuration is complete, the cycles already fixed give a lower bound
    on the regret of every completion.
    """

    def __init__(
        self,
        a: WeightedAutomaton,
        p: PayoffKind,
        memory: int,
        budget: tp.Optional[int],
    ) -> None:
        if memory < 1:
            raise StrategyError(
                f"Memory bound must be at least 1, got {memory}"
            )
        if budget is None:
            budget = get_config().solver_config.search_budget
        self.a = a
        self.p = p
        self.plan = _Plan(a, memory)
        self.budget = Budget(budget, "fixed-memory strategy search")

    def regret(self) -> tp.Optional[Fraction]:
        graph, source = difference_product(self.a, self.p, self.plan.step, 0)
        found = worst_gap(graph, source, self.p)
        return None if found is None else found[0]

    def run(
        self,
        prune: tp.Callable[[Fraction], bool],
    ) -> tp.Iterator[tp.Tuple[Fraction, MooreStrategy]]:
        yield from self._extend(0, prune)

    def _extend(
        self,
        cursor: int,
        prune: tp.Callable[[Fraction], bool],
    ) -> tp.Iterator[tp.Tuple[Fraction, MooreStrategy]]:
        plan = self.plan
        letters = self.a.alphabet
        if cursor and cursor % len(letters) == 0:
            bound = self.regret()
            if bound is not None and prune(bound):
                return
            if cursor == len(plan.configs) * len(letters):
                yield tp.cast(Fraction, bound), plan.strategy()
                return

        memory, state = plan.configs[cursor // len(letters)]
        letter = letters[cursor % len(letters)]
        for picked in self.a.moves(state, letter):
            target = self.a.transitions[picked].target
            for following in range(min(plan.used + 1, plan.memory)):
                self.budget.spend()
                used = plan.used
                plan.used = max(used, following + 1)
                plan.choice[(memory, state, letter)] = picked
                plan.update[(memory, picked)] = following
                config = (following, target)
                fresh = config not in plan.known
                if fresh:
                    plan.known.add(config)
                    plan.configs.append(config)

                yield from self._extend(cursor + 1, prune)

                if fresh:
                    plan.known.discard(config)
                    plan.configs.pop()
                del plan.choice[(memory, state, letter)]
                del plan.update[(memory, picked)]
                plan.used = used


def fixed_memory_regret_search(
    a: WeightedAutomaton,
    p: PayoffKind,
    m: int,
    r: Fraction,
    strict: bool = False,
    budget: tp.Optional[int] = None,
) -> tp.Optional[MooreStrategy]:
    """
    Some strategy with at most m memory states whose regret is within r.

    Raises BudgetExceededError when the search is cut short, so that None
    always means no such strategy exists.
    """
    search = _Search(a, p, m, budget)

    def prune(bound: Fraction) -> bool:
        return not _within(bound, r, strict)

    for _, strategy in search.run(prune):
        solver_logger.debug(
            "Fixed-memory search succeeded after %d nodes", search.budget.used,
        )
        return strategy
    solver_logger.debug(
        "Fixed-memory search exhausted after %d nodes", search.budget.used,
    )
    return None


def fixed_memory_regret_value(
    a: WeightedAutomaton,
    p: PayoffKind,
    m: int,
    budget: tp.Optional[int] = None,
) -> tp.Tuple[Fraction, MooreStrategy]:
    """Least regret over strategies with at most m memory states."""
    search = _Search(a, p, m, budget)
    best: tp.Optional[tp.Tuple[Fraction, MooreStrategy]] = None

    def prune(bound: Fraction) -> bool:
        return best is not None and bound >= best[0]

    for regret, strategy in search.run(prune):
        if best is None or regret < best[0]:
            best = (regret, strategy)
        if regret == 0:
            break
    if best is None:
        raise StrategyError(f"No strategy with at most {m} memory states")
    solver_logger.info(
        "Fixed-memory regret computed: payoff=%s, memory=%d, regret=%s",
        p.value,
        m,
        best[0],
    )
    return best
