"""
Regret against a positional Adam.

The belief arena tracks, next to the current vertex, the edge set C still
compatible with what Adam has shown so far: once Adam leaves a vertex by an
edge, the other edges from that vertex are dropped. Edges are weighted by
the original weight minus the cooperative value of the arena restricted to
the new belief, taken from the initial vertex.
"""

import typing as tp
from collections import deque
from fractions import Fraction

from regret_games.log import solver_logger
from regret_games.models.arena import Arena, Edge
from regret_games.models.common import PayoffKind
from regret_games.models.results import RegretResult
from regret_games.models.strategy import MooreStrategy
from regret_games.solvers.graphs import arena_graph, best_lasso
from regret_games.solvers.values import antagonistic_values
from regret_games.transforms import RecordMode
from regret_games.utils import format_rational

Belief = tp.FrozenSet[int]
# (vertex, belief, recorded extremum or None)
BeliefState = tp.Tuple[str, Belief, tp.Optional[Fraction]]


class BeliefArena(tp.NamedTuple):
    arena: Arena
    # payoff read on the belief arena and payoff of the source arena
    payoff: PayoffKind
    source_payoff: PayoffKind
    beliefs: tp.Dict[Belief, int]
    cval_cache: tp.Dict[Belief, Fraction]
    origin: tp.Dict[str, BeliefState]
    edge_origin: tp.Tuple[int, ...]

    def memory(self, name: str) -> tp.Any:
        _, belief, recorded = self.origin[name]
        index = self.beliefs[belief]
        return index if recorded is None else (index, recorded)


class _Builder:

    def __init__(
        self,
        g: Arena,
        p: PayoffKind,
        mode: tp.Optional[RecordMode],
    ) -> None:
        self.g = g
        self.p = p
        self.mode = mode
        self.beliefs: tp.Dict[Belief, int] = {}
        self.cvals: tp.Dict[Belief, Fraction] = {}

    def cval(self, belief: Belief) -> Fraction:
        if belief not in self.cvals:
            graph = arena_graph(self.g, belief)
            self.cvals[belief] = best_lasso(graph, self.g.initial, self.p)[0]
        return self.cvals[belief]

    def name(self, state: BeliefState) -> str:
        vertex, belief, recorded = state
        index = self.beliefs.setdefault(belief, len(self.beliefs))
        if recorded is None:
            return f"{vertex}|b{index}"
        return f"{vertex}|b{index}#{format_rational(recorded)}"

    def successor(
        self,
        state: BeliefState,
        edge_id: int,
    ) -> tp.Tuple[BeliefState, Fraction]:
        _, belief, recorded = state
        edge = self.g.edges[edge_id]
        if not self.g.is_eve(edge.source):
            belief = belief - {
                i for i in self.g.out_edges(edge.source) if i != edge_id
            }
        following: tp.Optional[Fraction] = None
        weight = edge.weight
        if self.mode is not None and recorded is not None:
            weight = following = self.mode.combine(recorded, edge.weight)
        return (edge.target, belief, following), weight - self.cval(belief)

    def build(self) -> BeliefArena:
        g = self.g
        start: Fraction = g.max_abs_weight
        if self.mode is RecordMode.max:
            start = -start
        initial: BeliefState = (
            g.initial,
            frozenset(range(len(g.edges))),
            None if self.mode is None else start,
        )
        names = {initial: self.name(initial)}
        queue = deque([initial])
        edges: tp.List[Edge] = []
        edge_origin: tp.List[int] = []
        while queue:
            state = queue.popleft()
            vertex, belief, _ = state
            for i in g.out_edges(vertex):
                if i not in belief:
                    continue
                following, weight = self.successor(state, i)
                if following not in names:
                    names[following] = self.name(following)
                    queue.append(following)
                edges.append(
                    Edge(
                        source=names[state],
                        target=names[following],
                        weight=weight,
                        label=g.edges[i].label,
                    )
                )
                edge_origin.append(i)

        arena = Arena(
            vertices=tuple(names.values()),
            eve_vertices=frozenset(
                name for state, name in names.items() if g.is_eve(state[0])
            ),
            edges=tuple(edges),
            initial=names[initial],
        )
        solver_logger.debug(
            "Belief arena built: vertices=%d, edges=%d, beliefs=%d",
            len(arena.vertices),
            len(arena.edges),
            len(self.beliefs),
        )
        return BeliefArena(
            arena=arena,
            payoff=self.p.recorded,
            source_payoff=self.p,
            beliefs=dict(self.beliefs),
            cval_cache=dict(self.cvals),
            origin={name: state for state, name in names.items()},
            edge_origin=tuple(edge_origin),
        )


def build_belief_arena(g: Arena, p: PayoffKind) -> BeliefArena:
    if not p.is_prefix_independent:
        raise ValueError(
            f"{p.value} needs the recording belief arena"
        )
    return _Builder(g, p, None).build()


def build_recording_belief_arena(g: Arena, p: PayoffKind) -> BeliefArena:
    """
    Belief arena that also records the running minimum (Inf) or maximum
    (Sup) of the weights; it is read with LimInf (LimSup).
    """
    if p is PayoffKind.inf:
        return _Builder(g, p, RecordMode.min).build()
    if p is PayoffKind.sup:
        return _Builder(g, p, RecordMode.max).build()
    raise ValueError(f"{p.value} does not need the recording belief arena")


def _eve_strategy(
    belief: BeliefArena,
    strategy: MooreStrategy,
) -> MooreStrategy:
    """Eve's belief arena strategy with the belief as memory."""
    arena = belief.arena
    choice = {}
    update = {}
    for name in arena.vertices:
        vertex = belief.origin[name][0]
        memory = belief.memory(name)
        if arena.is_eve(name):
            picked = strategy.next_choice(0, name)
            choice[(memory, vertex)] = belief.edge_origin[picked]
        for i in arena.out_edges(name):
            following = belief.memory(arena.edges[i].target)
            if following != memory:
                update[(memory, belief.edge_origin[i])] = following
    return MooreStrategy(
        memory_states=tuple(
            dict.fromkeys(belief.memory(name) for name in arena.vertices)
        ),
        initial_memory=belief.memory(arena.initial),
        choice=choice,
        update=update,
    )


def _adam_witness(
    g: Arena,
    belief: BeliefArena,
    eve: MooreStrategy,
    adam: MooreStrategy,
) -> MooreStrategy:
    """
    Positional Adam strategy reaching the regret of Eve's strategy: the
    choices Adam reveals along the optimal play, completed by a best
    cooperative play in the arena restricted to the final belief.
    """
    arena = belief.arena
    choice: tp.Dict[str, int] = {}
    seen = set()
    name = arena.initial
    while name not in seen:
        seen.add(name)
        owner = eve if arena.is_eve(name) else adam
        picked = owner.next_choice(0, name)
        vertex = belief.origin[name][0]
        if not g.is_eve(vertex):
            choice[vertex] = belief.edge_origin[picked]
        name = arena.edges[picked].target

    final = belief.origin[name][1]
    _, lasso = best_lasso(
        arena_graph(g, final), g.initial, belief.source_payoff,
    )
    for source, _, key in lasso.edges():
        if not g.is_eve(source):
            choice.setdefault(source, key)
    for vertex in g.vertices:
        if not g.is_eve(vertex):
            choice.setdefault(vertex, g.out_edges(vertex)[0])
    return MooreStrategy.positional(choice)


def regret_memoryless(
    g: Arena,
    p: PayoffKind,
    jobs: int = 1,
) -> RegretResult:
    """Least regret Eve can ensure against positional Adam strategies."""
    if p.is_prefix_independent:
        belief = build_belief_arena(g, p)
    else:
        belief = build_recording_belief_arena(g, p)
    solution = antagonistic_values(belief.arena, belief.payoff, jobs)
    regret = -solution.values[belief.arena.initial]
    solver_logger.info(
        "Regret against positional Adam: payoff=%s, regret=%s",
        p.value,
        format_rational(regret),
    )
    return RegretResult(
        regret=regret,
        eve_strategy=_eve_strategy(belief, solution.eve_strategy),
        adam_witness=_adam_witness(
            g, belief, solution.eve_strategy, solution.adam_strategy,
        ),
    )
