"""Min/max recording transforms and strategy lifting back to the source."""

import typing as tp
from collections import deque
from enum import Enum
from fractions import Fraction

from .models.arena import Arena, Edge
from .models.automaton import Transition, WeightedAutomaton
from .models.strategy import MooreStrategy
from .utils import format_rational


class RecordMode(str, Enum):
    min = "min"
    max = "max"

    def combine(self, recorded: Fraction, weight: Fraction) -> Fraction:
        return min(recorded, weight) if self is RecordMode.min else max(
            recorded, weight,
        )


def record_id(name: str, recorded: Fraction) -> str:
    return f"{name}#{format_rational(recorded)}"


class RecordedArena(tp.NamedTuple):
    arena: Arena
    origin: tp.Dict[str, tp.Tuple[str, Fraction]]
    edge_origin: tp.Tuple[int, ...]


class RecordedAutomaton(tp.NamedTuple):
    automaton: WeightedAutomaton
    origin: tp.Dict[str, tp.Tuple[str, Fraction]]
    transition_origin: tp.Tuple[int, ...]


def _start(mode: RecordMode, bound: Fraction) -> Fraction:
    return bound if mode is RecordMode.min else -bound


def record_arena(g: Arena, mode: RecordMode) -> RecordedArena:
    """Reachable part of the arena that also records the extremal weight."""
    start = (g.initial, _start(mode, g.max_abs_weight))
    ids = {start: record_id(*start)}
    queue = deque([start])
    edges: tp.List[Edge] = []
    edge_origin: tp.List[int] = []
    while queue:
        vertex, recorded = queue.popleft()
        for i in g.out_edges(vertex):
            edge = g.edges[i]
            value = mode.combine(recorded, edge.weight)
            key = (edge.target, value)
            if key not in ids:
                ids[key] = record_id(*key)
                queue.append(key)
            edges.append(
                Edge(
                    source=ids[(vertex, recorded)],
                    target=ids[key],
                    weight=value,
                    label=edge.label,
                )
            )
            edge_origin.append(i)

    arena = Arena(
        vertices=tuple(ids.values()),
        eve_vertices=frozenset(
            name for (v, _), name in ids.items() if g.is_eve(v)
        ),
        edges=tuple(edges),
        initial=ids[start],
    )
    origin = {name: key for key, name in ids.items()}
    return RecordedArena(arena, origin, tuple(edge_origin))


def record_extremum_transform(g: Arena, mode: RecordMode) -> Arena:
    return record_arena(g, mode).arena


def record_automaton(
    a: WeightedAutomaton,
    mode: RecordMode,
) -> RecordedAutomaton:
    start = (a.initial, _start(mode, a.max_abs_weight))
    ids = {start: record_id(*start)}
    queue = deque([start])
    transitions: tp.List[Transition] = []
    transition_origin: tp.List[int] = []
    while queue:
        state, recorded = queue.popleft()
        for letter in a.alphabet:
            for i in a.moves(state, letter):
                trans = a.transitions[i]
                value = mode.combine(recorded, trans.weight)
                key = (trans.target, value)
                if key not in ids:
                    ids[key] = record_id(*key)
                    queue.append(key)
                transitions.append(
                    Transition(
                        source=ids[(state, recorded)],
                        letter=letter,
                        target=ids[key],
                        weight=value,
                    )
                )
                transition_origin.append(i)

    automaton = WeightedAutomaton(
        states=tuple(ids.values()),
        initial=ids[start],
        alphabet=a.alphabet,
        transitions=tuple(transitions),
    )
    origin = {name: key for key, name in ids.items()}
    return RecordedAutomaton(automaton, origin, tuple(transition_origin))


def _lifted_memory(
    strategy: MooreStrategy,
    memory: tp.Any,
    recorded: Fraction,
) -> tp.Any:
    return recorded if strategy.is_positional else (memory, recorded)


def lift_arena_strategy(
    recorded: RecordedArena,
    strategy: MooreStrategy,
) -> MooreStrategy:
    """
    Re-express a strategy of the recording arena on the source arena.

    The recorded extremum becomes part of the memory.
    """
    arena = recorded.arena
    choice: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}
    update: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}
    memory_states = []
    for name in arena.vertices:
        vertex, value = recorded.origin[name]
        for memory in strategy.memory_states:
            lifted = _lifted_memory(strategy, memory, value)
            memory_states.append(lifted)
            if strategy.has_choice(memory, name):
                picked = strategy.next_choice(memory, name)
                choice[(lifted, vertex)] = recorded.edge_origin[picked]
            for i in arena.out_edges(name):
                _, next_value = recorded.origin[arena.edges[i].target]
                next_memory = _lifted_memory(
                    strategy, strategy.next_memory(memory, i), next_value,
                )
                if next_memory != lifted:
                    update[(lifted, recorded.edge_origin[i])] = next_memory

    _, start = recorded.origin[arena.initial]
    return MooreStrategy(
        memory_states=tuple(dict.fromkeys(memory_states)),
        initial_memory=_lifted_memory(
            strategy, strategy.initial_memory, start,
        ),
        choice=choice,
        update=update,
    )


def lift_automaton_strategy(
    recorded: RecordedAutomaton,
    strategy: MooreStrategy,
) -> MooreStrategy:
    automaton = recorded.automaton
    choice: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}
    update: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}
    memory_states = []
    for name in automaton.states:
        state, value = recorded.origin[name]
        for memory in strategy.memory_states:
            lifted = _lifted_memory(strategy, memory, value)
            memory_states.append(lifted)
            for letter in automaton.alphabet:
                if strategy.has_choice(memory, (name, letter)):
                    picked = strategy.next_choice(memory, (name, letter))
                    choice[(lifted, (state, letter))] = (
                        recorded.transition_origin[picked]
                    )
                for i in automaton.moves(name, letter):
                    _, next_value = recorded.origin[
                        automaton.transitions[i].target
                    ]
                    next_memory = _lifted_memory(
                        strategy, strategy.next_memory(memory, i), next_value,
                    )
                    if next_memory != lifted:
                        update[
                            (lifted, recorded.transition_origin[i])
                        ] = next_memory

    _, start = recorded.origin[automaton.initial]
    return MooreStrategy(
        memory_states=tuple(dict.fromkeys(memory_states)),
        initial_memory=_lifted_memory(
            strategy, strategy.initial_memory, start,
        ),
        choice=choice,
        update=update,
    )


def negate_arena(g: Arena) -> Arena:
    """Same arena with every weight negated."""
    return Arena(
        vertices=g.vertices,
        eve_vertices=g.eve_vertices,
        edges=tuple(
            Edge(
                source=e.source,
                target=e.target,
                weight=-e.weight,
                label=e.label,
            )
            for e in g.edges
        ),
        initial=g.initial,
    )
