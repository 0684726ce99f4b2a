"""
Simulation games for regret against word strategies.

Adam spells a word letter by letter while deterministic monitors track
what the best run on that word achieves; Eve resolves the automaton's
nondeterminism on the fly. Eve wins iff the chosen run stays within r
of the best run.
"""

import typing as tp
from collections import deque
from fractions import Fraction

from regret_games.log import solver_logger
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.common import PayoffKind
from regret_games.models.games import ParityGame, StreettGame
from regret_games.models.lasso import Lasso, LassoWord
from regret_games.models.monitors import DeterministicParityAutomaton
from regret_games.models.results import Spoiler
from regret_games.models.strategy import MooreStrategy
from regret_games.payoffs import lasso_value
from regret_games.transforms import (
    RecordedAutomaton,
    RecordMode,
    lift_automaton_strategy,
    record_automaton,
)
from regret_games.utils import parallel_map

from .determinize import (
    determinize_buchi_to_parity,
    determinize_liminf,
    threshold_monitor,
)
from .runs import word_value

Game = tp.Union[ParityGame, StreettGame]
Key = tp.Tuple[tp.Any, ...]

EVE, ADAM = "eve", "adam"


class SimulationGame(tp.NamedTuple):
    """A regret game together with the automaton moves behind its edges."""

    game: Game
    source: WeightedAutomaton
    payoff: PayoffKind
    recorded: tp.Optional[RecordedAutomaton]
    keys: tp.List[Key]
    # Adam edge -> letter, Eve edge -> transition of the resolved automaton
    letters: tp.Dict[int, str]
    moves: tp.Dict[int, int]

    @property
    def automaton(self) -> WeightedAutomaton:
        return self.source if self.recorded is None else (
            self.recorded.automaton
        )

    def source_weight(self, edge: int) -> Fraction:
        picked = self.moves[edge]
        if self.recorded is not None:
            picked = self.recorded.transition_origin[picked]
        return self.source.transitions[picked].weight


def _prepare(
    a: WeightedAutomaton,
    p: PayoffKind,
) -> tp.Tuple[WeightedAutomaton, tp.Optional[RecordedAutomaton]]:
    if p is PayoffKind.inf:
        recorded = record_automaton(a, RecordMode.min)
        return recorded.automaton, recorded
    if p is PayoffKind.sup:
        recorded = record_automaton(a, RecordMode.max)
        return recorded.automaton, recorded
    return a, None


class _Builder:
    """Breadth-first construction of the vertices reachable from the start."""

    def __init__(self) -> None:
        self.ids: tp.Dict[Key, int] = {}
        self.keys: tp.List[Key] = []
        self.queue: tp.Deque[Key] = deque()
        self.letters: tp.Dict[int, str] = {}
        self.moves: tp.Dict[int, int] = {}

    def visit(self, key: Key) -> int:
        if key not in self.ids:
            self.ids[key] = len(self.keys)
            self.keys.append(key)
            self.queue.append(key)
        return self.ids[key]

    @property
    def eve_vertices(self) -> tp.FrozenSet[int]:
        return frozenset(
            i for i, key in enumerate(self.keys) if key[0] == EVE
        )


def _at_most(value: Fraction, bound: Fraction, strict: bool) -> bool:
    return value < bound if strict else value <= bound


def build_parity_regret_game(
    a: WeightedAutomaton,
    r: Fraction,
    strict: bool = False,
    p: PayoffKind = PayoffKind.liminf,
) -> SimulationGame:
    """
    Parity game for LimInf (and Inf, after recording the running minimum).

    Adam's edge carries 2i+1 where x_i is the monitor output and Eve's edge
    carries 2i where x_{i-1} <= w + r < x_i, over the ordered weights of
    both automata. With a strict bound the interval closes the other way.
    """
    if p not in (PayoffKind.inf, PayoffKind.liminf):
        raise ValueError(f"Parity regret game does not handle {p.value}")
    b, recorded = _prepare(a, p)
    monitor = determinize_liminf(b)
    ordered = sorted(set(b.weights) | set(monitor.weights))
    rank = {x: i for i, x in enumerate(ordered, start=1)}

    def eve_priority(weight: Fraction) -> int:
        below = sum(
            1 for x in ordered if _at_most(x, weight + r, strict)
        )
        return 2 * (below + 1)

    builder = _Builder()
    builder.visit((ADAM, b.initial, monitor.initial))
    edges: tp.List[tp.Tuple[int, int, int]] = []
    while builder.queue:
        key = builder.queue.popleft()
        source = builder.ids[key]
        if key[0] == ADAM:
            _, state, tracked = key
            for letter in b.alphabet:
                following, output = monitor.step(tracked, letter)
                target = builder.visit((EVE, state, following, letter))
                builder.letters[len(edges)] = letter
                edges.append((source, target, 2 * rank[output] + 1))
        else:
            _, state, tracked, letter = key
            for i in b.moves(state, letter):
                trans = b.transitions[i]
                target = builder.visit((ADAM, trans.target, tracked))
                builder.moves[len(edges)] = i
                edges.append((source, target, eve_priority(trans.weight)))

    game = ParityGame(
        size=len(builder.keys),
        eve_vertices=builder.eve_vertices,
        initial=0,
        edges=tuple(edges),
    )
    solver_logger.debug(
        "Parity regret game: monitor=%d, vertices=%d, edges=%d",
        monitor.size,
        game.size,
        len(edges),
    )
    return SimulationGame(
        game, a, p, recorded, builder.keys, builder.letters, builder.moves,
    )


def _good(weight: Fraction, x: Fraction, r: Fraction, strict: bool) -> bool:
    return weight > x - r if strict else weight >= x - r


def _kept_thresholds(
    b: WeightedAutomaton,
    r: Fraction,
    strict: bool,
) -> tp.List[Fraction]:
    """
    Thresholds whose condition is not implied by a lower one.

    A threshold every transition meets is always satisfied, and one with
    the same good transitions as a lower threshold asks for nothing more.
    """
    kept: tp.List[Fraction] = []
    previous: tp.Optional[tp.FrozenSet[int]] = None
    everything = frozenset(range(len(b.transitions)))
    for x in b.weights:
        good = frozenset(
            i for i, trans in enumerate(b.transitions)
            if _good(trans.weight, x, r, strict)
        )
        if good != everything and good != previous:
            kept.append(x)
        previous = good
    return kept


def build_streett_regret_game(
    a: WeightedAutomaton,
    r: Fraction,
    strict: bool = False,
    p: PayoffKind = PayoffKind.limsup,
    jobs: int = 1,
) -> SimulationGame:
    """
    Streett game for LimSup (and Sup, after recording the running maximum).

    Adam's word is read by one parity monitor per threshold x. For each
    threshold and each even priority y of its monitor, seeing y infinitely
    often must be answered by a lower monitor priority or by an Eve
    transition of weight >= x - r (> with a strict bound).
    """
    if p not in (PayoffKind.sup, PayoffKind.limsup):
        raise ValueError(f"Streett regret game does not handle {p.value}")
    b, recorded = _prepare(a, p)
    thresholds = _kept_thresholds(b, r, strict)
    monitors: tp.List[DeterministicParityAutomaton] = parallel_map(
        lambda x: determinize_buchi_to_parity(threshold_monitor(b, x)),
        thresholds,
        jobs,
    )

    def met(weight: Fraction) -> int:
        return sum(1 for x in thresholds if _good(weight, x, r, strict))

    builder = _Builder()
    builder.visit((ADAM, b.initial, tuple(m.initial for m in monitors), 0))
    edges: tp.List[tp.Tuple[int, int]] = []
    while builder.queue:
        key = builder.queue.popleft()
        source = builder.ids[key]
        if key[0] == ADAM:
            _, state, tracked, _ = key
            for letter in b.alphabet:
                steps = [m.step(q, letter) for m, q in zip(monitors, tracked)]
                target = builder.visit((
                    EVE,
                    state,
                    tuple(q for q, _ in steps),
                    letter,
                    tuple(y for _, y in steps),
                ))
                builder.letters[len(edges)] = letter
                edges.append((source, target))
        else:
            _, state, tracked, letter, _ = key
            for i in b.moves(state, letter):
                trans = b.transitions[i]
                target = builder.visit(
                    (ADAM, trans.target, tracked, met(trans.weight))
                )
                builder.moves[len(edges)] = i
                edges.append((source, target))

    pairs = []
    for k, monitor in enumerate(monitors):
        answered = frozenset(
            v for v, key in enumerate(builder.keys)
            if key[0] == ADAM and key[3] > k
        )
        for y in sorted({y for _, y in monitor.delta.values()}):
            if y % 2:
                continue
            seen = frozenset(
                v for v, key in enumerate(builder.keys)
                if key[0] == EVE and key[4][k] == y
            )
            lower = frozenset(
                v for v, key in enumerate(builder.keys)
                if key[0] == EVE and key[4][k] < y
            )
            pairs.append((seen, lower | answered))

    game = StreettGame(
        size=len(builder.keys),
        eve_vertices=builder.eve_vertices,
        initial=0,
        edges=tuple(edges),
        pairs=tuple(pairs),
    )
    solver_logger.debug(
        "Streett regret game: thresholds=%d, monitors=%s, vertices=%d, "
        "pairs=%d",
        len(thresholds),
        [m.size for m in monitors],
        game.size,
        len(pairs),
    )
    return SimulationGame(
        game, a, p, recorded, builder.keys, builder.letters, builder.moves,
    )


def eve_strategy(
    sim: SimulationGame,
    strategy: MooreStrategy,
) -> MooreStrategy:
    """
    Eve's game strategy as a strategy resolving the source automaton.

    Memory pairs the Adam vertex the play is at with the game memory.
    """
    game = sim.game
    start = (game.initial, strategy.initial_memory)
    seen = {start}
    queue = deque([start])
    choice: tp.Dict[tp.Tuple[tp.Any, tp.Any], int] = {}
    update: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}
    while queue:
        vertex, memory = queue.popleft()
        state = sim.keys[vertex][1]
        for edge in game.out_edges(vertex):
            letter = sim.letters[edge]
            middle = game.edges[edge][1]
            inner = strategy.next_memory(memory, middle)
            picked = strategy.next_choice(inner, middle)
            target = game.edges[picked][1]
            following = (target, strategy.next_memory(inner, target))
            trans = sim.moves[picked]
            choice[((vertex, memory), (state, letter))] = trans
            update[((vertex, memory), trans)] = following
            if following not in seen:
                seen.add(following)
                queue.append(following)

    found = MooreStrategy(
        memory_states=tuple(sorted(seen, key=repr)),
        initial_memory=start,
        choice=choice,
        update=update,
    )
    if sim.recorded is not None:
        return lift_automaton_strategy(sim.recorded, found)
    return found


def spoiler(
    sim: SimulationGame,
    eve: MooreStrategy,
    adam: MooreStrategy,
) -> Spoiler:
    """Word on which Adam's strategy beats Eve's, read off their play."""
    game = sim.game
    vertex = game.initial
    eve_memory, adam_memory = eve.initial_memory, adam.initial_memory
    seen: tp.Dict[tp.Tuple[int, tp.Any, tp.Any], int] = {}
    played: tp.List[int] = []
    while (vertex, eve_memory, adam_memory) not in seen:
        seen[(vertex, eve_memory, adam_memory)] = len(played)
        player = eve if vertex in game.eve_vertices else adam
        memory = eve_memory if player is eve else adam_memory
        edge = player.next_choice(memory, vertex)
        played.append(edge)
        vertex = game.edges[edge][1]
        eve_memory = eve.next_memory(eve_memory, vertex)
        adam_memory = adam.next_memory(adam_memory, vertex)

    start = seen[(vertex, eve_memory, adam_memory)]
    stem, cycle = played[:start], played[start:]
    word = LassoWord(
        stem=[sim.letters[e] for e in stem if e in sim.letters],
        cycle=[sim.letters[e] for e in cycle if e in sim.letters],
    )
    achieved = lasso_value(
        Lasso(
            stem=[sim.source_weight(e) for e in stem if e in sim.moves],
            cycle=[sim.source_weight(e) for e in cycle if e in sim.moves],
        ),
        sim.payoff,
    )
    return Spoiler(
        word=word,
        best_value=word_value(sim.source, word, sim.payoff),
        achieved_value=achieved,
    )
