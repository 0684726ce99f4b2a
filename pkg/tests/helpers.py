import typing as tp
from fractions import Fraction

from regret_games.formats import parse_arena, parse_automaton
from regret_games.models.arena import Arena, Edge
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.lasso import LassoWord
from regret_games.models.monitors import (
    DeterministicParityAutomaton,
    DeterministicWeightedAutomaton,
)

from .constants import A0_PATH, G0_PATH, G1_PATH

EdgeSpec = tp.Tuple[str, str, tp.Any]


def read_g0() -> Arena:
    return parse_arena(G0_PATH.read_text())


def read_g1() -> Arena:
    return parse_arena(G1_PATH.read_text())


def read_a0() -> WeightedAutomaton:
    return parse_automaton(A0_PATH.read_text())


def make_arena(
    eve: tp.Sequence[str],
    adam: tp.Sequence[str],
    edges: tp.Iterable[EdgeSpec],
    initial: tp.Optional[str] = None,
) -> Arena:
    vertices = list(eve) + list(adam)
    return Arena(
        vertices=tuple(vertices),
        eve_vertices=frozenset(eve),
        edges=tuple(
            Edge(source=s, target=t, weight=w) for s, t, w in edges
        ),
        initial=initial or vertices[0],
    )


def word(stem: str, cycle: str) -> LassoWord:
    """Lasso word from space separated letters."""
    return LassoWord(stem=tuple(stem.split()), cycle=tuple(cycle.split()))


def _cycle_outputs(
    step: tp.Callable[[int, str], tp.Tuple[int, tp.Any]],
    initial: int,
    w: LassoWord,
) -> tp.List[tp.Any]:
    """Outputs a deterministic automaton repeats forever on a lasso word."""
    length = len(w.stem) + len(w.cycle)
    seen: tp.Dict[tp.Tuple[int, int], int] = {}
    outputs: tp.List[tp.Any] = []
    state, position = initial, 0
    while (state, position) not in seen:
        seen[(state, position)] = len(outputs)
        state, output = step(state, w.letter(position))
        outputs.append(output)
        position += 1
        if position == length:
            position = len(w.stem)
    return outputs[seen[(state, position)]:]


def deterministic_liminf(
    d: DeterministicWeightedAutomaton,
    w: LassoWord,
) -> Fraction:
    """LimInf of the outputs of a deterministic automaton on a lasso word."""
    return min(_cycle_outputs(d.step, d.initial, w))


def parity_accepts(d: DeterministicParityAutomaton, w: LassoWord) -> bool:
    return min(_cycle_outputs(d.step, d.initial, w)) % 2 == 0


def rescale(g: Arena, scale: Fraction, shift: Fraction) -> Arena:
    """Same arena with every weight w replaced by scale * w + shift."""
    return Arena(
        vertices=g.vertices,
        eve_vertices=g.eve_vertices,
        edges=tuple(
            Edge(
                source=e.source,
                target=e.target,
                weight=scale * e.weight + shift,
                label=e.label,
            )
            for e in g.edges
        ),
        initial=g.initial,
    )
