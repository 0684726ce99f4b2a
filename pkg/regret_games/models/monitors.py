import typing as tp
from enum import Enum
from fractions import Fraction

from .automaton import WeightedAutomaton
from .common import FrozenModel


class Acceptance(str, Enum):
    buchi = "buchi"
    cobuchi = "cobuchi"


class ThresholdMonitor(FrozenModel):
    """
    Automaton with marked transitions.

    Under Buchi acceptance a run is accepting iff it takes marked
    transitions infinitely often; under co-Buchi acceptance iff it eventually
    takes only marked transitions.
    """

    automaton: WeightedAutomaton
    threshold: Fraction
    marked: tp.FrozenSet[int]
    acceptance: Acceptance


class DeterministicWeightedAutomaton(FrozenModel):
    """Deterministic total weighted automaton over states 0..size-1."""

    size: int
    initial: int
    alphabet: tp.Tuple[str, ...]
    delta: tp.Dict[tp.Tuple[int, str], tp.Tuple[int, Fraction]]
    names: tp.Tuple[str, ...] = ()

    def step(self, state: int, letter: str) -> tp.Tuple[int, Fraction]:
        return self.delta[(state, letter)]

    @property
    def weights(self) -> tp.List[Fraction]:
        return sorted({w for _, w in self.delta.values()})

    def __hash__(self) -> int:
        return hash((self.size, self.initial, self.alphabet))


class DeterministicParityAutomaton(FrozenModel):
    """
    Deterministic total parity automaton over states 0..size-1.

    Transitions carry priorities; a word is accepted iff the least priority
    seen infinitely often is even.
    """

    size: int
    initial: int
    alphabet: tp.Tuple[str, ...]
    delta: tp.Dict[tp.Tuple[int, str], tp.Tuple[int, int]]

    def step(self, state: int, letter: str) -> tp.Tuple[int, int]:
        return self.delta[(state, letter)]

    @property
    def max_priority(self) -> int:
        return max((p for _, p in self.delta.values()), default=0)

    def __hash__(self) -> int:
        return hash((self.size, self.initial, self.alphabet))
