import typing as tp
from fractions import Fraction

from pydantic import PrivateAttr, root_validator, validator

from regret_games.exceptions import AutomatonValidationError

from .common import FrozenModel, to_fraction


class Transition(FrozenModel):
    source: str
    letter: str
    target: str
    weight: Fraction

    _to_fraction = validator("weight", pre=True, allow_reuse=True)(
        to_fraction
    )


class WeightedAutomaton(FrozenModel):
    """
    Nondeterministic weighted automaton over a finite alphabet.

    The value of a word is the supremum of its run values. Transitions are
    addressed by their index in `transitions`.
    """

    states: tp.Tuple[str, ...]
    initial: str
    alphabet: tp.Tuple[str, ...]
    transitions: tp.Tuple[Transition, ...]

    _moves: tp.Dict[tp.Tuple[str, str], tp.Tuple[int, ...]] = PrivateAttr()

    @root_validator(skip_on_failure=True)
    def _check_structure(
        cls,
        values: tp.Dict[str, tp.Any],
    ) -> tp.Dict[str, tp.Any]:
        states = values["states"]
        known = set(states)
        if len(known) != len(states):
            raise AutomatonValidationError("Duplicate state declaration")
        if len(set(values["alphabet"])) != len(values["alphabet"]):
            raise AutomatonValidationError("Duplicate letter in alphabet")
        if not values["alphabet"]:
            raise AutomatonValidationError("Alphabet is empty")
        if values["initial"] not in known:
            raise AutomatonValidationError(
                f"Initial state {values['initial']!r} is not declared"
            )
        letters = set(values["alphabet"])
        covered = set()
        for i, trans in enumerate(values["transitions"]):
            for end in (trans.source, trans.target):
                if end not in known:
                    raise AutomatonValidationError(
                        f"Transition {i} uses unknown state {end!r}",
                        error_loc=("transitions", i),
                    )
            if trans.letter not in letters:
                raise AutomatonValidationError(
                    f"Transition {i} reads unknown letter {trans.letter!r}",
                    error_loc=("transitions", i),
                )
            covered.add((trans.source, trans.letter))
        for state in states:
            for letter in values["alphabet"]:
                if (state, letter) not in covered:
                    raise AutomatonValidationError(
                        f"Automaton is not total: no {letter!r}-transition "
                        f"from {state!r}"
                    )
        return values

    def __init__(self, **data: tp.Any) -> None:
        super().__init__(**data)
        moves: tp.Dict[tp.Tuple[str, str], tp.List[int]] = {
            (q, a): [] for q in self.states for a in self.alphabet
        }
        for i, trans in enumerate(self.transitions):
            moves[(trans.source, trans.letter)].append(i)
        self._moves = {key: tuple(ids) for key, ids in moves.items()}

    def moves(self, state: str, letter: str) -> tp.Tuple[int, ...]:
        """Indices of transitions reading `letter` from `state`."""
        return self._moves[(state, letter)]

    @property
    def weights(self) -> tp.List[Fraction]:
        return sorted({t.weight for t in self.transitions})

    @property
    def max_abs_weight(self) -> Fraction:
        return max(
            (abs(t.weight) for t in self.transitions), default=Fraction(0),
        )

    @property
    def is_deterministic(self) -> bool:
        return all(len(ids) == 1 for ids in self._moves.values())

    def choice_points(self) -> tp.List[tp.Tuple[str, str]]:
        """(state, letter) pairs with more than one transition."""
        return [key for key, ids in self._moves.items() if len(ids) > 1]
