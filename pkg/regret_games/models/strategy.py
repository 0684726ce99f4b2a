import typing as tp

from pydantic import root_validator

from regret_games.exceptions import StrategyError

from .common import FrozenModel

Memory = tp.Hashable
Position = tp.Hashable
Choice = tp.Hashable
Observation = tp.Hashable


class MooreStrategy(FrozenModel):
    """
    Finite-memory strategy.

    `choice` maps (memory, position) to the chosen move and `update` maps
    (memory, observation) to the next memory. Pairs missing from `update`
    leave the memory unchanged.

    On arenas a position is a vertex, while choices and observations are
    edge indices. On automata a position is a (state, letter) pair, while
    choices and observations are transition indices.
    """

    memory_states: tp.Tuple[tp.Any, ...] = (0,)
    initial_memory: tp.Any = 0
    choice: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any]
    update: tp.Dict[tp.Tuple[tp.Any, tp.Any], tp.Any] = {}

    @root_validator(skip_on_failure=True)
    def _check_memory(
        cls,
        values: tp.Dict[str, tp.Any],
    ) -> tp.Dict[str, tp.Any]:
        memory = set(values["memory_states"])
        if not memory:
            raise StrategyError("Strategy needs at least one memory state")
        if values["initial_memory"] not in memory:
            raise StrategyError("Initial memory is not a memory state")
        for key, target in values["update"].items():
            if key[0] not in memory or target not in memory:
                raise StrategyError(f"Update {key} -> {target} leaves memory")
        for key in values["choice"]:
            if key[0] not in memory:
                raise StrategyError(f"Choice {key} uses unknown memory")
        return values

    @classmethod
    def positional(
        cls,
        choice: tp.Mapping[Position, Choice],
    ) -> "MooreStrategy":
        return cls(choice={(0, pos): move for pos, move in choice.items()})

    @property
    def memory_size(self) -> int:
        return len(self.memory_states)

    @property
    def is_positional(self) -> bool:
        return self.memory_size == 1

    def next_choice(self, memory: Memory, position: Position) -> Choice:
        try:
            return self.choice[(memory, position)]
        except KeyError:
            raise StrategyError(
                f"Strategy has no move at {position!r} with memory {memory!r}"
            ) from None

    def has_choice(self, memory: Memory, position: Position) -> bool:
        return (memory, position) in self.choice

    def next_memory(self, memory: Memory, observation: Observation) -> Memory:
        return self.update.get((memory, observation), memory)

    def __hash__(self) -> int:
        return hash((
            self.memory_states,
            self.initial_memory,
            frozenset(self.choice.items()),
            frozenset(self.update.items()),
        ))
