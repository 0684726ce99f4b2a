import typing as tp

from pydantic import PrivateAttr, root_validator

from regret_games.exceptions import ArenaValidationError

from .common import FrozenModel, Player
from .strategy import MooreStrategy


class _IndexedGame(FrozenModel):
    """Game graph over vertices 0..size-1."""

    size: int
    eve_vertices: tp.FrozenSet[int]
    initial: int
    names: tp.Tuple[str, ...] = ()

    _out: tp.List[tp.List[int]] = PrivateAttr()

    @classmethod
    def _check_graph(
        cls,
        size: int,
        initial: int,
        ends: tp.Iterable[tp.Tuple[int, int]],
    ) -> None:
        if not 0 <= initial < size:
            raise ArenaValidationError("Initial vertex out of range")
        has_successor = set()
        for source, target in ends:
            if not (0 <= source < size and 0 <= target < size):
                raise ArenaValidationError(
                    f"Edge {source}->{target} out of range"
                )
            has_successor.add(source)
        if len(has_successor) != size:
            raise ArenaValidationError("Game graph is not total")

    def _edge_ends(self) -> tp.Iterable[tp.Tuple[int, int]]:
        raise NotImplementedError

    def __init__(self, **data: tp.Any) -> None:
        super().__init__(**data)
        self._out = [[] for _ in range(self.size)]
        for i, (source, _) in enumerate(self._edge_ends()):
            self._out[source].append(i)

    def out_edges(self, vertex: int) -> tp.List[int]:
        return self._out[vertex]

    def owner(self, vertex: int) -> Player:
        return Player.eve if vertex in self.eve_vertices else Player.adam

    def name(self, vertex: int) -> str:
        return self.names[vertex] if self.names else str(vertex)


class ParityGame(_IndexedGame):
    """
    Edge-labelled parity game.

    Edges are (source, target, priority) triples. Eve wins a play iff the
    least priority seen infinitely often is odd.
    """

    edges: tp.Tuple[tp.Tuple[int, int, int], ...]

    @root_validator(skip_on_failure=True)
    def _check(cls, values: tp.Dict[str, tp.Any]) -> tp.Dict[str, tp.Any]:
        cls._check_graph(
            values["size"],
            values["initial"],
            ((s, t) for s, t, _ in values["edges"]),
        )
        if any(p < 0 for _, _, p in values["edges"]):
            raise ArenaValidationError("Priorities must be natural numbers")
        return values

    def _edge_ends(self) -> tp.Iterable[tp.Tuple[int, int]]:
        return ((s, t) for s, t, _ in self.edges)


class StreettGame(_IndexedGame):
    """
    Streett game over vertex pairs (E, F).

    Eve wins a play iff for every pair, visiting E infinitely often implies
    visiting F infinitely often.
    """

    edges: tp.Tuple[tp.Tuple[int, int], ...]
    pairs: tp.Tuple[tp.Tuple[tp.FrozenSet[int], tp.FrozenSet[int]], ...] = ()

    @root_validator(skip_on_failure=True)
    def _check(cls, values: tp.Dict[str, tp.Any]) -> tp.Dict[str, tp.Any]:
        cls._check_graph(values["size"], values["initial"], values["edges"])
        return values

    def _edge_ends(self) -> tp.Iterable[tp.Tuple[int, int]]:
        return iter(self.edges)


class ParitySolution(FrozenModel):
    """
    Winning regions with positional strategies.

    Strategies map a vertex to the index of the chosen edge; each player's
    map covers all of that player's vertices, winning or not.
    """

    winner: Player
    eve_region: tp.FrozenSet[int]
    adam_region: tp.FrozenSet[int]
    eve_strategy: tp.Dict[int, int]
    adam_strategy: tp.Dict[int, int]

    def __hash__(self) -> int:
        return hash((self.winner, self.eve_region, self.adam_region))


class StreettSolution(FrozenModel):
    """
    Streett game solution.

    Both strategies carry index-appearance-record memory: positions are
    vertices, choices are edge indices and observations are the vertices
    entered.
    """

    winner: Player
    eve_region: tp.FrozenSet[int]
    adam_region: tp.FrozenSet[int]
    eve_strategy: MooreStrategy
    adam_strategy: MooreStrategy
