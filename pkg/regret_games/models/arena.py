import typing as tp
from fractions import Fraction

from pydantic import PrivateAttr, root_validator, validator

from regret_games.exceptions import ArenaValidationError, UnknownVertexError

from .common import FrozenModel, Player, to_fraction


class Edge(FrozenModel):
    source: str
    target: str
    weight: Fraction
    label: tp.Optional[str] = None

    _to_fraction = validator("weight", pre=True, allow_reuse=True)(
        to_fraction
    )


class Arena(FrozenModel):
    """
    Weighted two-player arena.

    Vertex order is the declaration order and every derived iteration order
    follows it. Edges are addressed by their index in `edges`.
    """

    vertices: tp.Tuple[str, ...]
    eve_vertices: tp.FrozenSet[str]
    edges: tp.Tuple[Edge, ...]
    initial: str

    _index: tp.Dict[str, int] = PrivateAttr()
    _out: tp.Dict[str, tp.Tuple[int, ...]] = PrivateAttr()

    @root_validator(skip_on_failure=True)
    def _check_structure(
        cls,
        values: tp.Dict[str, tp.Any],
    ) -> tp.Dict[str, tp.Any]:
        vertices = values["vertices"]
        known = set(vertices)
        if len(known) != len(vertices):
            raise ArenaValidationError("Duplicate vertex declaration")
        if values["initial"] not in known:
            raise ArenaValidationError(
                f"Initial vertex {values['initial']!r} is not declared"
            )
        unknown_owned = values["eve_vertices"] - known
        if unknown_owned:
            raise ArenaValidationError(
                f"Eve vertices {sorted(unknown_owned)} are not declared"
            )
        has_successor = set()
        for i, edge in enumerate(values["edges"]):
            for end in (edge.source, edge.target):
                if end not in known:
                    raise ArenaValidationError(
                        f"Edge {i} uses unknown vertex {end!r}",
                        error_loc=("edges", i),
                    )
            has_successor.add(edge.source)
        stuck = [v for v in vertices if v not in has_successor]
        if stuck:
            raise ArenaValidationError(
                f"Arena is not total: {stuck} have no outgoing edge"
            )
        return values

    def __init__(self, **data: tp.Any) -> None:
        super().__init__(**data)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        out: tp.Dict[str, tp.List[int]] = {v: [] for v in self.vertices}
        for i, edge in enumerate(self.edges):
            out[edge.source].append(i)
        self._out = {v: tuple(ids) for v, ids in out.items()}

    @property
    def max_abs_weight(self) -> Fraction:
        return max((abs(e.weight) for e in self.edges), default=Fraction(0))

    @property
    def weights(self) -> tp.List[Fraction]:
        return sorted({e.weight for e in self.edges})

    def owner(self, vertex: str) -> Player:
        self.check_vertex(vertex)
        return Player.eve if vertex in self.eve_vertices else Player.adam

    def is_eve(self, vertex: str) -> bool:
        return vertex in self.eve_vertices

    def index(self, vertex: str) -> int:
        self.check_vertex(vertex)
        return self._index[vertex]

    def check_vertex(self, vertex: str) -> None:
        if vertex not in self._index:
            raise UnknownVertexError(vertex)

    def out_edges(self, vertex: str) -> tp.Tuple[int, ...]:
        self.check_vertex(vertex)
        return self._out[vertex]

    def successors(self, vertex: str) -> tp.List[str]:
        return [self.edges[i].target for i in self.out_edges(vertex)]

    def edge_between(self, source: str, target: str) -> int:
        """Lowest-index edge from source to target."""
        for i in self.out_edges(source):
            if self.edges[i].target == target:
                return i
        raise ArenaValidationError(f"No edge {source} -> {target}")

    def restrict(self, edge_ids: tp.Iterable[int]) -> "Arena":
        """Arena on the same vertices keeping only the given edges."""
        keep = sorted(set(edge_ids))
        return Arena(
            vertices=self.vertices,
            eve_vertices=self.eve_vertices,
            edges=tuple(self.edges[i] for i in keep),
            initial=self.initial,
        )

    def with_initial(self, vertex: str) -> "Arena":
        self.check_vertex(vertex)
        return Arena(
            vertices=self.vertices,
            eve_vertices=self.eve_vertices,
            edges=self.edges,
            initial=vertex,
        )
