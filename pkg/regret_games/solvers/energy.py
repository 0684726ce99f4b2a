import math
import typing as tp
from collections import deque

from .attractors import Strategy
from .graphs import GameGraph

Credit = tp.Union[int, float]


class EnergySolution(tp.NamedTuple):
    # None marks vertices where no finite initial credit suffices
    credit: tp.Dict[int, tp.Optional[int]]
    strategy: Strategy

    @property
    def region(self) -> tp.Set[int]:
        return {v for v, c in self.credit.items() if c is not None}


def _credit_bounds(
    graph: GameGraph,
    alive: tp.AbstractSet[int],
    edges: tp.Dict[int, tp.List[int]],
    weights: tp.Sequence[int],
) -> tp.Dict[int, int]:
    """
    Largest finite credit a vertex can need: the number of vertices it
    reaches times the largest absolute weight among their edges.
    """
    bounds = {}
    for start in alive:
        seen = {start}
        queue = deque([start])
        heaviest = 0
        while queue:
            vertex = queue.popleft()
            for edge in edges[vertex]:
                heaviest = max(heaviest, abs(weights[edge]))
                target = graph.edges[edge][1]
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        bounds[start] = len(seen) * heaviest
    return bounds


def solve_energy(
    graph: GameGraph,
    eve: bool,
    alive: tp.AbstractSet[int],
    weights: tp.Sequence[int],
) -> EnergySolution:
    """
    Minimal initial credit for the player to keep the energy level
    nonnegative forever, inside the subgame `alive`.

    Small progress measures: credits are lifted until stable and a credit
    above the vertex bound is infinite. The region with finite credit is
    where the player ensures a mean payoff of at least zero.
    """
    edges = {
        v: [e for e in graph.out[v] if graph.edges[e][1] in alive]
        for v in alive
    }
    bounds = _credit_bounds(graph, alive, edges, weights)
    credit: tp.Dict[int, Credit] = {v: 0 for v in alive}

    def need(edge: int) -> Credit:
        return max(0, credit[graph.edges[edge][1]] - weights[edge])

    def lift(vertex: int) -> Credit:
        needs = [need(e) for e in edges[vertex]]
        value = min(needs) if graph.is_player(vertex, eve) else max(needs)
        return value if value <= bounds[vertex] else math.inf

    queue = deque(sorted(alive))
    queued = set(alive)
    while queue:
        vertex = queue.popleft()
        queued.discard(vertex)
        lifted = lift(vertex)
        if lifted <= credit[vertex]:
            continue
        credit[vertex] = lifted
        for edge in graph.inc[vertex]:
            pred = graph.edges[edge][0]
            if pred not in alive or pred in queued:
                continue
            if credit[pred] < math.inf:
                queue.append(pred)
                queued.add(pred)

    strategy: Strategy = {}
    for vertex in sorted(alive):
        if graph.is_player(vertex, eve):
            strategy[vertex] = min(edges[vertex], key=lambda e: (need(e), e))
    return EnergySolution(
        {
            v: (int(c) if c < math.inf else None)
            for v, c in credit.items()
        },
        strategy,
    )
