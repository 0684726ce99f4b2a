"""
Graph helpers shared by the solvers.

Two representations are used: `GameGraph`, an index-based two-player graph
for fixpoint algorithms, and `networkx.MultiDiGraph` with a `weight` edge
attribute for cycle and path analysis of one-player graphs.
"""

import typing as tp
from collections import deque
from fractions import Fraction

import networkx as nx

from regret_games.exceptions import ArenaValidationError, UnknownVertexError
from regret_games.models.arena import Arena
from regret_games.models.common import PayoffKind
from regret_games.models.lasso import Lasso

Node = tp.Hashable
EdgeKey = tp.Tuple[Node, Node, tp.Hashable]


class GameGraph:
    """Two-player game graph over vertices 0..size-1."""

    def __init__(
        self,
        size: int,
        eve: tp.Sequence[bool],
        edges: tp.Sequence[tp.Tuple[int, int]],
    ) -> None:
        self.size = size
        self.eve = list(eve)
        self.edges = list(edges)
        self.out: tp.List[tp.List[int]] = [[] for _ in range(size)]
        self.inc: tp.List[tp.List[int]] = [[] for _ in range(size)]
        for i, (source, target) in enumerate(self.edges):
            self.out[source].append(i)
            self.inc[target].append(i)

    @classmethod
    def from_arena(cls, arena: Arena) -> "GameGraph":
        return cls(
            len(arena.vertices),
            [arena.is_eve(v) for v in arena.vertices],
            [
                (arena.index(e.source), arena.index(e.target))
                for e in arena.edges
            ],
        )

    def is_player(self, vertex: int, eve: bool) -> bool:
        return self.eve[vertex] == eve

    def alive_edges(
        self,
        vertex: int,
        alive: tp.AbstractSet[int],
    ) -> tp.List[int]:
        return [e for e in self.out[vertex] if self.edges[e][1] in alive]


class GraphLasso(tp.NamedTuple):
    stem: tp.List[EdgeKey]
    cycle: tp.List[EdgeKey]

    def weights(self, graph: nx.MultiDiGraph) -> Lasso:
        return Lasso(
            stem=[_weight(graph, e) for e in self.stem],
            cycle=[_weight(graph, e) for e in self.cycle],
        )

    def edges(self) -> tp.List[EdgeKey]:
        return self.stem + self.cycle


def _weight(graph: nx.MultiDiGraph, edge: EdgeKey) -> Fraction:
    u, v, key = edge
    return graph.edges[u, v, key]["weight"]


def arena_graph(
    arena: Arena,
    edge_ids: tp.Optional[tp.Iterable[int]] = None,
) -> nx.MultiDiGraph:
    """One-player view of an arena; edge keys are arena edge indices."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(arena.vertices)
    ids = range(len(arena.edges)) if edge_ids is None else sorted(edge_ids)
    for i in ids:
        edge = arena.edges[i]
        graph.add_edge(edge.source, edge.target, key=i, weight=edge.weight)
    return graph


def reachable(graph: nx.MultiDiGraph, source: Node) -> tp.Set[Node]:
    return {source} | nx.descendants(graph, source)


def cyclic_components(graph: nx.MultiDiGraph) -> tp.List[tp.Set[Node]]:
    """Strongly connected components that carry at least one cycle."""
    order = {node: i for i, node in enumerate(graph.nodes)}
    components = []
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            components.append(component)
            continue
        (node,) = component
        if any(v == node for _, v in graph.out_edges(node)):
            components.append(component)
    components.sort(key=lambda c: min(order[n] for n in c))
    return components


def _component_edges(
    graph: nx.MultiDiGraph,
    component: tp.AbstractSet[Node],
) -> tp.List[tp.Tuple[Node, Node, tp.Hashable, Fraction]]:
    return [
        (u, v, key, weight)
        for u, v, key, weight in graph.edges(keys=True, data="weight")
        if u in component and v in component
    ]


def karp_cycle_mean(
    graph: nx.MultiDiGraph,
    component: tp.AbstractSet[Node],
) -> Fraction:
    """Maximum cycle mean inside a strongly connected component."""
    nodes = list(component)
    n = len(nodes)
    edges = _component_edges(graph, component)
    walks: tp.List[tp.Dict[Node, tp.Optional[Fraction]]] = [
        {node: None for node in nodes} for _ in range(n + 1)
    ]
    walks[0][nodes[0]] = Fraction(0)
    for k in range(1, n + 1):
        previous, current = walks[k - 1], walks[k]
        for u, v, _, weight in edges:
            if previous[u] is None:
                continue
            candidate = previous[u] + weight
            if current[v] is None or candidate > current[v]:
                current[v] = candidate

    best: tp.Optional[Fraction] = None
    for node in nodes:
        last = walks[n][node]
        if last is None:
            continue
        worst = min(
            Fraction(last - walks[k][node], n - k)
            for k in range(n)
            if walks[k][node] is not None
        )
        if best is None or worst > best:
            best = worst
    if best is None:
        raise ArenaValidationError("Component carries no cycle")
    return best


def tight_cycle(
    graph: nx.MultiDiGraph,
    component: tp.AbstractSet[Node],
    mean: Fraction,
) -> tp.List[EdgeKey]:
    """A cycle of the component whose mean weight equals `mean`."""
    edges = _component_edges(graph, component)
    potential = {node: Fraction(0) for node in component}
    for _ in range(len(potential)):
        changed = False
        for u, v, _, weight in edges:
            candidate = potential[u] + weight - mean
            if candidate > potential[v]:
                potential[v] = candidate
                changed = True
        if not changed:
            break

    tight = nx.MultiDiGraph()
    for u, v, key, weight in edges:
        if potential[u] + weight - mean == potential[v]:
            tight.add_edge(u, v, key=key, weight=weight)
    return [tuple(e[:3]) for e in nx.find_cycle(tight)]


def path_to(
    graph: nx.MultiDiGraph,
    source: Node,
    targets: tp.AbstractSet[Node],
) -> tp.Optional[tp.List[EdgeKey]]:
    """Shortest path from source into targets using lowest edge keys."""
    if source in targets:
        return []
    parent: tp.Dict[Node, EdgeKey] = {}
    seen = {source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for _, succ, key in sorted(
            graph.out_edges(node, keys=True), key=_edge_order,
        ):
            if succ in seen:
                continue
            seen.add(succ)
            parent[succ] = (node, succ, key)
            if succ in targets:
                path = []
                while succ != source:
                    edge = parent[succ]
                    path.append(edge)
                    succ = edge[0]
                return path[::-1]
            queue.append(succ)
    return None


def _edge_order(edge: tp.Tuple[Node, Node, tp.Hashable]) -> tp.Any:
    key = edge[2]
    return key if isinstance(key, (int, tuple)) else str(key)


def _rotate(cycle: tp.List[EdgeKey], start: Node) -> tp.List[EdgeKey]:
    for i, edge in enumerate(cycle):
        if edge[0] == start:
            return cycle[i:] + cycle[:i]
    raise ValueError(f"{start!r} is not on the cycle")


def _lasso_to_cycle(
    graph: nx.MultiDiGraph,
    source: Node,
    cycle: tp.List[EdgeKey],
) -> GraphLasso:
    stem = path_to(graph, source, {e[0] for e in cycle})
    if stem is None:
        raise ArenaValidationError("Cycle is not reachable")
    entry = stem[-1][1] if stem else source
    return GraphLasso(stem, _rotate(cycle, entry))


def _cycle_through(
    graph: nx.MultiDiGraph,
    edge: EdgeKey,
) -> tp.List[EdgeKey]:
    back = path_to(graph, edge[1], {edge[0]})
    if back is None:
        raise ArenaValidationError("Edge does not lie on a cycle")
    return [edge] + back


def max_cycle_mean(
    graph: nx.MultiDiGraph,
    source: Node,
) -> tp.Tuple[Fraction, GraphLasso]:
    """Maximum mean over cycles reachable from source, with a witness."""
    if source not in graph:
        raise UnknownVertexError(source)
    sub = graph.subgraph(reachable(graph, source))
    best: tp.Optional[tp.Tuple[Fraction, tp.Set[Node]]] = None
    for component in cyclic_components(sub):
        mean = karp_cycle_mean(sub, component)
        if best is None or mean > best[0]:
            best = (mean, component)
    if best is None:
        raise ArenaValidationError(f"No cycle reachable from {source!r}")
    mean, component = best
    cycle = tight_cycle(sub, component, mean)
    return mean, _lasso_to_cycle(graph, source, cycle)


def _best_limsup(
    graph: nx.MultiDiGraph,
    source: Node,
) -> tp.Tuple[Fraction, GraphLasso]:
    sub = graph.subgraph(reachable(graph, source))
    best: tp.Optional[tp.Tuple[Fraction, EdgeKey]] = None
    for component in cyclic_components(sub):
        for u, v, key, weight in _component_edges(sub, component):
            if best is None or weight > best[0]:
                best = (weight, (u, v, key))
    if best is None:
        raise ArenaValidationError(f"No cycle reachable from {source!r}")
    weight, edge = best
    cycle = _cycle_through(sub, edge)
    return weight, _lasso_to_cycle(graph, source, cycle)


def _above(graph: nx.MultiDiGraph, bound: Fraction) -> nx.MultiDiGraph:
    return graph.edge_subgraph(
        (u, v, key)
        for u, v, key, weight in graph.edges(keys=True, data="weight")
        if weight >= bound
    )


def _best_liminf(
    graph: nx.MultiDiGraph,
    source: Node,
) -> tp.Tuple[Fraction, GraphLasso]:
    sub = graph.subgraph(reachable(graph, source))
    weights = sorted({w for _, _, w in sub.edges(data="weight")}, reverse=True)
    for bound in weights:
        above = _above(sub, bound)
        components = cyclic_components(above)
        if components:
            cycle = [tuple(e[:3]) for e in nx.find_cycle(
                above.subgraph(components[0]),
            )]
            return bound, _lasso_to_cycle(graph, source, cycle)
    raise ArenaValidationError(f"No cycle reachable from {source!r}")


def _best_inf(
    graph: nx.MultiDiGraph,
    source: Node,
) -> tp.Tuple[Fraction, GraphLasso]:
    sub = graph.subgraph(reachable(graph, source))
    weights = sorted({w for _, _, w in sub.edges(data="weight")}, reverse=True)
    for bound in weights:
        above = _above(sub, bound)
        if source not in above:
            continue
        inside = above.subgraph(reachable(above, source))
        try:
            found = nx.find_cycle(inside, source)
        except nx.NetworkXNoCycle:
            continue
        cycle = [tuple(e[:3]) for e in found]
        return bound, _lasso_to_cycle(inside, source, cycle)
    raise ArenaValidationError(f"No cycle reachable from {source!r}")


def _reaching(
    graph: nx.MultiDiGraph,
    targets: tp.Set[Node],
) -> tp.Set[Node]:
    """Nodes with a path into targets."""
    found = set(targets)
    queue = deque(targets)
    while queue:
        node = queue.popleft()
        for pred in graph.predecessors(node):
            if pred not in found:
                found.add(pred)
                queue.append(pred)
    return found


def _best_sup(
    graph: nx.MultiDiGraph,
    source: Node,
) -> tp.Tuple[Fraction, GraphLasso]:
    sub = graph.subgraph(reachable(graph, source))
    continues = _reaching(sub, set().union(*cyclic_components(sub)))
    best: tp.Optional[tp.Tuple[Fraction, EdgeKey]] = None
    for u, v, key, weight in sub.edges(keys=True, data="weight"):
        if v in continues and (best is None or weight > best[0]):
            best = (weight, (u, v, key))
    if best is None:
        raise ArenaValidationError(f"No cycle reachable from {source!r}")
    weight, edge = best
    u, v, _ = edge
    if u in reachable(sub, v):
        cycle = _cycle_through(sub, edge)
        return weight, _lasso_to_cycle(graph, source, cycle)
    head = path_to(sub, source, {u})
    found = nx.find_cycle(sub.subgraph(reachable(sub, v)), v)
    cycle = [tuple(e[:3]) for e in found]
    tail = _lasso_to_cycle(sub, v, cycle)
    return weight, GraphLasso(head + [edge] + tail.stem, tail.cycle)


_BEST = {
    PayoffKind.inf: _best_inf,
    PayoffKind.sup: _best_sup,
    PayoffKind.liminf: _best_liminf,
    PayoffKind.limsup: _best_limsup,
    PayoffKind.mp_inf: max_cycle_mean,
    PayoffKind.mp_sup: max_cycle_mean,
}


def best_lasso(
    graph: nx.MultiDiGraph,
    source: Node,
    payoff: PayoffKind,
) -> tp.Tuple[Fraction, GraphLasso]:
    """
    Best value of an infinite path from source, with a witness lasso.

    The stem meets the cycle only at its last vertex, so the witness can be
    followed positionally.
    """
    if source not in graph:
        raise UnknownVertexError(source)
    return _BEST[payoff](graph, source)


def weighted_graph_nonempty(
    graph: nx.MultiDiGraph,
    source: Node,
    bound: Fraction,
    strict: bool = False,
    payoff: PayoffKind = PayoffKind.mp_inf,
) -> tp.Tuple[bool, tp.Optional[GraphLasso]]:
    """Whether some lasso from source has value >= bound (> if strict)."""
    value, lasso = best_lasso(graph, source, payoff)
    holds = value > bound if strict else value >= bound
    return holds, lasso if holds else None


def lasso_through(
    graph: nx.MultiDiGraph,
    source: Node,
    edge: EdgeKey,
    within: tp.Optional[nx.MultiDiGraph] = None,
) -> GraphLasso:
    """Lasso from source whose cycle takes `edge` and stays in `within`."""
    cycle = _cycle_through(graph if within is None else within, edge)
    return _lasso_to_cycle(graph, source, cycle)
