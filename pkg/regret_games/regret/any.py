"""
Regret against an unrestricted Adam.

Each Eve edge gets the best cooperative value Eve could have had by taking
a sibling edge instead. The arena is paired with the largest such value met
along the play so far, and an edge at level b weighs w - b. Regret is minus
the antagonistic value of that product, clamped at 0.

The commitment arena, where Eve fixes the bound before the play starts,
gives an upper bound on the same regret.
"""

import typing as tp
from collections import deque
from fractions import Fraction

from regret_games.log import solver_logger
from regret_games.models.arena import Arena, Edge
from regret_games.models.common import PayoffKind
from regret_games.models.results import DeviationWeights, RegretResult
from regret_games.models.strategy import MooreStrategy
from regret_games.solvers.graphs import (
    arena_graph,
    best_lasso,
    path_to,
    reachable,
)
from regret_games.solvers.values import antagonistic_values, cooperative_values
from regret_games.transforms import (
    RecordMode,
    lift_arena_strategy,
    negate_arena,
    record_arena,
)
from regret_games.utils import format_rational

START = "commit.start"
COMMIT = "commit.choose"
SINK = "commit.sink"
# level before Eve has met any alternative
NO_CHOICE = "-"

# memory of the Adam witness
REACH, ADVERSARIAL, COOPERATIVE = 0, 1, 2

Level = tp.Optional[Fraction]


def copy_id(vertex: str, bound: Level) -> str:
    level = NO_CHOICE if bound is None else format_rational(bound)
    return f"{vertex}@{level}"


class CommitmentArena(tp.NamedTuple):
    arena: Arena
    bounds: tp.Tuple[Fraction, ...]
    # copy edge index -> (bound, source edge index)
    edge_origin: tp.Dict[int, tp.Tuple[Fraction, int]]


class LevelArena(tp.NamedTuple):
    arena: Arena
    levels: tp.Tuple[Fraction, ...]
    deviation: DeviationWeights
    origin: tp.Dict[str, tp.Tuple[str, Level]]
    edge_origin: tp.Tuple[int, ...]


def deviation_weights(g: Arena, p: PayoffKind) -> DeviationWeights:
    cvals = cooperative_values(g, p)
    weights: DeviationWeights = {}
    for i, edge in enumerate(g.edges):
        siblings = [
            cvals[g.edges[j].target]
            for j in g.out_edges(edge.source)
            if j != i
        ]
        if g.is_eve(edge.source) and siblings:
            weights[i] = max(siblings)
        else:
            weights[i] = None
    return weights


def build_commitment_arena(g: Arena, p: PayoffKind) -> CommitmentArena:
    """
    Eve commits to a bound b and plays in the copy of the arena keeping only
    edges whose deviation weight is at most b, with weights shifted by -b.

    Every play is charged b, even one where Eve never meets an alternative,
    so minus the antagonistic value bounds the regret from above.
    """
    deviation = deviation_weights(g, p)
    bounds = tuple(sorted({b for b in deviation.values() if b is not None}))
    vertices = [START]
    eve = set()
    edges = [Edge(source=START, target=START, weight=0)]
    edge_origin: tp.Dict[int, tp.Tuple[Fraction, int]] = {}
    if bounds:
        vertices.append(COMMIT)
        eve.add(COMMIT)
        edges.append(Edge(source=START, target=COMMIT, weight=0))
        edges.extend(
            Edge(source=COMMIT, target=copy_id(g.initial, b), weight=0)
            for b in bounds
        )

    needs_sink = False
    for bound in bounds:
        vertices.extend(copy_id(v, bound) for v in g.vertices)
        eve.update(copy_id(v, bound) for v in g.eve_vertices)
        for vertex in g.vertices:
            kept = [
                i for i in g.out_edges(vertex)
                if deviation[i] is None or deviation[i] <= bound
            ]
            for i in kept:
                edge_origin[len(edges)] = (bound, i)
                edges.append(
                    Edge(
                        source=copy_id(vertex, bound),
                        target=copy_id(g.edges[i].target, bound),
                        weight=g.edges[i].weight - bound,
                        label=g.edges[i].label,
                    )
                )
            if not kept:
                needs_sink = True
                edges.append(
                    Edge(source=copy_id(vertex, bound), target=SINK, weight=0)
                )
    if needs_sink:
        vertices.append(SINK)
        edges.append(
            Edge(
                source=SINK,
                target=SINK,
                weight=-2 * g.max_abs_weight - 1,
            )
        )

    arena = Arena(
        vertices=tuple(vertices),
        eve_vertices=frozenset(eve),
        edges=tuple(edges),
        initial=START,
    )
    solver_logger.debug(
        "Commitment arena built: copies=%d, vertices=%d, edges=%d",
        len(bounds),
        len(arena.vertices),
        len(arena.edges),
    )
    return CommitmentArena(arena, bounds, edge_origin)


def build_commitment_game(g: Arena, p: PayoffKind) -> Arena:
    return build_commitment_arena(g, p).arena


def _raise_level(level: Level, deviation: Level) -> Level:
    if deviation is None:
        return level
    if level is None:
        return deviation
    return max(level, deviation)


def build_level_arena(g: Arena, p: PayoffKind) -> LevelArena:
    """
    Reachable product of the arena with the deviation level of the play.

    Taking an Eve edge with a sibling raises the level to the edge's
    deviation weight. An edge entering level b weighs w - b and edges at the
    starting level weigh 0, so plays on which Eve never had a choice cost no
    regret.
    """
    deviation = deviation_weights(g, p)
    start: tp.Tuple[str, Level] = (g.initial, None)
    ids = {start: copy_id(*start)}
    queue = deque([start])
    edges: tp.List[Edge] = []
    edge_origin: tp.List[int] = []
    while queue:
        vertex, level = queue.popleft()
        for i in g.out_edges(vertex):
            edge = g.edges[i]
            raised = _raise_level(level, deviation[i])
            key = (edge.target, raised)
            if key not in ids:
                ids[key] = copy_id(*key)
                queue.append(key)
            edges.append(
                Edge(
                    source=ids[(vertex, level)],
                    target=ids[key],
                    weight=0 if raised is None else edge.weight - raised,
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
    levels = tuple(sorted({b for b in deviation.values() if b is not None}))
    solver_logger.debug(
        "Level arena built: levels=%d, vertices=%d, edges=%d",
        len(levels),
        len(arena.vertices),
        len(arena.edges),
    )
    origin = {name: key for key, name in ids.items()}
    return LevelArena(arena, levels, deviation, origin, tuple(edge_origin))


def _lowest_edges(g: Arena, eve: bool) -> tp.Dict[str, int]:
    return {
        v: g.out_edges(v)[0] for v in g.vertices if g.is_eve(v) == eve
    }


def _eve_strategy(
    g: Arena,
    product: LevelArena,
    strategy: MooreStrategy,
) -> MooreStrategy:
    """
    Eve's product strategy on the source arena, with the level as memory.

    When every vertex gets the same edge at all of its levels the strategy
    is positional.
    """
    picked: tp.Dict[tp.Tuple[Level, str], int] = {}
    for name in product.arena.vertices:
        vertex, level = product.origin[name]
        if g.is_eve(vertex):
            edge = strategy.next_choice(0, name)
            picked[(level, vertex)] = product.edge_origin[edge]

    choice = _lowest_edges(g, True)
    used: tp.Dict[str, tp.Set[int]] = {}
    for (_, vertex), edge in picked.items():
        used.setdefault(vertex, set()).add(edge)
    if all(len(edges) == 1 for edges in used.values()):
        choice.update((v, min(edges)) for v, edges in used.items())
        return MooreStrategy.positional(choice)

    levels: tp.Tuple[Level, ...] = (None,) + product.levels
    memory = {level: k for k, level in enumerate(levels)}
    moves = {
        (k, v): edge for k in memory.values() for v, edge in choice.items()
    }
    moves.update(
        ((memory[level], v), edge) for (level, v), edge in picked.items()
    )
    update: tp.Dict[tp.Tuple[int, int], int] = {}
    for level, k in memory.items():
        for i, weight in product.deviation.items():
            raised = _raise_level(level, weight)
            if raised != level:
                update[(k, i)] = memory[raised]
    return MooreStrategy(
        memory_states=tuple(memory.values()),
        initial_memory=memory[None],
        choice=moves,
        update=update,
    )


def _adam_witness(
    g: Arena,
    p: PayoffKind,
    deviation: DeviationWeights,
    sigma: MooreStrategy,
) -> MooreStrategy:
    """
    Adam's three-phase answer to a positional Eve strategy: reach the vertex
    where deviating pays most, then either punish Eve's own choice there or
    cooperate with the deviation.
    """
    eve_edges = {sigma.next_choice(0, v) for v in g.eve_vertices}
    kept = [
        i for i, e in enumerate(g.edges)
        if not g.is_eve(e.source) or i in eve_edges
    ]
    played = arena_graph(g, kept)
    punished = arena_graph(negate_arena(g), kept)
    everything = arena_graph(g)

    best: tp.Optional[tp.Tuple[Fraction, str]] = None
    reach = reachable(played, g.initial)
    for vertex in g.vertices:
        if vertex not in reach or not g.is_eve(vertex):
            continue
        alternative = deviation[sigma.next_choice(0, vertex)]
        if alternative is None:
            continue
        worst = -best_lasso(punished, vertex, p.negated)[0]
        if best is None or alternative - worst > best[0]:
            best = (alternative - worst, vertex)

    choice = {
        (memory, v): e
        for memory in (REACH, ADVERSARIAL, COOPERATIVE)
        for v, e in _lowest_edges(g, False).items()
    }
    if best is None:
        return MooreStrategy(
            memory_states=(REACH, ADVERSARIAL, COOPERATIVE),
            initial_memory=REACH,
            choice=choice,
        )
    _, target = best
    own = sigma.next_choice(0, target)
    path = path_to(played, g.initial, {target}) or []
    _, lasso = best_lasso(punished, target, p.negated)
    phases = [(REACH, path), (ADVERSARIAL, lasso.edges())]
    update = {(REACH, own): ADVERSARIAL}
    siblings = [i for i in g.out_edges(target) if i != own]
    update.update(((REACH, i), COOPERATIVE) for i in siblings)
    cooperations = [
        best_lasso(everything, g.edges[i].target, p) for i in siblings
    ]
    _, cooperation = max(cooperations, key=lambda found: found[0])
    phases.append((COOPERATIVE, cooperation.edges()))
    for memory, edges in phases:
        for source, _, key in edges:
            if not g.is_eve(source):
                choice[(memory, source)] = key
    return MooreStrategy(
        memory_states=(REACH, ADVERSARIAL, COOPERATIVE),
        initial_memory=REACH,
        choice=choice,
        update=update,
    )


def _regret_prefix_independent(
    g: Arena,
    p: PayoffKind,
    jobs: int,
) -> RegretResult:
    product = build_level_arena(g, p)
    solution = antagonistic_values(product.arena, p, jobs)
    regret = max(Fraction(0), -solution.values[product.arena.initial])
    sigma = _eve_strategy(g, product, solution.eve_strategy)
    witness = (
        _adam_witness(g, p, product.deviation, sigma)
        if sigma.is_positional
        else None
    )
    return RegretResult(
        regret=regret, eve_strategy=sigma, adam_witness=witness,
    )


def regret_any(g: Arena, p: PayoffKind, jobs: int = 1) -> RegretResult:
    """Least regret Eve can ensure against any Adam strategy."""
    if p.is_prefix_independent:
        result = _regret_prefix_independent(g, p, jobs)
    else:
        mode = RecordMode.min if p is PayoffKind.inf else RecordMode.max
        recorded = record_arena(g, mode)
        inner = _regret_prefix_independent(recorded.arena, p.recorded, jobs)
        result = RegretResult(
            regret=inner.regret,
            eve_strategy=lift_arena_strategy(recorded, inner.eve_strategy),
            adam_witness=(
                lift_arena_strategy(recorded, inner.adam_witness)
                if inner.adam_witness is not None
                else None
            ),
        )
    solver_logger.info(
        "Regret against any Adam: payoff=%s, regret=%s",
        p.value,
        format_rational(result.regret),
    )
    return result
