from fractions import Fraction

import pytest

from regret_games.models.arena import Arena
from regret_games.models.common import PayoffKind
from regret_games.oracle import cycle_forming_value
from regret_games.regret.any import regret_any
from regret_games.regret.memoryless import (
    build_belief_arena,
    build_recording_belief_arena,
    regret_memoryless,
)
from regret_games.solvers.values import cooperative_value
from regret_games.testgen import random_arena
from tests.helpers import make_arena

PREFIX_INDEPENDENT = (
    PayoffKind.liminf,
    PayoffKind.limsup,
    PayoffKind.mp_inf,
    PayoffKind.mp_sup,
)


def test_belief_arena_g1(g1: Arena) -> None:
    belief = build_belief_arena(g1, PayoffKind.mp_inf)
    arena = belief.arena
    assert arena.initial == "u|b0"
    assert len(belief.beliefs) == 3

    def weight(source: str, target: str) -> Fraction:
        return arena.edges[arena.edge_between(source, target)].weight

    assert weight("u|b0", "u|b0") == -1
    assert weight("u|b0", "v|b0") == -2
    assert weight("v|b0", "x|b0") == -2
    assert weight("x|b0", "v|b1") == -1
    assert weight("x|b0", "u|b2") == 4
    assert weight("u|b1", "u|b1") == 0
    assert belief.cval_cache[frozenset(range(len(g1.edges)))] == 2


def test_adam_choices_shrink_beliefs(g1: Arena) -> None:
    belief = build_belief_arena(g1, PayoffKind.mp_inf)
    x_to_u = g1.edge_between("x", "u")
    for name, (vertex, edges, recorded) in belief.origin.items():
        assert recorded is None
        if name.endswith("b1"):
            assert x_to_u not in edges


def test_prefix_dependent_payoffs_need_recording(g0: Arena) -> None:
    with pytest.raises(ValueError):
        build_belief_arena(g0, PayoffKind.inf)
    with pytest.raises(ValueError):
        build_recording_belief_arena(g0, PayoffKind.liminf)


def test_recording_belief_arena(g0: Arena) -> None:
    belief = build_recording_belief_arena(g0, PayoffKind.inf)
    assert belief.payoff is PayoffKind.liminf
    assert belief.source_payoff is PayoffKind.inf
    _, _, recorded = belief.origin[belief.arena.initial]
    assert recorded == 2


def test_eve_needs_memory_on_g1(g1: Arena) -> None:
    result = regret_memoryless(g1, PayoffKind.mp_inf)
    assert result.regret == 0
    assert result.eve_strategy.memory_size == 3
    assert result.adam_witness is not None
    assert result.adam_witness.is_positional


@pytest.mark.parametrize(
    "payoff,expected",
    ((PayoffKind.mp_inf, Fraction(0)), (PayoffKind.inf, Fraction(1, 2))),
)
def test_regret_memoryless_g0(
    g0: Arena,
    payoff: PayoffKind,
    expected: Fraction,
) -> None:
    assert regret_memoryless(g0, payoff).regret == expected


@pytest.mark.parametrize(
    "payoff", (PayoffKind.liminf, PayoffKind.limsup, PayoffKind.mp_inf),
)
def test_positional_adam_is_weaker(
    g0: Arena,
    g1: Arena,
    payoff: PayoffKind,
) -> None:
    for arena in (g0, g1):
        memoryless = regret_memoryless(arena, payoff).regret
        assert 0 <= memoryless <= regret_any(arena, payoff).regret


@pytest.mark.parametrize("seed", range(200))
def test_regret_memoryless_on_random_arenas(seed: int) -> None:
    arena = random_arena(
        1 + seed % 4, 2, (-2, 2), Fraction(1 + seed // 4 % 4, 4), seed,
    )
    for payoff in PREFIX_INDEPENDENT:
        regret = regret_memoryless(arena, payoff).regret
        assert 0 <= regret <= regret_any(arena, payoff).regret
        belief = build_belief_arena(arena, payoff)
        if len(belief.arena.vertices) <= 40:
            assert regret == -cycle_forming_value(
                belief.arena, belief.payoff, 5_000_000,
            ), payoff


@pytest.mark.parametrize("seed", range(40))
@pytest.mark.parametrize("payoff", list(PayoffKind))
def test_beliefs_shrink_along_edges(payoff: PayoffKind, seed: int) -> None:
    arena = random_arena(1 + seed % 4, 2, (-2, 2), Fraction(1, 2), seed)
    if payoff.is_prefix_independent:
        belief = build_belief_arena(arena, payoff)
    else:
        belief = build_recording_belief_arena(arena, payoff)
    for edge in belief.arena.edges:
        vertex, source, _ = belief.origin[edge.source]
        _, target, _ = belief.origin[edge.target]
        assert target <= source
        if arena.is_eve(vertex):
            assert target == source


@pytest.mark.parametrize("seed", range(40))
@pytest.mark.parametrize("payoff", PREFIX_INDEPENDENT)
def test_edge_weights_come_from_the_cache(
    payoff: PayoffKind,
    seed: int,
) -> None:
    arena = random_arena(1 + seed % 4, 2, (-2, 2), Fraction(1, 2), seed)
    belief = build_belief_arena(arena, payoff)
    for i, edge in enumerate(belief.arena.edges):
        _, target, _ = belief.origin[edge.target]
        original = arena.edges[belief.edge_origin[i]].weight
        assert edge.weight == original - belief.cval_cache[target]
    everything = frozenset(range(len(arena.edges)))
    if everything in belief.cval_cache:
        assert belief.cval_cache[everything] == cooperative_value(
            arena, payoff,
        ).value


def adam_ring(size: int) -> Arena:
    """Adam vertices in a ring, each with two parallel edges onwards."""
    names = [f"a{i}" for i in range(size)]
    edges = []
    for i, name in enumerate(names):
        following = names[(i + 1) % size]
        edges += [(name, following, 0), (name, following, 1)]
    return make_arena([], names, edges)


@pytest.mark.parametrize(
    "size,beliefs,vertices",
    ((1, 3, 3), (2, 7, 11), (3, 15, 31)),
)
def test_belief_arena_grows_exponentially(
    size: int,
    beliefs: int,
    vertices: int,
) -> None:
    belief = build_belief_arena(adam_ring(size), PayoffKind.mp_inf)
    assert len(belief.beliefs) == beliefs
    assert len(belief.arena.vertices) == vertices
    assert beliefs == 2 ** (size + 1) - 1
