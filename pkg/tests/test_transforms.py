from fractions import Fraction

from regret_games.models.arena import Arena
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.strategy import MooreStrategy
from regret_games.transforms import (
    RecordMode,
    lift_arena_strategy,
    negate_arena,
    record_arena,
    record_automaton,
    record_extremum_transform,
    record_id,
)


def test_record_min_tracks_lowest_weight(g0: Arena) -> None:
    recorded = record_arena(g0, RecordMode.min)
    arena = recorded.arena
    assert arena.initial == record_id("v1", Fraction(2))

    low = record_id("v3", Fraction(1, 2))
    assert low == "v3#1/2"
    assert recorded.origin[low] == ("v3", Fraction(1, 2))
    loop = arena.edges[arena.edge_between(low, low)]
    assert loop.weight == Fraction(1, 2)


def test_record_max_starts_low(g0: Arena) -> None:
    arena = record_extremum_transform(g0, RecordMode.max)
    assert arena.initial == "v1#-2"
    assert all(e.weight >= -2 for e in arena.edges)


def test_recorded_edges_point_back(g0: Arena) -> None:
    recorded = record_arena(g0, RecordMode.min)
    for edge, origin in zip(recorded.arena.edges, recorded.edge_origin):
        source, _ = recorded.origin[edge.source]
        target, _ = recorded.origin[edge.target]
        assert g0.edges[origin].source == source
        assert g0.edges[origin].target == target
        assert g0.edges[origin].label == edge.label


def test_recorded_owners(g0: Arena) -> None:
    arena = record_arena(g0, RecordMode.min).arena
    for name in arena.vertices:
        vertex, _ = name.split("#")
        assert arena.is_eve(name) == g0.is_eve(vertex)


def test_lift_positional_strategy(g0: Arena) -> None:
    recorded = record_arena(g0, RecordMode.min)
    arena = recorded.arena
    strategy = MooreStrategy.positional(
        {v: arena.out_edges(v)[0] for v in arena.eve_vertices}
    )
    lifted = lift_arena_strategy(recorded, strategy)
    assert lifted.initial_memory == 2
    assert lifted.next_choice(Fraction(2), "v1") == g0.edge_between(
        "v1", "v2"
    )
    v1_to_v3 = g0.edge_between("v1", "v3")
    assert lifted.next_memory(Fraction(2), v1_to_v3) == 1


def test_record_automaton(a0: WeightedAutomaton) -> None:
    recorded = record_automaton(a0, RecordMode.min)
    automaton = recorded.automaton
    assert automaton.initial == "v1#2"
    assert automaton.alphabet == a0.alphabet
    for trans, origin in zip(
        automaton.transitions, recorded.transition_origin,
    ):
        source = a0.transitions[origin]
        assert source.letter == trans.letter
        assert trans.weight <= source.weight


def test_negate_arena(g0: Arena) -> None:
    negated = negate_arena(g0)
    assert [e.weight for e in negated.edges] == [
        -e.weight for e in g0.edges
    ]
    assert negate_arena(negated) == g0
