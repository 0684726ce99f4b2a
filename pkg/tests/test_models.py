from fractions import Fraction

import pytest
from pydantic import ValidationError

from regret_games.exceptions import (
    ArenaValidationError,
    AutomatonValidationError,
    StrategyError,
    UnknownVertexError,
)
from regret_games.models.arena import Arena, Edge
from regret_games.models.automaton import Transition, WeightedAutomaton
from regret_games.models.common import PayoffKind, Player
from regret_games.models.lasso import Lasso
from regret_games.models.strategy import MooreStrategy
from regret_games.payoffs import lasso_value
from regret_games.utils import (
    common_denominator,
    format_rational,
    parallel_map,
    parse_rational,
)
from tests.helpers import make_arena, word


def test_arena_lookups(g0: Arena) -> None:
    assert g0.owner("v2") is Player.adam
    assert g0.owner("v1") is Player.eve
    assert g0.successors("v1") == ["v2", "v3"]
    assert g0.index("v3") == 2
    assert g0.weights == [
        Fraction(-1), Fraction(1, 2), Fraction(1), Fraction(2),
    ]
    with pytest.raises(UnknownVertexError):
        g0.out_edges("v9")


def test_restrict_keeps_vertices(g0: Arena) -> None:
    edges = [g0.edge_between("v1", "v2")] + [
        i for i, e in enumerate(g0.edges) if e.source != "v1"
    ]
    restricted = g0.restrict(edges)
    assert restricted.vertices == g0.vertices
    assert restricted.successors("v1") == ["v2"]


@pytest.mark.parametrize(
    "data",
    (
        {"vertices": ("a", "a"), "initial": "a"},
        {"vertices": ("a",), "initial": "b"},
        {"vertices": ("a",), "initial": "a", "eve": {"z"}},
        {"vertices": ("a", "b"), "initial": "a"},
    ),
)
def test_invalid_arena(data: dict) -> None:
    with pytest.raises(ArenaValidationError):
        Arena(
            vertices=data["vertices"],
            eve_vertices=frozenset(data.get("eve", ())),
            edges=(Edge(source="a", target="a", weight=0),),
            initial=data["initial"],
        )


def test_float_weights_are_rejected() -> None:
    with pytest.raises(ValidationError):
        Edge(source="a", target="a", weight=0.5)


def test_automaton_must_be_total() -> None:
    with pytest.raises(AutomatonValidationError):
        WeightedAutomaton(
            states=("q",),
            initial="q",
            alphabet=("a", "b"),
            transitions=(
                Transition(source="q", letter="a", target="q", weight=1),
            ),
        )


def test_automaton_moves(a0: WeightedAutomaton) -> None:
    targets = [a0.transitions[i].target for i in a0.moves("v1", "b")]
    assert targets == ["v2", "v3"]
    assert a0.max_abs_weight == 2


def test_positional_strategy() -> None:
    strategy = MooreStrategy.positional({"a": 3})
    assert strategy.is_positional
    assert strategy.next_choice(0, "a") == 3
    assert strategy.next_memory(0, 3) == 0
    with pytest.raises(StrategyError):
        strategy.next_choice(0, "b")


def test_strategy_memory_checks() -> None:
    with pytest.raises(StrategyError):
        MooreStrategy(memory_states=(0,), initial_memory=1, choice={})
    with pytest.raises(StrategyError):
        MooreStrategy(choice={}, update={(0, 1): 2})
    with pytest.raises(StrategyError):
        MooreStrategy(choice={(5, "a"): 0})


def test_payoff_kind_properties() -> None:
    assert PayoffKind.mp_inf.is_mean_payoff
    assert not PayoffKind.inf.is_prefix_independent
    assert PayoffKind.inf.recorded is PayoffKind.liminf
    assert PayoffKind.sup.recorded is PayoffKind.limsup
    assert PayoffKind.limsup.recorded is PayoffKind.limsup
    assert PayoffKind.liminf.negated is PayoffKind.limsup
    assert PayoffKind.mp_sup.negated is PayoffKind.mp_inf
    assert Player.eve.opponent is Player.adam


@pytest.mark.parametrize(
    "payoff,expected",
    (
        (PayoffKind.inf, Fraction(-1)),
        (PayoffKind.sup, Fraction(3)),
        (PayoffKind.liminf, Fraction(0)),
        (PayoffKind.limsup, Fraction(2)),
        (PayoffKind.mp_inf, Fraction(1)),
        (PayoffKind.mp_sup, Fraction(1)),
    ),
)
def test_lasso_value(payoff: PayoffKind, expected: Fraction) -> None:
    lasso = Lasso(stem=[3, -1], cycle=[0, 2, 1])
    assert lasso_value(lasso, payoff) == expected


def test_lasso_needs_cycle() -> None:
    with pytest.raises(ValueError):
        Lasso(stem=[1], cycle=[])
    with pytest.raises(ValueError):
        word("a", "")


def test_lasso_word_letters() -> None:
    w = word("a", "b a")
    assert [w.letter(i) for i in range(7)] == list("abababa")
    assert str(w) == "a (b a)^w"


@pytest.mark.parametrize(
    "text,value",
    (("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3))),
)
def test_parse_rational(text: str, value: Fraction) -> None:
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ("1/0", "1/-2", "x", "0.5"))
def test_parse_rational_rejects(text: str) -> None:
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational() -> None:
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_common_denominator() -> None:
    values = [Fraction(1, 4), Fraction(5, 6), Fraction(2)]
    assert common_denominator(values) == 12


@pytest.mark.parametrize("jobs", (1, 3))
def test_parallel_map_keeps_order(jobs: int) -> None:
    assert parallel_map(lambda x: x * x, range(6), jobs) == [
        0, 1, 4, 9, 16, 25,
    ]


def test_make_arena_helper() -> None:
    arena = make_arena(["a"], ["b"], [("a", "b", 1), ("b", "a", -1)])
    assert arena.initial == "a"
    assert arena.eve_vertices == frozenset({"a"})
