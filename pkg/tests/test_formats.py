from fractions import Fraction

import pytest

from regret_games.exceptions import ArenaValidationError, ParseError
from regret_games.formats import (
    format_spoiler,
    format_strategy,
    load,
    parse_arena,
    parse_automaton,
    parse_dimacs,
    serialize_arena,
    serialize_automaton,
    serialize_dimacs,
)
from regret_games.models.arena import Arena
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.results import Spoiler
from regret_games.models.strategy import MooreStrategy
from tests.constants import A0_PATH, G0_PATH
from tests.helpers import word


def test_parse_g0(g0: Arena) -> None:
    assert g0.vertices == ("v1", "v2", "v3", "v4", "v5")
    assert g0.eve_vertices == frozenset({"v1", "v4", "v5"})
    assert g0.initial == "v1"
    assert len(g0.edges) == 8
    assert g0.max_abs_weight == 2
    loop = g0.edges[g0.edge_between("v3", "v3")]
    assert loop.weight == Fraction(1, 2)
    assert loop.label == "b"


def test_parse_a0(a0: WeightedAutomaton) -> None:
    assert len(a0.states) == 5
    assert a0.alphabet == ("a", "b")
    assert len(a0.transitions) == 12
    assert not a0.is_deterministic
    assert a0.choice_points() == [("v1", "a"), ("v1", "b")]


def test_serialized_arena_parses_back(g0: Arena) -> None:
    assert parse_arena(serialize_arena(g0)) == g0


def test_serialized_automaton_parses_back(a0: WeightedAutomaton) -> None:
    assert parse_automaton(serialize_automaton(a0)) == a0


def test_load_dispatches_on_header() -> None:
    assert isinstance(load(G0_PATH.read_text()), Arena)
    assert isinstance(load(A0_PATH.read_text()), WeightedAutomaton)


def test_comments_and_blank_lines_are_ignored() -> None:
    text = (
        "# leading comment\n"
        "\n"
        "arena  # header\n"
        "vertex a eve\n"
        "init a\n"
        "edge a a -3/4   # loop\n"
    )
    arena = parse_arena(text)
    assert arena.edges[0].weight == Fraction(-3, 4)


@pytest.mark.parametrize(
    "text,line,error_key",
    (
        ("graph\n", 1, "parse.syntax"),
        ("arena\nvertex a eve\ninit a\nedge a b 1\n", 4, "parse.syntax"),
        ("arena\nvertex a eve\ninit a\nedge a a 1.5\n", 4, "parse.syntax"),
        ("arena\nvertex a eve\ninit a\nedge a a 1/0\n", 4, "parse.syntax"),
        ("arena\nvertex a eve\nvertex a adam\n", 3, "parse.syntax"),
        ("arena\nvertex a bob\n", 2, "parse.syntax"),
        ("arena\nvertex a:b eve\n", 2, "parse.syntax"),
        ("arena\nvertex a eve\ninit a\ninit a\n", 4, "parse.syntax"),
        ("arena\nnode a eve\n", 2, "parse.syntax"),
        ("automaton\nalphabet a a\n", 2, "parse.syntax"),
        ("automaton\nalphabet a\nstate q\ninit q\ntrans q b q 1\n", 5,
         "parse.syntax"),
    ),
)
def test_parse_errors_carry_line(
    text: str,
    line: int,
    error_key: str,
) -> None:
    with pytest.raises(ParseError) as excinfo:
        load(text)
    assert excinfo.value.line == line
    assert excinfo.value.error_key == error_key
    assert excinfo.value.error_message.startswith(f"line {line}:")


@pytest.mark.parametrize(
    "text",
    ("", "# only a comment\n", "arena\nvertex a eve\nedge a a 1\n"),
)
def test_parse_errors_without_line(text: str) -> None:
    with pytest.raises(ParseError) as excinfo:
        load(text)
    assert excinfo.value.line is None


def test_arena_must_be_total() -> None:
    text = "arena\nvertex a eve\nvertex b adam\ninit a\nedge a b 1\n"
    with pytest.raises(ArenaValidationError):
        parse_arena(text)


def test_parse_dimacs() -> None:
    text = "c example\np cnf 3 3\n1 -2 0\n2 3\n0 -3 0\n-1"
    assert parse_dimacs(text) == ((1, -2), (2, 3), (-3,), (-1,))


@pytest.mark.parametrize("text", ("1 x 0\n", "1 0 0\n", "c nothing\n"))
def test_parse_dimacs_errors(text: str) -> None:
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_serialize_dimacs() -> None:
    assert serialize_dimacs(((1, -2), (3,))) == "p cnf 3 2\n1 -2 0\n3 0\n"


def test_format_strategy_on_arena(g0: Arena) -> None:
    strategy = MooreStrategy.positional({
        "v1": g0.edge_between("v1", "v2"),
        "v4": g0.edge_between("v4", "v4"),
        "v5": g0.edge_between("v5", "v5"),
    })
    assert format_strategy(g0, strategy) == [
        "strategy eve v1 0 -> v2 0",
        "strategy eve v4 0 -> v4 0",
        "strategy eve v5 0 -> v5 0",
    ]


def test_format_strategy_skips_other_owner(g0: Arena) -> None:
    strategy = MooreStrategy.positional({
        "v1": g0.edge_between("v1", "v3"),
        "v2": g0.edge_between("v2", "v1"),
    })
    assert format_strategy(g0, strategy, "adam") == [
        "strategy adam v2 0 -> v1 0",
    ]


def test_format_strategy_on_automaton(a0: WeightedAutomaton) -> None:
    strategy = MooreStrategy(
        memory_states=(0, 1),
        choice={(0, ("v1", "a")): 0, (1, ("v1", "b")): 3},
        update={(0, 0): 1},
    )
    assert format_strategy(a0, strategy) == [
        "strategy eve v1,a 0 -> 0 1",
        "strategy eve v1,b 1 -> 3 1",
    ]


def test_format_spoiler() -> None:
    spoiler = Spoiler(
        word=word("", "a b"),
        best_value=Fraction(1),
        achieved_value=Fraction(-1, 2),
    )
    assert format_spoiler(spoiler) == [
        "spoiler stem -",
        "spoiler cycle a b",
        "spoiler best 1",
        "spoiler achieved -1/2",
    ]
