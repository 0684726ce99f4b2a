import typing as tp
from fractions import Fraction

import pytest

from regret_games.exceptions import FormulaError
from regret_games.models.arena import Arena
from regret_games.models.common import PayoffKind
from regret_games.regret.any import regret_any
from regret_games.solvers.values import antagonistic_value
from regret_games.testgen import (
    GADGET_HUB,
    GADGET_INIT,
    brute_sat,
    check_formula,
    value_gadget,
    random_arena,
    random_automaton,
    random_cnf,
    sat_reduction,
)
from tests.constants import (
    CONTRADICTION,
    DISJOINT_CLAUSES,
    G0_MAX_WEIGHT,
    G1_MAX_WEIGHT,
    SATISFIABLE_SINGLE,
    TWO_VARIABLE_FORMULA,
)
from tests.helpers import read_g0, read_g1


@pytest.mark.parametrize(
    "read,bound,expected",
    (
        (read_g0, G0_MAX_WEIGHT, Fraction(5, 2)),
        (read_g1, G1_MAX_WEIGHT, Fraction(6)),
    ),
)
def test_gadget_regret_encodes_value(
    read: tp.Callable[[], Arena],
    bound: Fraction,
    expected: Fraction,
) -> None:
    g = read()
    gadget = value_gadget(g, PayoffKind.mp_inf)
    assert gadget.initial == GADGET_INIT
    assert gadget.is_eve(GADGET_INIT)
    assert not gadget.is_eve(GADGET_HUB)

    regret = regret_any(gadget, PayoffKind.mp_inf).regret
    assert regret == expected
    value = antagonistic_value(g, PayoffKind.mp_inf).value
    assert bound + 1 - regret == value


@pytest.mark.parametrize("payoff", list(PayoffKind))
def test_gadget_roundtrip_on_random_arenas(payoff: PayoffKind) -> None:
    for seed in range(50):
        g = random_arena(
            1 + seed % 4, 2, (-2, 2), Fraction(1 + seed % 3, 4), seed,
        )
        regret = regret_any(value_gadget(g, payoff), payoff).regret
        value = antagonistic_value(g, payoff).value
        assert g.max_abs_weight + 1 - regret == value, seed


def test_gadget_vertex_clash() -> None:
    g = value_gadget(read_g0(), PayoffKind.liminf)
    with pytest.raises(ValueError):
        value_gadget(g, PayoffKind.liminf)


@pytest.mark.parametrize(
    "phi,satisfiable",
    (
        (SATISFIABLE_SINGLE, True),
        (CONTRADICTION, False),
        (DISJOINT_CLAUSES, True),
        (TWO_VARIABLE_FORMULA, True),
        (((1, 2), (-1, 2), (1, -2), (-1, -2)), False),
    ),
)
def test_brute_sat(
    phi: tp.Tuple[tp.Tuple[int, ...], ...],
    satisfiable: bool,
) -> None:
    assert brute_sat(phi) is satisfiable


@pytest.mark.parametrize("phi", ((), ((),), ((1, 0),)))
def test_invalid_formula(phi: tp.Tuple[tp.Tuple[int, ...], ...]) -> None:
    with pytest.raises(FormulaError):
        check_formula(phi)


def test_sat_reduction_shape() -> None:
    a = sat_reduction(TWO_VARIABLE_FORMULA)
    assert a.initial == "entry"
    assert a.alphabet == ("bail", "sep", "1", "2", "3")
    assert not a.is_deterministic
    assert {"clause.sink", "value.sink", "bottom.0", "bottom.2"} <= set(
        a.states
    )
    points = {state for state, _ in a.choice_points()}
    assert points == {"entry", "value.start", "value.x1", "value.x2"}


@pytest.mark.parametrize(
    "payoff,path_weight",
    ((PayoffKind.inf, 2), (PayoffKind.sup, 0), (PayoffKind.liminf, 1)),
)
def test_sat_reduction_path_weights(
    payoff: PayoffKind,
    path_weight: int,
) -> None:
    a = sat_reduction(SATISFIABLE_SINGLE, payoff)
    entry = [t for t in a.transitions if t.source == "entry"]
    assert {t.weight for t in entry} == {path_weight}


def test_random_arena_is_reproducible() -> None:
    first = random_arena(4, 2, (-2, 2), Fraction(1, 2), 11)
    assert first == random_arena(4, 2, (-2, 2), Fraction(1, 2), 11)
    assert len(first.eve_vertices) == 2
    for vertex in first.vertices:
        assert 1 <= len(first.out_edges(vertex)) <= 2
    assert all(-2 <= e.weight <= 2 for e in first.edges)


@pytest.mark.parametrize(
    "n_vertices,max_outdeg,weights",
    ((0, 2, (0, 1)), (3, 0, (0, 1)), (3, 2, (2, 1))),
)
def test_random_arena_rejects(
    n_vertices: int,
    max_outdeg: int,
    weights: tp.Tuple[int, int],
) -> None:
    with pytest.raises(ValueError):
        random_arena(n_vertices, max_outdeg, weights, Fraction(1, 2), 0)


def test_random_cnf() -> None:
    phi = random_cnf(4, 5, 3, 2)
    assert phi == random_cnf(4, 5, 3, 2)
    assert len(phi) == 5
    for clause in phi:
        variables = [abs(literal) for literal in clause]
        assert len(set(variables)) == 3
        assert all(1 <= v <= 4 for v in variables)


def test_random_automaton_is_total_and_reproducible() -> None:
    a = random_automaton(3, 2, (-1, 2), ("a", "b"), 7)
    assert a == random_automaton(3, 2, (-1, 2), ("a", "b"), 7)
    for state in a.states:
        for letter in a.alphabet:
            assert 1 <= len(a.moves(state, letter)) <= 2
    assert all(-1 <= t.weight <= 2 for t in a.transitions)


@pytest.mark.parametrize(
    "n_states,max_branching,weights,alphabet",
    ((0, 1, (0, 1), ("a",)), (2, 1, (0, 1), ()), (2, 1, (1, 0), ("a",))),
)
def test_random_automaton_rejects(
    n_states: int,
    max_branching: int,
    weights: tp.Tuple[int, int],
    alphabet: tp.Tuple[str, ...],
) -> None:
    with pytest.raises(ValueError):
        random_automaton(n_states, max_branching, weights, alphabet, 0)
