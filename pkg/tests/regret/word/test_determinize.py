from fractions import Fraction

import pytest

from regret_games.models.automaton import Transition, WeightedAutomaton
from regret_games.models.common import PayoffKind
from regret_games.models.monitors import (
    Acceptance,
    DeterministicParityAutomaton,
)
from regret_games.oracle import (
    lasso_accepted,
    lasso_automaton_value,
    lasso_words,
)
from regret_games.regret.word.determinize import (
    compress_priorities,
    determinize_buchi_to_parity,
    determinize_liminf,
    threshold_monitor,
)
from regret_games.testgen import random_automaton
from tests.helpers import deterministic_liminf, parity_accepts


def eventually_a() -> WeightedAutomaton:
    """Guesses the point after which only `a` is read."""
    moves = (
        ("p", "a", "p", 0),
        ("p", "b", "p", 0),
        ("p", "a", "q", 1),
        ("q", "a", "q", 1),
        ("q", "b", "d", 0),
        ("d", "a", "d", 0),
        ("d", "b", "d", 0),
    )
    return WeightedAutomaton(
        states=("p", "q", "d"),
        initial="p",
        alphabet=("a", "b"),
        transitions=tuple(
            Transition(source=s, letter=x, target=t, weight=w)
            for s, x, t, w in moves
        ),
    )


def test_threshold_monitor(a0: WeightedAutomaton) -> None:
    monitor = threshold_monitor(a0, Fraction(2))
    assert monitor.acceptance is Acceptance.buchi
    assert {a0.transitions[i].weight for i in monitor.marked} == {2}
    co = threshold_monitor(a0, Fraction(1), Acceptance.cobuchi)
    assert co.acceptance is Acceptance.cobuchi
    assert len(co.marked) == 10


@pytest.mark.parametrize("build", ("a0", "eventually_a"))
def test_liminf_determinization_keeps_values(
    a0: WeightedAutomaton,
    build: str,
) -> None:
    a = a0 if build == "a0" else eventually_a()
    d = determinize_liminf(a)
    for w in lasso_words(a.alphabet, 5):
        assert deterministic_liminf(d, w) == lasso_automaton_value(
            a, w, PayoffKind.liminf, 5_000_000,
        )


@pytest.mark.parametrize(
    "build,threshold",
    (("a0", Fraction(1)), ("a0", Fraction(2)), ("eventually_a", 1)),
)
def test_parity_determinization_keeps_language(
    a0: WeightedAutomaton,
    build: str,
    threshold: Fraction,
) -> None:
    a = a0 if build == "a0" else eventually_a()
    monitor = threshold_monitor(a, Fraction(threshold))
    dpa = determinize_buchi_to_parity(monitor)
    for w in lasso_words(a.alphabet, 5):
        assert parity_accepts(dpa, w) == lasso_accepted(
            a, monitor.marked, w, 5_000_000,
        )


def test_compress_priorities() -> None:
    dpa = DeterministicParityAutomaton(
        size=2,
        initial=0,
        alphabet=("a",),
        delta={(0, "a"): (1, 7), (1, "a"): (1, 5)},
    )
    compressed = compress_priorities(dpa)
    assert compressed.step(1, "a") == (1, 1)
    assert compressed.max_priority == 1


@pytest.mark.parametrize("seed", range(20))
def test_liminf_determinization_on_random_automata(seed: int) -> None:
    a = random_automaton(2 + seed % 3, 2, (-1, 2), ("a", "b"), seed)
    d = determinize_liminf(a)
    for w in lasso_words(a.alphabet, 7):
        assert deterministic_liminf(d, w) == lasso_automaton_value(
            a, w, PayoffKind.liminf, 5_000_000,
        ), w


@pytest.mark.parametrize("seed", range(20))
def test_parity_determinization_on_random_automata(seed: int) -> None:
    a = random_automaton(2 + seed % 3, 2, (-1, 2), ("a", "b"), seed)
    weights = sorted({t.weight for t in a.transitions})
    monitor = threshold_monitor(a, weights[len(weights) // 2])
    dpa = determinize_buchi_to_parity(monitor)
    for w in lasso_words(a.alphabet, 8):
        assert parity_accepts(dpa, w) == lasso_accepted(
            a, monitor.marked, w, 5_000_000,
        ), w
