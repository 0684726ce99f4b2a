from fractions import Fraction

import pytest

from regret_games.exceptions import UndecidableRequestError
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.common import PayoffKind
from regret_games.oracle import brute_regret_word, lasso_automaton_value
from regret_games.regret.word.fixed_memory import strategy_regret
from regret_games.regret.word.games import (
    build_parity_regret_game,
    build_streett_regret_game,
)
from regret_games.regret.word.runs import strategy_value, word_value
from regret_games.regret.word.threshold import (
    is_dbp,
    is_good_for_games,
    regret_word_threshold,
    regret_word_value,
)
from regret_games.testgen import random_automaton
from tests.helpers import word


@pytest.mark.parametrize(
    "payoff,expected",
    (
        (PayoffKind.liminf, Fraction(1)),
        (PayoffKind.limsup, Fraction(0)),
        (PayoffKind.inf, Fraction(0)),
        (PayoffKind.sup, Fraction(0)),
    ),
)
def test_regret_word_value_a0(
    a0: WeightedAutomaton,
    payoff: PayoffKind,
    expected: Fraction,
) -> None:
    value, strategy = regret_word_value(a0, payoff)
    assert value == expected
    assert strategy_regret(a0, payoff, strategy).regret <= expected


def test_threshold_above_value(a0: WeightedAutomaton) -> None:
    certificate = regret_word_threshold(
        a0, PayoffKind.liminf, Fraction(3, 2), strict=True,
    )
    assert certificate.answer
    assert certificate.eve_strategy is not None
    assert certificate.spoiler is None


def test_threshold_below_value_has_spoiler(a0: WeightedAutomaton) -> None:
    certificate = regret_word_threshold(
        a0, PayoffKind.liminf, Fraction(1, 2), strict=True,
    )
    assert not certificate.answer
    assert certificate.eve_strategy is None
    found = certificate.spoiler
    assert found is not None
    assert found.best_value == lasso_automaton_value(
        a0, found.word, PayoffKind.liminf, 5_000_000,
    )
    assert found.gap >= Fraction(1, 2)


def test_strictness_at_the_value(a0: WeightedAutomaton) -> None:
    at_value = regret_word_threshold(a0, PayoffKind.liminf, Fraction(1))
    assert at_value.answer
    strict = regret_word_threshold(
        a0, PayoffKind.liminf, Fraction(1), strict=True,
    )
    assert not strict.answer


def test_mean_payoff_threshold_is_undecidable(a0: WeightedAutomaton) -> None:
    with pytest.raises(UndecidableRequestError):
        regret_word_threshold(a0, PayoffKind.mp_inf, Fraction(1))


def test_game_builders_check_payoff(a0: WeightedAutomaton) -> None:
    with pytest.raises(ValueError):
        build_parity_regret_game(a0, Fraction(0), p=PayoffKind.limsup)
    with pytest.raises(ValueError):
        build_streett_regret_game(a0, Fraction(0), p=PayoffKind.liminf)


def test_streett_strategy_resolves_a0(a0: WeightedAutomaton) -> None:
    certificate = regret_word_threshold(a0, PayoffKind.limsup, Fraction(0))
    assert certificate.answer
    strategy = certificate.eve_strategy
    assert strategy is not None
    for w in (word("a", "b"), word("", "b a"), word("b", "a")):
        assert strategy_value(
            a0, strategy, w, PayoffKind.limsup,
        ) == word_value(a0, w, PayoffKind.limsup)


def test_good_for_games(a0: WeightedAutomaton) -> None:
    assert is_good_for_games(a0, PayoffKind.limsup, Fraction(0))
    assert not is_good_for_games(a0, PayoffKind.liminf, Fraction(1, 2))


def test_dbp(a0: WeightedAutomaton) -> None:
    assert is_dbp(a0, PayoffKind.mp_inf, Fraction(1), 0, budget=200_000)
    assert not is_dbp(
        a0, PayoffKind.mp_inf, Fraction(1, 2), 0, budget=200_000,
    )


@pytest.mark.parametrize(
    "stem,cycle,expected",
    (("", "b", Fraction(1, 2)), ("a", "a", Fraction(2))),
)
def test_word_value(
    a0: WeightedAutomaton,
    stem: str,
    cycle: str,
    expected: Fraction,
) -> None:
    assert word_value(a0, word(stem, cycle), PayoffKind.mp_inf) == expected


@pytest.mark.parametrize("payoff", (PayoffKind.liminf, PayoffKind.limsup))
def test_enumeration_brackets_the_value_a0(
    a0: WeightedAutomaton,
    payoff: PayoffKind,
) -> None:
    value, _ = regret_word_value(a0, payoff)
    upper, lower = brute_regret_word(a0, payoff, 1, 6, 5_000_000)
    assert 0 <= lower <= value <= upper


def test_enumeration_is_tight_for_limsup_a0(a0: WeightedAutomaton) -> None:
    _, lower = brute_regret_word(a0, PayoffKind.limsup, 1, 6, 5_000_000)
    assert lower == 0


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("payoff", (PayoffKind.liminf, PayoffKind.limsup))
def test_enumeration_brackets_the_value_on_random_automata(
    payoff: PayoffKind,
    seed: int,
) -> None:
    a = random_automaton(2, 2, (-1, 2), ("a", "b"), seed)
    value, _ = regret_word_value(a, payoff)
    upper, lower = brute_regret_word(a, payoff, 1, 4, 5_000_000)
    assert 0 <= lower <= value <= upper
