"""Request-level entry points shared by the command line and the API."""

import typing as tp
from fractions import Fraction

from .exceptions import ParseError, UndecidableRequestError
from .log import app_logger
from .models.arena import Arena
from .models.automaton import WeightedAutomaton
from .models.common import ClassicValue, PayoffKind, Variant
from .models.results import GameValueResult, Spoiler
from .models.strategy import MooreStrategy
from .regret.any import regret_any
from .regret.memoryless import regret_memoryless
from .regret.word.fixed_memory import (
    fixed_memory_regret_search,
    fixed_memory_regret_value,
)
from .regret.word.threshold import (
    is_dbp,
    regret_word_threshold,
    regret_word_value,
)
from .settings import SolverConfig
from .solvers.values import antagonistic_value, cooperative_value

Subject = tp.Union[Arena, WeightedAutomaton]


class ValueReport(tp.NamedTuple):
    value: Fraction
    strategy: MooreStrategy


class ThresholdReport(tp.NamedTuple):
    answer: bool
    strategy: tp.Optional[MooreStrategy] = None
    spoiler: tp.Optional[Spoiler] = None


def _arena(subject: Subject, variant: str) -> Arena:
    if not isinstance(subject, Arena):
        raise ParseError(f"Variant {variant!r} needs an arena")
    return subject


def _automaton(subject: Subject, variant: str) -> WeightedAutomaton:
    if not isinstance(subject, WeightedAutomaton):
        raise ParseError(f"Variant {variant!r} needs an automaton")
    return subject


def _within(value: Fraction, bound: Fraction, strict: bool) -> bool:
    return value < bound if strict else value <= bound


class SolverService:

    def __init__(
        self,
        jobs: int,
        search_budget: int,
        oracle_budget: int,
        lasso_bound: int,
    ) -> None:
        self.jobs = jobs
        self.search_budget = search_budget
        self.oracle_budget = oracle_budget
        self.lasso_bound = lasso_bound

    @classmethod
    def from_config(
        cls,
        config: SolverConfig,
        jobs: tp.Optional[int] = None,
    ) -> "SolverService":
        return cls(
            jobs=config.jobs if jobs is None else jobs,
            search_budget=config.search_budget,
            oracle_budget=config.oracle_budget,
            lasso_bound=config.lasso_bound,
        )

    def value(
        self,
        subject: Subject,
        variant: Variant,
        p: PayoffKind,
        memory: tp.Optional[int] = None,
    ) -> ValueReport:
        app_logger.info(
            f"Regret value requested: variant={variant.value}, "
            f"payoff={p.value}, memory={memory}"
        )
        if variant in (Variant.any, Variant.memoryless):
            arena = _arena(subject, variant.value)
            solve = regret_any if variant is Variant.any else regret_memoryless
            result = solve(arena, p, self.jobs)
            return ValueReport(result.regret, result.eve_strategy)
        if variant is not Variant.word:
            raise ParseError(f"Variant {variant.value!r} has no value")
        automaton = _automaton(subject, variant.value)
        if memory is not None:
            regret, strategy = fixed_memory_regret_value(
                automaton, p, memory, self.search_budget,
            )
            return ValueReport(regret, strategy)
        if p.is_mean_payoff:
            raise UndecidableRequestError()
        regret, strategy = regret_word_value(automaton, p, self.jobs)
        return ValueReport(regret, strategy)

    def threshold(
        self,
        subject: Subject,
        variant: Variant,
        p: PayoffKind,
        bound: Fraction,
        strict: bool = False,
        memory: tp.Optional[int] = None,
        bits: tp.Optional[int] = None,
    ) -> ThresholdReport:
        app_logger.info(
            f"Regret threshold requested: variant={variant.value}, "
            f"payoff={p.value}, bound={bound}, strict={strict}"
        )
        if variant in (Variant.any, Variant.memoryless):
            report = self.value(subject, variant, p)
            if _within(report.value, bound, strict):
                return ThresholdReport(True, report.strategy)
            return ThresholdReport(False)

        automaton = _automaton(subject, variant.value)
        if variant is Variant.dbp:
            if bits is None:
                raise ParseError("Variant 'dbp' needs a number of bits")
            answer = is_dbp(
                automaton, p, bound, bits, strict, self.search_budget,
            )
            return ThresholdReport(answer)
        if variant is Variant.word and memory is not None:
            found = fixed_memory_regret_search(
                automaton, p, memory, bound, strict, self.search_budget,
            )
            return ThresholdReport(found is not None, found)
        certificate = regret_word_threshold(
            automaton, p, bound, strict, self.jobs,
        )
        return ThresholdReport(
            certificate.answer,
            certificate.eve_strategy,
            certificate.spoiler,
        )

    def classic(
        self,
        subject: Subject,
        what: ClassicValue,
        p: PayoffKind,
    ) -> GameValueResult:
        arena = _arena(subject, "classic")
        if what is ClassicValue.aval:
            return antagonistic_value(arena, p, jobs=self.jobs)
        return cooperative_value(arena, p)
