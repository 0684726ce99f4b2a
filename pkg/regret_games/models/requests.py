import typing as tp
from fractions import Fraction

from pydantic import BaseModel, PositiveInt, constr, validator

from regret_games.utils import parse_rational

from .common import ClassicValue, PayoffKind, Variant

Rational = constr(strip_whitespace=True, regex=r"^-?\d+(/\d+)?$")
Document = constr(min_length=1, max_length=1_000_000)


class ClassicRequest(BaseModel):
    model: Document  # type: ignore
    what: ClassicValue
    payoff: PayoffKind


class ValueRequest(BaseModel):
    model: Document  # type: ignore
    variant: Variant
    payoff: PayoffKind
    memory: tp.Optional[PositiveInt] = None


class ThresholdRequest(ValueRequest):
    bound: Rational  # type: ignore
    strict: bool = False
    bits: tp.Optional[PositiveInt] = None

    @validator("bound")
    def _positive_denominator(cls, value: str) -> str:
        parse_rational(value)
        return value

    @property
    def bound_value(self) -> Fraction:
        return parse_rational(self.bound)


class SpoilerBody(BaseModel):
    stem: tp.List[str]
    cycle: tp.List[str]
    best_value: str
    achieved_value: str


class ValueResponse(BaseModel):
    value: str
    strategy: tp.List[str]


class ThresholdResponse(BaseModel):
    answer: bool
    strategy: tp.Optional[tp.List[str]] = None
    spoiler: tp.Optional[SpoilerBody] = None


class ClassicResponse(BaseModel):
    value: str
    eve_strategy: tp.List[str]
    adam_strategy: tp.List[str]
