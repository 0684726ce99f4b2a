import typing as tp
from enum import Enum
from fractions import Fraction

from pydantic import BaseModel

Rational = Fraction


class Error(BaseModel):
    error_key: str
    error_message: str
    error_loc: tp.Optional[tp.Any] = None


class ErrorResponse(BaseModel):
    errors: tp.List[Error]


class FrozenModel(BaseModel):

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class Player(str, Enum):
    eve = "eve"
    adam = "adam"

    @property
    def opponent(self) -> "Player":
        return Player.adam if self is Player.eve else Player.eve


class PayoffKind(str, Enum):
    inf = "inf"
    sup = "sup"
    liminf = "liminf"
    limsup = "limsup"
    mp_inf = "mp-inf"
    mp_sup = "mp-sup"

    @property
    def is_mean_payoff(self) -> bool:
        return self in (PayoffKind.mp_inf, PayoffKind.mp_sup)

    @property
    def is_prefix_independent(self) -> bool:
        return self not in (PayoffKind.inf, PayoffKind.sup)

    @property
    def recorded(self) -> "PayoffKind":
        """Prefix-independent payoff that reads a record transform."""
        return _RECORDED.get(self, self)

    @property
    def negated(self) -> "PayoffKind":
        """Payoff p' with p'(-w) = -p(w) on ultimately periodic plays."""
        return _NEGATED[self]


class Variant(str, Enum):
    """Which Adam strategies the regret ranges over."""

    any = "any"
    memoryless = "memoryless"
    word = "word"
    gfg = "gfg"
    dbp = "dbp"


class ClassicValue(str, Enum):
    aval = "aval"
    cval = "cval"


_RECORDED = {
    PayoffKind.inf: PayoffKind.liminf,
    PayoffKind.sup: PayoffKind.limsup,
}

_NEGATED = {
    PayoffKind.inf: PayoffKind.sup,
    PayoffKind.sup: PayoffKind.inf,
    PayoffKind.liminf: PayoffKind.limsup,
    PayoffKind.limsup: PayoffKind.liminf,
    PayoffKind.mp_inf: PayoffKind.mp_sup,
    PayoffKind.mp_sup: PayoffKind.mp_inf,
}


def to_fraction(value: tp.Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("Floating point weights are not accepted")
    return Fraction(value)
