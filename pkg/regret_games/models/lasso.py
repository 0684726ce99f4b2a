import typing as tp
from fractions import Fraction

from pydantic import validator

from .common import FrozenModel, to_fraction


class Lasso(FrozenModel):
    """Ultimately periodic weight sequence stem.cycle^omega."""

    stem: tp.Tuple[Fraction, ...] = ()
    cycle: tp.Tuple[Fraction, ...]

    @validator("stem", "cycle", pre=True)
    def _to_fractions(
        cls,
        value: tp.Iterable[tp.Any],
    ) -> tp.Tuple[Fraction, ...]:
        return tuple(to_fraction(v) for v in value)

    @validator("cycle")
    def _cycle_not_empty(
        cls,
        value: tp.Tuple[Fraction, ...],
    ) -> tp.Tuple[Fraction, ...]:
        if not value:
            raise ValueError("Lasso cycle must be nonempty")
        return value


class LassoWord(FrozenModel):
    """Ultimately periodic word stem.cycle^omega."""

    stem: tp.Tuple[str, ...] = ()
    cycle: tp.Tuple[str, ...]

    @validator("cycle")
    def _cycle_not_empty(
        cls,
        value: tp.Tuple[str, ...],
    ) -> tp.Tuple[str, ...]:
        if not value:
            raise ValueError("Word cycle must be nonempty")
        return value

    def letter(self, position: int) -> str:
        if position < len(self.stem):
            return self.stem[position]
        return self.cycle[(position - len(self.stem)) % len(self.cycle)]

    def __str__(self) -> str:
        return f"{' '.join(self.stem)} ({' '.join(self.cycle)})^w".strip()
