import typing as tp
from fractions import Fraction

from .models.common import PayoffKind
from .models.lasso import Lasso


def cycle_mean(weights: tp.Sequence[Fraction]) -> Fraction:
    return Fraction(sum(weights, Fraction(0)), len(weights))


def lasso_value(lasso: Lasso, payoff: PayoffKind) -> Fraction:
    """Value of stem.cycle^omega; both mean-payoff variants coincide here."""
    if payoff is PayoffKind.inf:
        return min(lasso.stem + lasso.cycle)
    if payoff is PayoffKind.sup:
        return max(lasso.stem + lasso.cycle)
    if payoff is PayoffKind.liminf:
        return min(lasso.cycle)
    if payoff is PayoffKind.limsup:
        return max(lasso.cycle)
    return cycle_mean(lasso.cycle)

