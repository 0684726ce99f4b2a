import typing as tp
from fractions import Fraction

from .common import FrozenModel
from .lasso import LassoWord
from .strategy import MooreStrategy

# None stands for minus infinity: an Eve edge without sibling.
DeviationWeights = tp.Dict[int, tp.Optional[Fraction]]


class GameValueResult(FrozenModel):
    value: Fraction
    eve_strategy: MooreStrategy
    adam_strategy: MooreStrategy


class RegretResult(FrozenModel):
    regret: Fraction
    eve_strategy: MooreStrategy
    adam_witness: tp.Optional[MooreStrategy] = None


class Spoiler(FrozenModel):
    word: LassoWord
    best_value: Fraction
    achieved_value: Fraction

    @property
    def gap(self) -> Fraction:
        return self.best_value - self.achieved_value


class WordRegretCertificate(FrozenModel):
    answer: bool
    eve_strategy: tp.Optional[MooreStrategy] = None
    spoiler: tp.Optional[Spoiler] = None
