from ..fixpoint import buchi_winning_set
from ..game import Buchi, StochasticGame, VertexSet
from .base import BaseSynthesizer, SynthesisResult, live_groups


class BuchiSynthesizer(BaseSynthesizer):
    kind = Buchi.kind

    def run(self, g: StochasticGame, objective: Buchi) -> SynthesisResult:
        winning = buchi_winning_set(g, objective.target)
        groups = live_groups(g, objective.target & winning)
        return self._result(g, objective, winning, groups=groups)


buchi_synthesizer = BuchiSynthesizer()


def buchi_template(g: StochasticGame, x: VertexSet) -> SynthesisResult:
    return buchi_synthesizer.run(g, Buchi(x))
