from ..fixpoint import safety_winning_set
from ..game import Safety, StochasticGame, VertexSet
from .base import BaseSynthesizer, SynthesisResult


class SafetySynthesizer(BaseSynthesizer):
    kind = Safety.kind

    def run(self, g: StochasticGame, objective: Safety) -> SynthesisResult:
        winning = safety_winning_set(g, objective.target)
        return self._result(g, objective, winning)


safety_synthesizer = SafetySynthesizer()


def safety_template(g: StochasticGame, x: VertexSet) -> SynthesisResult:
    return safety_synthesizer.run(g, Safety(x))
