from ..fixpoint import attr_prime, attr_prime_even
from ..game import Reachability, StochasticGame, VertexSet
from .base import BaseSynthesizer, SynthesisResult, edges_even


class ReachabilitySynthesizer(BaseSynthesizer):
    kind = Reachability.kind

    def run(self, g: StochasticGame, objective: Reachability) -> SynthesisResult:
        # A: every play from here reaches X almost surely, whoever moves
        a = attr_prime(g, objective.target)
        winning = attr_prime_even(g, a)
        outside_a = winning - a
        return self._result(g, objective, winning, colive=edges_even(g, outside_a, outside_a))


reachability_synthesizer = ReachabilitySynthesizer()


def reachability_template(g: StochasticGame, x: VertexSet) -> SynthesisResult:
    return reachability_synthesizer.run(g, Reachability(x))
