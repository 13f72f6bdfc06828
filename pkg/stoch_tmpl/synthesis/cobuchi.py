from ..fixpoint import attr_prime, attr_prime_even, safety_winning_set
from ..game import CoBuchi, StochasticGame, VertexSet
from .base import BaseSynthesizer, SynthesisResult, edges_even


class CoBuchiSynthesizer(BaseSynthesizer):
    kind = CoBuchi.kind

    def run(self, g: StochasticGame, objective: CoBuchi) -> SynthesisResult:
        # safe core first, then almost-sure reachability of it
        safe = safety_winning_set(g, objective.target)
        a = attr_prime(g, safe)
        winning = attr_prime_even(g, a)
        colive = edges_even(g, safe, winning - safe) | edges_even(g, winning - a, winning - a)
        return self._result(g, objective, winning, colive=colive)


cobuchi_synthesizer = CoBuchiSynthesizer()


def cobuchi_template(g: StochasticGame, x: VertexSet) -> SynthesisResult:
    return cobuchi_synthesizer.run(g, CoBuchi(x))
