import logging
from typing import Dict

from ..game import Objective, StochasticGame
from .base import BaseSynthesizer, SynthesisResult
from .buchi import buchi_synthesizer
from .cobuchi import cobuchi_synthesizer
from .parity import parity_synthesizer
from .reachability import reachability_synthesizer
from .safety import safety_synthesizer

logger = logging.getLogger(__name__)


class SynthesisManager:
    """Routes an objective to the synthesizer that handles its kind."""

    def __init__(self, synthesizers=(safety_synthesizer, reachability_synthesizer, buchi_synthesizer,
                                     cobuchi_synthesizer, parity_synthesizer)):
        self.synthesizers: Dict[str, BaseSynthesizer] = {s.kind: s for s in synthesizers}

    def synthesize(self, g: StochasticGame, objective: Objective) -> SynthesisResult:
        synthesizer = self.synthesizers[objective.kind]
        logger.info("synthesizing %s template on %d vertices", objective.kind, g.num_vertices)
        return synthesizer.run(g, objective)


synthesis_manager = SynthesisManager()


def synthesize(g: StochasticGame, objective: Objective) -> SynthesisResult:
    return synthesis_manager.synthesize(g, objective)
