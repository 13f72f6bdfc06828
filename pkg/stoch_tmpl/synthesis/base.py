import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional

from ..fixpoint import attr_prime, pre_even
from ..game import Edge, Objective, StochasticGame, VertexSet
from ..template import LiveGroup, StrategyTemplate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthesisResult:
    winning_set: VertexSet
    template: StrategyTemplate
    objective: Optional[Objective] = None


def edges_even(g: StochasticGame, x: VertexSet, y: VertexSet) -> FrozenSet[Edge]:
    """Edges□(X, Y): Even's edges from X into Y."""
    return frozenset((u, v) for u in x & g.even for v in g.successors[u] if v in y)


def live_groups(g: StochasticGame, x: VertexSet) -> List[LiveGroup]:
    """
    Grow X by alternating Attr′ and one Even step; every Even step that was
    needed contributes the edges it used as one live-group.
    """
    groups: List[LiveGroup] = []
    for _ in range(g.num_vertices + 1):
        a = attr_prime(g, x)
        x = a | pre_even(g, a)
        if x == a:
            return groups
        groups.append(edges_even(g, x - a, a))
    raise AssertionError("LiveGroups did not terminate within |V| iterations")


class BaseSynthesizer:
    """Common shape of the per-objective template constructions."""

    kind = ""

    def run(self, g: StochasticGame, objective: Objective) -> SynthesisResult:
        raise NotImplementedError

    def _result(self, g: StochasticGame, objective: Objective, winning: VertexSet,
                groups: Iterable[Iterable[Edge]] = (), colive: Iterable[Edge] = ()) -> SynthesisResult:
        prohibited = edges_even(g, winning, winning.complement())
        template = StrategyTemplate.of(prohibited=prohibited, live_groups=groups, colive=colive)
        logger.info("%s template: |W|=%d |P|=%d |L|=%d |C|=%d", self.kind, len(winning),
                    len(template.prohibited), len(template.live_groups), len(template.colive))
        return SynthesisResult(winning_set=winning, template=template, objective=objective)
