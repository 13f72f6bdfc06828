"""Bounded counterexample search over fair lassos."""
import logging
from typing import Mapping, Optional, Sequence

from ..game import Lasso, Objective, Owner, StochasticGame, VertexSet, lasso_satisfies
from ..template import StrategyTemplate, lasso_satisfies_template
from .lassos import enumerate_lassos, is_random_fair, is_support_fair

logger = logging.getLogger(__name__)


def find_template_counterexample(game: StochasticGame, template: StrategyTemplate, objective: Objective,
                                 start: VertexSet, k: int) -> Optional[Lasso]:
    """First Random-fair lasso from ``start`` that satisfies the template but not the objective."""
    def allowed(u: int, v: int) -> bool:
        return (u, v) not in template.prohibited

    for lasso in enumerate_lassos(game, start, k, allowed):
        if not is_random_fair(game, lasso):
            continue
        if lasso_satisfies_template(lasso, template) and not lasso_satisfies(lasso, objective):
            logger.info("template counterexample %s", lasso)
            return lasso
    return None


def find_strategy_counterexample(game: StochasticGame, support: Mapping[int, Sequence[int]],
                                 objective: Objective, start: VertexSet, k: int) -> Optional[Lasso]:
    """
    First lasso from ``start`` that follows the strategy's support, is fair
    at Random vertices and at the Even vertices of the support, and violates
    the objective.
    """
    def allowed(u: int, v: int) -> bool:
        return game.owners[u] != Owner.EVEN or u not in support or v in support[u]

    for lasso in enumerate_lassos(game, start, k, allowed):
        if (is_random_fair(game, lasso) and is_support_fair(game, lasso, support)
                and not lasso_satisfies(lasso, objective)):
            logger.info("strategy counterexample %s", lasso)
            return lasso
    return None
