from typing import TypedDict, Annotated, List, Optional
import operator

from .extraction import PureStrategyState
from .models import AdaptReport
from .game import Edge, Lasso, Objective, StochasticGame, VertexSet
from .synthesis import SynthesisResult
from .template import StrategyTemplate


class AdaptState(TypedDict, total=False):
    """
    State dictionary for the adapt workflow.
    """
    # Progress lines, appended by every node
    messages: Annotated[List[str], operator.add]

    # Inputs
    game: StochasticGame
    objective: Objective
    template: StrategyTemplate
    winning: VertexSet
    disabled: List[Edge]
    k: int
    run_fresh: bool

    # Produced along the way
    combined: Optional[StrategyTemplate]
    strategy: Optional[PureStrategyState]
    counterexample: Optional[Lasso]
    fresh: Optional[SynthesisResult]
    fresh_seconds: Optional[float]

    # Wall-clock seconds of the adaptation steps (combine, extract)
    adapt_timings: Annotated[List[float], operator.add]

    # "preserved", "not_winning" or "conflict"
    verdict: Optional[str]
    conflict_witness: Optional[object]

    report: Optional[AdaptReport]

    # Error tracking
    errors: Annotated[List[str], operator.add]
