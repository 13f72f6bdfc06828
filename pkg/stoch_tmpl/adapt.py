"""
Fault adaptation: disabled edges become a prohibited-only template that is
combined with the existing one, then the strategy is re-extracted and
checked again on bounded lassos.
"""
import logging
import time
from typing import Any, Dict

from .errors import ResourceBudgetError, SemanticError, TemplateConflictError, TemplateInconsistencyError
from .extraction import extract_pure
from .game import StochasticGame
from .models import AdaptReport, TemplateDocument
from .synthesis import synthesize
from .template import StrategyTemplate, combine
from .verify.checks import find_strategy_counterexample

logger = logging.getLogger(__name__)


def without_edges(g: StochasticGame, edges) -> StochasticGame:
    removed = set(edges)
    return StochasticGame.build(
        g.owners,
        ([v for v in succ if (u, v) not in removed] for u, succ in enumerate(g.successors)),
    )


class AdaptationAgent:
    def combine(self, state: Dict[str, Any]) -> Dict[str, Any]:
        started = time.perf_counter()
        fault = StrategyTemplate.of(prohibited=state["disabled"])
        logger.info("combining with %d disabled edges", len(state["disabled"]))
        try:
            combined = combine(state["template"], fault, state["game"], state["winning"])
        except TemplateConflictError as e:
            return {
                "verdict": "conflict",
                "conflict_witness": e.witness,
                "errors": [str(e)],
                "adapt_timings": [time.perf_counter() - started],
                "messages": ["❌ conflict while combining"],
            }
        return {
            "combined": combined,
            "adapt_timings": [time.perf_counter() - started],
            "messages": ["✅ combined"],
        }

    def extract(self, state: Dict[str, Any]) -> Dict[str, Any]:
        started = time.perf_counter()
        try:
            strategy = extract_pure(state["game"], state["combined"], state["winning"])
        except TemplateInconsistencyError as e:
            return {
                "verdict": "not_winning",
                "errors": [str(e)],
                "adapt_timings": [time.perf_counter() - started],
                "messages": [f"❌ extraction failed at vertex {e.vertex}"],
            }
        return {
            "strategy": strategy,
            "adapt_timings": [time.perf_counter() - started],
            "messages": ["✅ strategy re-extracted"],
        }

    def check(self, state: Dict[str, Any]) -> Dict[str, Any]:
        g = state["game"]
        try:
            witness = find_strategy_counterexample(
                g, state["strategy"].support, state["objective"], state["winning"], state["k"])
        except ResourceBudgetError as e:
            return {"verdict": "not_winning", "errors": [str(e)], "messages": ["⚠️ lasso budget exhausted"]}
        if witness is not None:
            return {"verdict": "not_winning", "counterexample": witness,
                    "messages": [f"❌ counterexample {witness.prefix} {witness.cycle}"]}
        return {"verdict": "preserved", "messages": [f"✅ no counterexample up to size {state['k']}"]}

    def fresh_synthesis(self, state: Dict[str, Any]) -> Dict[str, Any]:
        if not state.get("run_fresh"):
            return {}
        g = state["game"]
        started = time.perf_counter()
        try:
            reduced = without_edges(g, state["disabled"])
        except SemanticError as e:
            # a disabled edge was the only move of its vertex
            return {"errors": [f"fresh synthesis skipped: {e}"]}
        result = synthesize(reduced, state["objective"])
        try:
            extract_pure(reduced, result.template, result.winning_set)
        except TemplateInconsistencyError as e:
            logger.warning("fresh extraction failed: %s", e)
        return {
            "fresh": result,
            "fresh_seconds": time.perf_counter() - started,
            "messages": ["⏱️ fresh synthesis done"],
        }

    def summarize(self, state: Dict[str, Any]) -> Dict[str, Any]:
        combined = state.get("combined")
        strategy = state.get("strategy")
        lasso = state.get("counterexample")
        fresh = state.get("fresh")
        witness = state.get("conflict_witness")
        errors = list(state.get("errors", []))
        if witness is not None:
            errors.append(f"witness: {sorted(witness) if isinstance(witness, frozenset) else witness}")
        report = AdaptReport(
            verdict=state["verdict"],
            disabled=[[u, v] for u, v in state["disabled"]],
            template=None if combined is None else TemplateDocument.from_template(
                combined, state["winning"], state["objective"]),
            stalled=sorted(strategy.stalled) if strategy is not None else [],
            counterexample=None if lasso is None else {"prefix": list(lasso.prefix), "cycle": list(lasso.cycle)},
            errors=errors,
            adapt_seconds=sum(state.get("adapt_timings", [])),
            fresh_seconds=state.get("fresh_seconds"),
            fresh_template=None if fresh is None else TemplateDocument.from_template(
                fresh.template, fresh.winning_set, fresh.objective),
        )
        logger.info("adapt verdict: %s", report.verdict)
        return {"report": report}


adaptation_agent = AdaptationAgent()
