"""
Monte-Carlo plays of an extracted strategy against an adversary.

Safety and reachability are decided exactly on the finite prefix. Büchi,
co-Büchi and parity are judged on the suffix after a burn-in of half the
horizon and are reported as heuristic.
"""
import copy
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from statistics import mean
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..config import MC_WORKERS
from ..errors import ParameterError
from ..extraction import Adversary, PlayTranscript, StrategyState, UniformAdversary, play
from ..game import Buchi, CoBuchi, Edge, Objective, Parity, Reachability, Safety, StochasticGame
from ..template import StrategyTemplate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOutcome:
    satisfied: bool
    edge_counts: Counter
    colive_uses: int
    last_colive_use: Optional[int]
    live_groups_fired: bool


@dataclass
class MonteCarloStats:
    runs: int
    horizon: int
    seed: int
    objective: str
    heuristic: bool
    satisfied: int = 0
    edge_usage: Counter = field(default_factory=Counter)
    colive_uses: List[int] = field(default_factory=list)
    last_colive_use: List[int] = field(default_factory=list)
    live_groups_fired: int = 0

    @property
    def frequency(self) -> float:
        return self.satisfied / self.runs if self.runs else 0.0

    @property
    def mean_colive_uses(self) -> float:
        return mean(self.colive_uses) if self.colive_uses else 0.0

    @property
    def mean_last_colive_use(self) -> Optional[float]:
        return mean(self.last_colive_use) if self.last_colive_use else None

    @property
    def live_group_rate(self) -> float:
        return self.live_groups_fired / self.runs if self.runs else 0.0


def judge_prefix(vertices: Sequence[int], objective: Objective, burn_in: int) -> bool:
    suffix = vertices[burn_in:] or vertices[-1:]
    match objective:
        case Safety(target=x):
            return all(v in x for v in vertices)
        case Reachability(target=x):
            return any(v in x for v in vertices)
        case Buchi(target=x):
            return any(v in x for v in suffix)
        case CoBuchi(target=x):
            return all(v in x for v in suffix)
        case Parity(priorities=p):
            return min(p[v] for v in suffix) % 2 == 0
    raise TypeError(f"unsupported objective {objective!r}")


def _account(transcript: PlayTranscript, objective: Objective, template: Optional[StrategyTemplate],
             burn_in: int) -> RunOutcome:
    edges: List[Edge] = transcript.edges
    counts = Counter(edges)
    colive = template.colive if template is not None else frozenset()
    colive_steps = [i for i, e in enumerate(edges) if e in colive]

    fired = True
    if template is not None:
        late_edges = set(edges[burn_in:])
        late_vertices = {u for u, _ in late_edges}
        for group in template.live_groups:
            if any(u in late_vertices for u, _ in group) and not (group & late_edges):
                fired = False
                break

    return RunOutcome(
        satisfied=judge_prefix(transcript.vertices, objective, burn_in),
        edge_counts=counts,
        colive_uses=len(colive_steps),
        last_colive_use=colive_steps[-1] if colive_steps else None,
        live_groups_fired=fired,
    )


def monte_carlo(g: StochasticGame, strategy: StrategyState, adversary: Optional[Adversary],
                objective: Objective, start: int, runs: int, horizon: int, seed: int,
                template: Optional[StrategyTemplate] = None) -> MonteCarloStats:
    """
    Play ``runs`` independent plays of ``horizon`` steps. Every run gets its
    own copy of the strategy and adversary and its own rng stream spawned
    from ``seed``; outcomes are aggregated in run order.
    """
    if horizon < g.num_vertices:
        raise ParameterError(f"horizon {horizon} is shorter than |V| = {g.num_vertices}")
    if runs < 1:
        raise ParameterError(f"runs must be >= 1, got {runs}")
    adversary = adversary or UniformAdversary()
    burn_in = horizon // 2
    streams = np.random.SeedSequence(seed).spawn(runs)

    def one(index: int) -> RunOutcome:
        rng = np.random.default_rng(streams[index])
        transcript = play(copy.deepcopy(strategy), start, horizon, rng, copy.deepcopy(adversary), seed)
        return _account(transcript, objective, template, burn_in)

    stats = MonteCarloStats(runs=runs, horizon=horizon, seed=seed, objective=objective.kind,
                            heuristic=not isinstance(objective, (Safety, Reachability)))
    with ThreadPoolExecutor(max_workers=MC_WORKERS) as pool:
        for outcome in pool.map(one, range(runs)):
            stats.satisfied += outcome.satisfied
            stats.edge_usage.update(outcome.edge_counts)
            stats.colive_uses.append(outcome.colive_uses)
            if outcome.last_colive_use is not None:
                stats.last_colive_use.append(outcome.last_colive_use)
            stats.live_groups_fired += outcome.live_groups_fired
    logger.info("%d runs: %d satisfied %s", runs, stats.satisfied, objective.kind)
    return stats


def usage_by_edge(stats: MonteCarloStats) -> Dict[str, int]:
    return {f"{u}->{v}": n for (u, v), n in sorted(stats.edge_usage.items())}
