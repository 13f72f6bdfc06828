"""Documents read and written by the CLI."""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from .errors import SemanticError
from .game import OBJECTIVE_KINDS, Objective, Owner, Parity, PriorityFunction, StochasticGame, VertexSet, make_objective
from .template import StrategyTemplate
from .verify.monte_carlo import MonteCarloStats, usage_by_edge

EdgePair = List[int]


def _pairs(edges) -> List[EdgePair]:
    return [[u, v] for u, v in sorted(edges)]


def _check_pairs(edges: List[EdgePair]) -> List[EdgePair]:
    for e in edges:
        if len(e) != 2:
            raise ValueError(f"edge {e} is not a [src, dst] pair")
    return edges


class ObjectiveSpec(BaseModel):
    kind: str
    target: List[int] = Field(default_factory=list)

    @field_validator("kind")
    @classmethod
    def known_kind(cls, v: str) -> str:
        if v not in OBJECTIVE_KINDS:
            raise ValueError(f"unknown objective '{v}'")
        return v

    @classmethod
    def from_objective(cls, objective: Objective) -> "ObjectiveSpec":
        if isinstance(objective, Parity):
            return cls(kind=objective.kind)
        return cls(kind=objective.kind, target=list(objective.target))

    def to_objective(self, game: StochasticGame, priorities: Optional[PriorityFunction] = None) -> Objective:
        return make_objective(self.kind, game, self.target, priorities)


class TemplateDocument(BaseModel):
    prohibited: List[EdgePair] = Field(default_factory=list)
    live_groups: List[List[EdgePair]] = Field(default_factory=list)
    colive: List[EdgePair] = Field(default_factory=list)
    winning_set: Optional[List[int]] = None
    objective: Optional[ObjectiveSpec] = None

    @field_validator("prohibited", "colive")
    @classmethod
    def edge_pairs(cls, edges: List[EdgePair]) -> List[EdgePair]:
        return _check_pairs(edges)

    @field_validator("live_groups")
    @classmethod
    def group_pairs(cls, groups: List[List[EdgePair]]) -> List[List[EdgePair]]:
        for group in groups:
            _check_pairs(group)
        return groups

    @classmethod
    def from_template(cls, t: StrategyTemplate, winning_set=None,
                      objective: Optional[Objective] = None) -> "TemplateDocument":
        return cls(
            prohibited=_pairs(t.prohibited),
            live_groups=[_pairs(g) for g in t.live_groups],
            colive=_pairs(t.colive),
            winning_set=None if winning_set is None else sorted(winning_set),
            objective=None if objective is None else ObjectiveSpec.from_objective(objective),
        )

    def to_template(self, game: Optional[StochasticGame] = None) -> StrategyTemplate:
        t = StrategyTemplate.of(
            prohibited=[tuple(e) for e in self.prohibited],
            live_groups=[[tuple(e) for e in g] for g in self.live_groups],
            colive=[tuple(e) for e in self.colive],
        )
        if game is not None:
            t.validate(game)
        return t

    def winning(self, game: StochasticGame) -> Optional[VertexSet]:
        return None if self.winning_set is None else game.vertex_set(self.winning_set)


class AdversaryTable(BaseModel):
    """Fixed Odd choices keyed by vertex id."""

    choices: Dict[int, int]

    def check(self, game: StochasticGame) -> Dict[int, int]:
        for u, v in self.choices.items():
            if not 0 <= u < game.num_vertices or game.owners[u] != Owner.ODD:
                raise SemanticError(f"adversary table entry {u} is not an Odd vertex")
            if not game.has_edge(u, v):
                raise SemanticError(f"adversary table entry ({u},{v}) is not an edge")
        return dict(self.choices)


class SimulationReport(BaseModel):
    objective: str
    runs: int
    horizon: int
    seed: int
    satisfied: int
    frequency: float
    heuristic: bool
    mean_colive_uses: float
    mean_last_colive_use: Optional[float] = None
    live_group_rate: float
    edge_usage: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def from_stats(cls, stats: MonteCarloStats) -> "SimulationReport":
        return cls(
            objective=stats.objective,
            runs=stats.runs,
            horizon=stats.horizon,
            seed=stats.seed,
            satisfied=stats.satisfied,
            frequency=stats.frequency,
            heuristic=stats.heuristic,
            mean_colive_uses=stats.mean_colive_uses,
            mean_last_colive_use=stats.mean_last_colive_use,
            live_group_rate=stats.live_group_rate,
            edge_usage=usage_by_edge(stats),
        )

    def to_text(self) -> str:
        lines = []
        for key, value in self.model_dump().items():
            if key == "edge_usage":
                for edge, count in value.items():
                    lines.append(f"edge {edge}: {count}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


class AdaptReport(BaseModel):
    verdict: str
    disabled: List[EdgePair]
    template: Optional[TemplateDocument] = None
    stalled: List[int] = Field(default_factory=list)
    counterexample: Optional[Dict[str, List[int]]] = None
    errors: List[str] = Field(default_factory=list)
    adapt_seconds: float = 0.0
    fresh_seconds: Optional[float] = None
    fresh_template: Optional[TemplateDocument] = None

