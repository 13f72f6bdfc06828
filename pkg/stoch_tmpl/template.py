"""
Strategy templates (P, L, C): prohibited edges, live-groups and co-live edges
over Even's edges, with their induced-formula semantics on lassos.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

from .errors import TemplateConflictError, StructuralError
from .game import Edge, Lasso, Owner, StochasticGame, VertexSet
from .verify.lassos import enumerate_lassos

logger = logging.getLogger(__name__)

LiveGroup = FrozenSet[Edge]


def _dedup_groups(groups: Iterable[Iterable[Edge]]) -> Tuple[LiveGroup, ...]:
    seen, out = set(), []
    for group in groups:
        g = frozenset((int(u), int(v)) for u, v in group)
        if g not in seen:
            seen.add(g)
            out.append(g)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class StrategyTemplate:
    """
    A template T = (P, L, C).

    Live-groups are kept in construction order (the order synthesis found
    them in) but compared as a set.
    """

    prohibited: FrozenSet[Edge] = frozenset()
    live_groups: Tuple[LiveGroup, ...] = ()
    colive: FrozenSet[Edge] = frozenset()

    @classmethod
    def of(cls, prohibited: Iterable[Edge] = (), live_groups: Iterable[Iterable[Edge]] = (),
           colive: Iterable[Edge] = ()) -> "StrategyTemplate":
        return cls(
            prohibited=frozenset((int(u), int(v)) for u, v in prohibited),
            live_groups=_dedup_groups(live_groups),
            colive=frozenset((int(u), int(v)) for u, v in colive),
        )

    @property
    def group_set(self) -> FrozenSet[LiveGroup]:
        return frozenset(self.live_groups)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrategyTemplate):
            return NotImplemented
        return (self.prohibited == other.prohibited
                and self.group_set == other.group_set
                and self.colive == other.colive)

    def __hash__(self) -> int:
        return hash((self.prohibited, self.group_set, self.colive))

    def edges(self) -> FrozenSet[Edge]:
        out = set(self.prohibited) | set(self.colive)
        for group in self.live_groups:
            out |= group
        return frozenset(out)

    def is_empty(self) -> bool:
        return not self.prohibited and not self.live_groups and not self.colive

    def validate(self, game: StochasticGame) -> None:
        for u, v in self.edges():
            if not game.has_edge(u, v):
                raise StructuralError(f"template edge ({u},{v}) is not an edge of the game")
            if game.owners[u] != Owner.EVEN:
                raise StructuralError(f"template edge ({u},{v}) does not leave an Even vertex")
        overlap = self.prohibited & self.colive
        if overlap:
            logger.warning("edges both prohibited and co-live (prohibition wins): %s", sorted(overlap))


@dataclass(frozen=True)
class TemplateSize:
    overall: int
    element_wise: Tuple[int, int, int]


class Permissiveness(str, Enum):
    EQUAL = "equal"
    T1_LESS = "t1_less"
    T2_LESS = "t2_less"
    INCOMPARABLE = "incomparable"


def lasso_satisfies_template(lasso: Lasso, t: StrategyTemplate,
                             game: Optional[StochasticGame] = None) -> bool:
    """Truth of ψ_T = ψ_P ∧ ψ_L ∧ ψ_C on ``prefix · cycle^ω``."""
    if game is not None:
        lasso.validate(game)
    cycle_edges = set(lasso.cycle_edges())
    if t.prohibited and (t.prohibited & (cycle_edges | set(lasso.prefix_edges()))):
        return False
    if t.colive & cycle_edges:
        return False
    recurring = set(lasso.cycle)
    for group in t.live_groups:
        if any(u in recurring for u, _ in group) and not (group & cycle_edges):
            return False
    return True


def combine(t1: StrategyTemplate, t2: StrategyTemplate,
            game: Optional[StochasticGame] = None,
            winning_set: Optional[VertexSet] = None) -> StrategyTemplate:
    """
    Component-wise union of two templates.

    Raises ``TemplateConflictError`` when a live-group can no longer recur
    (all its edges prohibited or co-live), or when an Even vertex of the
    winning set is left with only prohibited edges.
    """
    merged = StrategyTemplate.of(
        prohibited=t1.prohibited | t2.prohibited,
        live_groups=t1.live_groups + t2.live_groups,
        colive=t1.colive | t2.colive,
    )
    blocked = merged.prohibited | merged.colive
    for group in merged.live_groups:
        if group <= blocked:
            raise TemplateConflictError(
                f"live-group {sorted(group)} lies entirely in prohibited or co-live edges", group)

    if game is not None and winning_set is not None:
        for u in winning_set & game.even:
            if all((u, v) in merged.prohibited for v in game.successors[u]):
                raise TemplateConflictError(f"every edge of Even vertex {u} is prohibited", u)
    return merged


def superset_implies_less_permissive(t1: StrategyTemplate, t2: StrategyTemplate) -> bool:
    """Syntactic sufficient condition for t1 being no more permissive than t2."""
    return (t1.prohibited >= t2.prohibited
            and t1.group_set >= t2.group_set
            and t1.colive >= t2.colive)


def size(t: StrategyTemplate) -> TemplateSize:
    parts = (len(t.prohibited), sum(len(g) for g in t.live_groups), len(t.colive))
    return TemplateSize(overall=sum(parts), element_wise=parts)


def compare_permissiveness_bounded(t1: StrategyTemplate, t2: StrategyTemplate,
                                   game: StochasticGame, start: VertexSet, k: int) -> Permissiveness:
    """
    Compare the lasso languages of two templates over every lasso from
    ``start`` with ``|prefix| + |cycle| <= k``. Strict and incomparable
    verdicts are definitive; equality holds for the bounded universe only.
    """
    only_1 = only_2 = False
    for lasso in enumerate_lassos(game, start, k):
        s1 = lasso_satisfies_template(lasso, t1)
        s2 = lasso_satisfies_template(lasso, t2)
        only_1 |= s1 and not s2
        only_2 |= s2 and not s1
        if only_1 and only_2:
            return Permissiveness.INCOMPARABLE
    if only_1:
        return Permissiveness.T2_LESS
    if only_2:
        return Permissiveness.T1_LESS
    return Permissiveness.EQUAL
