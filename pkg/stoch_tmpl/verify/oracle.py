"""
Brute-force almost-sure winning sets: every pure memoryless Even profile is
checked against every pure memoryless Odd profile on the induced chain.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterator, Mapping

from ..config import ORACLE_MAX_VERTICES, ORACLE_PROFILE_BUDGET, ORACLE_WORKERS
from ..errors import ResourceBudgetError
from ..game import Objective, Owner, StochasticGame, VertexSet
from .chains import chain_satisfies_as, induced_chain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MemorylessProfile:
    owner: Owner
    choice: Mapping[int, int]

    @classmethod
    def count(cls, game: StochasticGame, owner: Owner) -> int:
        return prod(len(game.successors[u]) for u in game.owned_by(owner))

    @classmethod
    def enumerate(cls, game: StochasticGame, owner: Owner) -> Iterator["MemorylessProfile"]:
        vertices = list(game.owned_by(owner))
        for picks in itertools.product(*(game.successors[u] for u in vertices)):
            yield cls(owner, dict(zip(vertices, picks)))


@dataclass(frozen=True)
class QualitativeVerdict:
    """Per start vertex: can Even make the objective hold with probability one?"""

    holds: Dict[int, bool]

    def winning_set(self, size: int) -> VertexSet:
        return VertexSet.of(size, (v for v, ok in self.holds.items() if ok))


def _check_budget(game: StochasticGame) -> None:
    n = game.num_vertices
    if n > ORACLE_MAX_VERTICES:
        raise ResourceBudgetError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, game has {n}")
    for owner in (Owner.EVEN, Owner.ODD):
        count = MemorylessProfile.count(game, owner)
        if count > ORACLE_PROFILE_BUDGET:
            raise ResourceBudgetError(
                f"{count} {owner.name} profiles exceed the budget of {ORACLE_PROFILE_BUDGET}")


def _wins_against_all(game: StochasticGame, objective: Objective, even: MemorylessProfile) -> VertexSet:
    """Vertices from which ``even`` wins against every Odd profile."""
    won = game.all_vertices()
    for odd in MemorylessProfile.enumerate(game, Owner.ODD):
        chain = induced_chain(game, even.choice, odd.choice)
        won = won & game.vertex_set(v for v in won if chain_satisfies_as(chain, objective, v))
        if not won:
            break
    return won


def oracle_verdict(game: StochasticGame, objective: Objective) -> QualitativeVerdict:
    _check_budget(game)
    winning = VertexSet.empty(game.num_vertices)
    profiles = list(MemorylessProfile.enumerate(game, Owner.EVEN))
    logger.debug("oracle: %d Even profiles, %d Odd profiles", len(profiles),
                 MemorylessProfile.count(game, Owner.ODD))
    with ThreadPoolExecutor(max_workers=ORACLE_WORKERS) as pool:
        for won in pool.map(lambda even: _wins_against_all(game, objective, even), profiles):
            winning = winning | won
    return QualitativeVerdict({v: v in winning for v in range(game.num_vertices)})


def oracle_winning_set(game: StochasticGame, objective: Objective) -> VertexSet:
    return oracle_verdict(game, objective).winning_set(game.num_vertices)
