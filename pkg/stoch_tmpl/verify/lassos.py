import logging
from typing import Callable, Iterator, List, Mapping, Optional, Sequence

from ..config import LASSO_BUDGET
from ..errors import ParameterError, ResourceBudgetError
from ..game import Lasso, Owner, StochasticGame, VertexSet

logger = logging.getLogger(__name__)

EdgeFilter = Callable[[int, int], bool]


def _is_primitive(cycle: Sequence[int]) -> bool:
    m = len(cycle)
    for d in range(1, m // 2 + 1):
        if m % d == 0 and all(cycle[i] == cycle[i % d] for i in range(m)):
            return False
    return True


def enumerate_lassos(game: StochasticGame, start: VertexSet, k: int,
                     allowed: Optional[EdgeFilter] = None,
                     budget: int = LASSO_BUDGET) -> Iterator[Lasso]:
    """
    Yield every lasso starting in ``start`` with ``|prefix| + |cycle| <= k``.

    Each ultimately periodic word is emitted once: the cycle is primitive and
    the prefix cannot be shortened by rotating the cycle. ``allowed`` prunes
    edges during the search.
    """
    if k < 1:
        raise ParameterError(f"lasso bound must be >= 1, got {k}")

    emitted = 0
    path: List[int] = []

    def usable(u: int, v: int) -> bool:
        return allowed is None or allowed(u, v)

    def walk() -> Iterator[Lasso]:
        nonlocal emitted
        last = path[-1]
        for j, head in enumerate(path):
            if not game.has_edge(last, head) or not usable(last, head):
                continue
            if j > 0 and path[j - 1] == last:
                continue
            if not _is_primitive(path[j:]):
                continue
            emitted += 1
            if emitted > budget:
                raise ResourceBudgetError(f"more than {budget} lassos of size <= {k}")
            yield Lasso(tuple(path[:j]), tuple(path[j:]))
        if len(path) < k:
            for nxt in game.successors[last]:
                if usable(last, nxt):
                    path.append(nxt)
                    yield from walk()
                    path.pop()

    for v in start:
        path.append(v)
        yield from walk()
        path.pop()


def is_random_fair(game: StochasticGame, lasso: Lasso) -> bool:
    """Every Random vertex on the cycle takes each of its edges on the cycle."""
    used = set(lasso.cycle_edges())
    for u in set(lasso.cycle):
        if game.owners[u] == Owner.RANDOM and any((u, v) not in used for v in game.successors[u]):
            return False
    return True


def is_support_fair(game: StochasticGame, lasso: Lasso, support: Mapping[int, Sequence[int]]) -> bool:
    """Every Even vertex on the cycle takes each edge of its support on the cycle."""
    used = set(lasso.cycle_edges())
    for u in set(lasso.cycle):
        if game.owners[u] == Owner.EVEN and u in support:
            if any((u, v) not in used for v in support[u]):
                return False
    return True
