"""
Parity objectives.

Stochastic parity games are first reduced to deterministic ones by replacing
every Random vertex with a three-layer gadget. The deterministic game is
then solved by Zielonka's recursion, and a variant of the same recursion
collects live-groups and co-live edges. Edges are finally mapped back to the
original game, dropping every edge that starts inside a gadget.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..errors import SemanticError
from ..fixpoint import attr_even, attr_odd
from ..game import Edge, Owner, Parity, PriorityFunction, StochasticGame, VertexSet, restrict
from ..template import LiveGroup
from .base import BaseSynthesizer, SynthesisResult, edges_even, live_groups

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Gadget:
    root: int
    children: Tuple[int, ...]
    # grandchildren[j] carries priority j
    grandchildren: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return (self.root,) + self.children + self.grandchildren


@dataclass(frozen=True)
class ReducedGame:
    game: StochasticGame
    priorities: PriorityFunction
    origin_map: Dict[int, int]
    gadgets: Dict[int, Gadget] = field(default_factory=dict)

    def origin(self, v: int) -> Optional[int]:
        return self.origin_map.get(v)

    def map_back(self, edges) -> FrozenSet[Edge]:
        """Reduced edges whose both endpoints are images of original vertices."""
        out = set()
        for u, v in edges:
            ou, ov = self.origin(u), self.origin(v)
            if ou is not None and ov is not None:
                out.add((ou, ov))
        return frozenset(out)


def reduce(g: StochasticGame, p: PriorityFunction) -> ReducedGame:
    p.check_total(g)
    n = g.num_vertices
    owners: List[Owner] = [Owner.ODD if o == Owner.RANDOM else Owner(o) for o in g.owners]
    prios: List[int] = list(p.values)
    succ: List[List[int]] = [[] for _ in range(n)]

    def add(owner: Owner, priority: int) -> int:
        owners.append(owner)
        prios.append(priority)
        succ.append([])
        return len(owners) - 1

    gadgets: Dict[int, Gadget] = {}
    for v in g.random:
        pv = p[v]
        children = [add(Owner.EVEN, pv) for _ in range((pv + 1) // 2 + 1)]
        succ[v].extend(children)
        grandchildren = []
        for j in range(pv + 1):
            gc = add(Owner.ODD if j % 2 == 0 else Owner.EVEN, j)
            succ[children[(j + 1) // 2]].append(gc)
            grandchildren.append(gc)
        gadgets[v] = Gadget(v, tuple(children), tuple(grandchildren))

    for u, w in g.edges():
        if u in gadgets:
            for gc in gadgets[u].grandchildren:
                succ[gc].append(w)
        else:
            succ[u].append(w)

    reduced = StochasticGame.build(owners, succ)
    logger.debug("reduced %d Random vertices: |V|=%d -> |V'|=%d", len(gadgets), n, reduced.num_vertices)
    return ReducedGame(
        game=reduced,
        priorities=PriorityFunction(tuple(prios)),
        origin_map={v: v for v in range(n)},
        gadgets=gadgets,
    )


def _check_deterministic(g: StochasticGame) -> None:
    if g.random:
        raise SemanticError(f"deterministic game expected, Random vertices at {g.random}")


def _min_priority_set(g: StochasticGame, p: PriorityFunction) -> Tuple[int, VertexSet]:
    x = min(p.values)
    return x, g.vertex_set(v for v in range(g.num_vertices) if p[v] == x)


def zielonka_solve(g: StochasticGame, p: PriorityFunction) -> Tuple[VertexSet, VertexSet]:
    _check_deterministic(g)
    p.check_total(g)
    return _zielonka(g, p, g.num_vertices + 1)


def _zielonka(g: StochasticGame, p: PriorityFunction, depth: int) -> Tuple[VertexSet, VertexSet]:
    n = g.num_vertices
    empty = VertexSet.empty(n)
    if n == 0:
        return empty, empty
    assert depth >= 0, "Zielonka recursion exceeded |V|+1 levels"

    x, target = _min_priority_set(g, p)
    # the player who likes x attracts to it; the opponent's win in the rest is final
    mine, theirs = (attr_even, attr_odd) if x % 2 == 0 else (attr_odd, attr_even)
    a = mine(g, target)
    sub = restrict(g, a)
    w1 = _zielonka(sub.game, p.restrict(sub.to_parent), depth - 1)
    w1_mine, w1_theirs = (w1[0], w1[1]) if x % 2 == 0 else (w1[1], w1[0])
    if not w1_theirs:
        return (g.all_vertices(), empty) if x % 2 == 0 else (empty, g.all_vertices())

    b = theirs(g, sub.lift(w1_theirs))
    sub2 = restrict(g, b)
    w2_even, w2_odd = _zielonka(sub2.game, p.restrict(sub2.to_parent), depth - 1)
    w2_even, w2_odd = sub2.lift(w2_even), sub2.lift(w2_odd)
    if x % 2 == 0:
        return w2_even, w2_odd | b
    return w2_even | b, w2_odd


DetTemplate = Tuple[VertexSet, VertexSet, List[LiveGroup], FrozenSet[Edge]]


def det_parity_template(g: StochasticGame, p: PriorityFunction) -> DetTemplate:
    """
    Returns ``(W□, W○, live_groups, colive)`` for a deterministic parity game.
    The prohibited edges of the final template are ``Edges□(W□, W○)``.
    """
    _check_deterministic(g)
    p.check_total(g)
    return _det(g, p, g.num_vertices + 1)


def _lift_result(sub, result: DetTemplate) -> DetTemplate:
    w_even, w_odd, groups, colive = result
    return (
        sub.lift(w_even),
        sub.lift(w_odd),
        [frozenset(sub.lift_edge(e) for e in group) for group in groups],
        frozenset(sub.lift_edge(e) for e in colive),
    )


def _det(g: StochasticGame, p: PriorityFunction, depth: int) -> DetTemplate:
    n = g.num_vertices
    empty = VertexSet.empty(n)
    everything = g.all_vertices()
    if n == 0:
        return empty, empty, [], frozenset()
    assert depth >= 0, "template recursion exceeded |V|+1 levels"

    x, target = _min_priority_set(g, p)
    if x % 2 == 0:
        a = attr_even(g, target)
        if a == everything:
            return everything, empty, live_groups(g, target), frozenset()
        sub = restrict(g, a)
        w1_even, w1_odd, groups1, colive1 = _lift_result(sub, _det(sub.game, p.restrict(sub.to_parent), depth - 1))
        if not w1_odd:
            return everything, empty, groups1 + live_groups(g, target), colive1
        b = attr_odd(g, w1_odd)
        sub2 = restrict(g, b)
        w2_even, w2_odd, groups2, colive2 = _lift_result(sub2, _det(sub2.game, p.restrict(sub2.to_parent), depth - 1))
        return w2_even, w2_odd | b, groups2, colive2

    a = attr_odd(g, target)
    if a == everything:
        return empty, everything, [], frozenset()
    sub = restrict(g, a)
    w1_even, w1_odd, groups1, colive1 = _lift_result(sub, _det(sub.game, p.restrict(sub.to_parent), depth - 1))
    if not w1_even:
        return empty, everything, [], frozenset()
    groups1 = groups1 + live_groups(g, w1_even)
    colive1 = colive1 | edges_even(g, w1_even, everything - w1_even)
    b = attr_even(g, w1_even)
    sub2 = restrict(g, b)
    w2_even, w2_odd, groups2, colive2 = _lift_result(sub2, _det(sub2.game, p.restrict(sub2.to_parent), depth - 1))
    return w2_even | b, w2_odd, groups1 + groups2, colive1 | colive2


class ParitySynthesizer(BaseSynthesizer):
    kind = Parity.kind

    def run(self, g: StochasticGame, objective: Parity) -> SynthesisResult:
        red = reduce(g, objective.priorities)
        w_even, w_odd, groups, colive = det_parity_template(red.game, red.priorities)
        winning = g.vertex_set(o for v, o in red.origin_map.items() if v in w_even)

        mapped_groups = []
        for group in groups:
            mapped = red.map_back(group)
            if mapped:
                mapped_groups.append(mapped)
            else:
                logger.debug("dropped live-group %s: only gadget edges", sorted(group))
        return self._result(g, objective, winning, groups=mapped_groups, colive=red.map_back(colive))


parity_synthesizer = ParitySynthesizer()


def parity_template(g: StochasticGame, p: PriorityFunction) -> SynthesisResult:
    return parity_synthesizer.run(g, Parity(p))


def parity_winning_set(g: StochasticGame, p: PriorityFunction) -> VertexSet:
    """Almost-sure winning set via the reduction and plain Zielonka."""
    red = reduce(g, p)
    w_even, _ = zielonka_solve(red.game, red.priorities)
    return g.vertex_set(o for v, o in red.origin_map.items() if v in w_even)
