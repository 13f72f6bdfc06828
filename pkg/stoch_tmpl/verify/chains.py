"""
Markov chains induced by fixing both players' memoryless choices, and their
qualitative (probability-1) analysis through bottom strongly connected
components.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Mapping, Optional, Set

import networkx as nx
import numpy as np

from ..game import Buchi, CoBuchi, Objective, Owner, Parity, Reachability, Safety, StochasticGame, VertexSet

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class InducedChain:
    """
    States are the game's vertices. A controlled vertex with a fixed choice
    moves there with probability one; Random vertices, and controlled
    vertices left without a choice, branch uniformly unless explicit weights
    are given.
    """

    game: StochasticGame
    choice: Mapping[int, int]
    weights: Optional[Mapping[int, Mapping[int, float]]] = None

    @cached_property
    def matrix(self) -> np.ndarray:
        n = self.game.num_vertices
        m = np.zeros((n, n))
        for u in range(n):
            if u in self.choice:
                m[u, self.choice[u]] = 1.0
            elif self.weights is not None and u in self.weights:
                row = self.weights[u]
                total = float(sum(row.values()))
                for v, w in row.items():
                    m[u, v] += float(w) / total
            else:
                succ = self.game.successors[u]
                for v in succ:
                    m[u, v] += 1.0 / len(succ)
        return m

    @cached_property
    def graph(self) -> nx.DiGraph:
        return nx.from_numpy_array(self.matrix, create_using=nx.DiGraph)

    @cached_property
    def bottom_components(self) -> List[FrozenSet[int]]:
        return _bottom_components(self.graph)

    def reachable(self, start: int) -> Set[int]:
        return nx.descendants(self.graph, start) | {start}

    def reachable_bottoms(self, start: int) -> List[FrozenSet[int]]:
        seen = self.reachable(start)
        return [b for b in self.bottom_components if b <= seen]


def _bottom_components(graph: nx.DiGraph) -> List[FrozenSet[int]]:
    condensed = nx.condensation(graph)
    return [frozenset(condensed.nodes[c]["members"])
            for c in condensed.nodes if condensed.out_degree(c) == 0]


def induced_chain(game: StochasticGame, even_choice: Mapping[int, int], odd_choice: Mapping[int, int],
                  even_mixed: Optional[Mapping[int, Mapping[int, float]]] = None) -> InducedChain:
    choice: Dict[int, int] = {}
    for u, v in list(even_choice.items()) + list(odd_choice.items()):
        assert game.owners[u] != Owner.RANDOM, f"vertex {u} is Random and cannot be fixed"
        assert game.has_edge(u, v), f"({u},{v}) is not an edge"
        choice[u] = v
    return InducedChain(game, choice, even_mixed)


def _reaches_almost_surely(chain: InducedChain, target: VertexSet, start: int) -> bool:
    if start in target:
        return True
    # X made absorbing: every bottom component reachable from start must lie in X
    g = chain.graph.copy()
    for x in target:
        g.remove_edges_from(list(g.out_edges(x)))
        g.add_edge(x, x)
    seen = nx.descendants(g, start) | {start}
    return all(b <= set(target) for b in _bottom_components(g) if b <= seen)


def chain_satisfies_as(chain: InducedChain, objective: Objective, start: int) -> bool:
    """Does the objective hold with probability one from ``start``?"""
    match objective:
        case Safety(target=x):
            return all(v in x for v in chain.reachable(start))
        case Reachability(target=x):
            return _reaches_almost_surely(chain, x, start)
        case Buchi(target=x):
            return all(any(v in x for v in b) for b in chain.reachable_bottoms(start))
        case CoBuchi(target=x):
            return all(all(v in x for v in b) for b in chain.reachable_bottoms(start))
        case Parity(priorities=p):
            return all(min(p[v] for v in b) % 2 == 0 for b in chain.reachable_bottoms(start))
    raise TypeError(f"unsupported objective {objective!r}")
