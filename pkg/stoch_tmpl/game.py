"""
Core representations: stochastic games, priority functions, vertex sets,
lassos and the five winning objectives.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import ClassVar, Iterable, Iterator, List, Optional, Tuple, Union

from .errors import SemanticError, StructuralError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Owner(IntEnum):
    EVEN = 0
    ODD = 1
    RANDOM = 2


class VertexSet:
    """Immutable bitset over the dense vertex ids of one game."""

    __slots__ = ("bits", "size")

    def __init__(self, size: int, bits: int = 0):
        self.size = size
        self.bits = bits & ((1 << size) - 1)

    @classmethod
    def of(cls, size: int, ids: Iterable[int]) -> "VertexSet":
        bits = 0
        for i in ids:
            if not 0 <= i < size:
                raise StructuralError(f"vertex {i} out of range for {size} vertices")
            bits |= 1 << i
        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> "VertexSet":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "VertexSet":
        return cls(size, (1 << size) - 1)

    def _check(self, other: "VertexSet") -> None:
        if other.size != self.size:
            raise StructuralError(f"vertex sets over {self.size} and {other.size} vertices")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.size, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.size, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.size, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.size, ~self.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.size and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits, v = self.bits, 0
        while bits:
            if bits & 1:
                yield v
            bits >>= 1
            v += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.size == other.size and self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.size, self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"


@dataclass(frozen=True)
class StochasticGame:
    """
    Finite game graph with an Even / Odd / Random vertex partition.

    Vertex ids are dense integers; successor lists keep their input order.
    Construction with ``strict=True`` asserts that every vertex has an
    outgoing edge. Subgames built by ``restrict`` may contain dead ends and
    are built with ``strict=False``.
    """

    owners: Tuple[Owner, ...]
    successors: Tuple[Tuple[int, ...], ...]
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        n = len(self.owners)
        if len(self.successors) != n:
            raise SemanticError(f"{n} owners but {len(self.successors)} successor lists")
        for u, succ in enumerate(self.successors):
            if len(set(succ)) != len(succ):
                raise SemanticError(f"duplicate successor at vertex {u}")
            for v in succ:
                if not 0 <= v < n:
                    raise SemanticError(f"edge ({u},{v}) points outside the game")
            if self.strict and not succ:
                raise SemanticError(f"vertex {u} is a dead end")

    @classmethod
    def build(cls, owners: Iterable[Union[Owner, int]], successors: Iterable[Iterable[int]],
              strict: bool = True) -> "StochasticGame":
        return cls(
            owners=tuple(Owner(o) for o in owners),
            successors=tuple(tuple(s) for s in successors),
            strict=strict,
        )

    @property
    def num_vertices(self) -> int:
        return len(self.owners)

    @cached_property
    def succ_mask(self) -> Tuple[int, ...]:
        return tuple(sum(1 << v for v in succ) for succ in self.successors)

    def owned_by(self, owner: Owner) -> VertexSet:
        return VertexSet.of(self.num_vertices, (v for v, o in enumerate(self.owners) if o == owner))

    @cached_property
    def even(self) -> VertexSet:
        return self.owned_by(Owner.EVEN)

    @cached_property
    def odd(self) -> VertexSet:
        return self.owned_by(Owner.ODD)

    @cached_property
    def random(self) -> VertexSet:
        return self.owned_by(Owner.RANDOM)

    def vertex_set(self, ids: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.num_vertices, ids)

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self.num_vertices)

    def has_edge(self, u: int, v: int) -> bool:
        n = self.num_vertices
        return 0 <= u < n and 0 <= v < n and (self.succ_mask[u] >> v) & 1 == 1

    def edges(self) -> Iterator[Edge]:
        for u, succ in enumerate(self.successors):
            for v in succ:
                yield (u, v)

    def even_edges(self) -> Iterator[Edge]:
        for u, v in self.edges():
            if self.owners[u] == Owner.EVEN:
                yield (u, v)

    @property
    def dead_ends(self) -> VertexSet:
        return self.vertex_set(u for u, succ in enumerate(self.successors) if not succ)


@dataclass(frozen=True)
class PriorityFunction:
    values: Tuple[int, ...]

    def __post_init__(self):
        for v, p in enumerate(self.values):
            if p < 0:
                raise SemanticError(f"negative priority {p} at vertex {v}")

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_priority(self) -> int:
        return max(self.values, default=0)

    def check_total(self, game: StochasticGame) -> None:
        if len(self.values) != game.num_vertices:
            raise SemanticError(
                f"priority function covers {len(self.values)} of {game.num_vertices} vertices")

    def restrict(self, to_parent: Tuple[int, ...]) -> "PriorityFunction":
        return PriorityFunction(tuple(self.values[p] for p in to_parent))


@dataclass(frozen=True)
class Restriction:
    """Result of ``restrict``: the subgame plus the id table back to its parent."""

    game: StochasticGame
    to_parent: Tuple[int, ...]
    parent_size: int
    dead_ends: VertexSet

    @property
    def has_dead_ends(self) -> bool:
        return bool(self.dead_ends)

    def lift(self, vs: VertexSet) -> VertexSet:
        return VertexSet.of(self.parent_size, (self.to_parent[v] for v in vs))

    def lift_edge(self, edge: Edge) -> Edge:
        return (self.to_parent[edge[0]], self.to_parent[edge[1]])


def restrict(g: StochasticGame, removed: VertexSet) -> Restriction:
    """Build ``G \\ removed``; vertex ids are renumbered densely in order."""
    if not removed:
        identity = tuple(range(g.num_vertices))
        return Restriction(g, identity, g.num_vertices, VertexSet.empty(g.num_vertices))

    keep = [v for v in range(g.num_vertices) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    successors = [tuple(index[w] for w in g.successors[v] if w in index) for v in keep]
    sub = StochasticGame(
        owners=tuple(g.owners[v] for v in keep),
        successors=tuple(successors),
        strict=False,
    )
    dead = sub.dead_ends
    if dead:
        logger.warning("restriction left dead ends at %s", [keep[v] for v in dead])
    return Restriction(sub, tuple(keep), g.num_vertices, dead)


@dataclass(frozen=True)
class Lasso:
    """Ultimately periodic play ``prefix · cycle^ω``."""

    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self):
        if not self.cycle:
            raise StructuralError("lasso cycle must be non-empty")

    @classmethod
    def of(cls, prefix: Iterable[int], cycle: Iterable[int]) -> "Lasso":
        return cls(tuple(prefix), tuple(cycle))

    def __len__(self) -> int:
        return len(self.prefix) + len(self.cycle)

    @property
    def start(self) -> int:
        return self.prefix[0] if self.prefix else self.cycle[0]

    def prefix_edges(self) -> List[Edge]:
        """Edges taken once: inside the prefix and from the prefix into the cycle."""
        path = self.prefix + self.cycle[:1]
        return list(zip(path, path[1:]))

    def cycle_edges(self) -> List[Edge]:
        """Edges taken infinitely often, including the wrap-around edge."""
        return list(zip(self.cycle, self.cycle[1:] + self.cycle[:1]))

    def edges(self) -> List[Edge]:
        return self.prefix_edges() + self.cycle_edges()

    def validate(self, game: StochasticGame) -> None:
        for u, v in self.edges():
            if not game.has_edge(u, v):
                raise StructuralError(f"lasso uses non-edge ({u},{v})")
        for v in self.prefix + self.cycle:
            if not 0 <= v < game.num_vertices:
                raise StructuralError(f"lasso visits unknown vertex {v}")


# --- OBJECTIVES ---

@dataclass(frozen=True)
class Safety:
    target: VertexSet
    kind: ClassVar[str] = "safety"


@dataclass(frozen=True)
class Reachability:
    target: VertexSet
    kind: ClassVar[str] = "reach"


@dataclass(frozen=True)
class Buchi:
    target: VertexSet
    kind: ClassVar[str] = "buchi"


@dataclass(frozen=True)
class CoBuchi:
    target: VertexSet
    kind: ClassVar[str] = "cobuchi"


@dataclass(frozen=True)
class Parity:
    priorities: PriorityFunction
    kind: ClassVar[str] = "parity"


Objective = Union[Safety, Reachability, Buchi, CoBuchi, Parity]

OBJECTIVE_KINDS = {cls.kind: cls for cls in (Safety, Reachability, Buchi, CoBuchi, Parity)}


def make_objective(kind: str, game: StochasticGame, target: Iterable[int] = (),
                   priorities: Optional[PriorityFunction] = None) -> Objective:
    if kind not in OBJECTIVE_KINDS:
        raise SemanticError(f"unknown objective '{kind}'")
    if kind == Parity.kind:
        if priorities is None:
            raise SemanticError("parity objective needs a priority function")
        priorities.check_total(game)
        return Parity(priorities)
    return OBJECTIVE_KINDS[kind](game.vertex_set(target))


def lasso_satisfies(lasso: Lasso, objective: Objective,
                    game: Optional[StochasticGame] = None) -> bool:
    """Truth of the objective on ``prefix · cycle^ω``."""
    if game is not None:
        lasso.validate(game)
    seen = lasso.prefix + lasso.cycle
    match objective:
        case Safety(target=x):
            return all(v in x for v in seen)
        case Reachability(target=x):
            return any(v in x for v in seen)
        case Buchi(target=x):
            return any(v in x for v in lasso.cycle)
        case CoBuchi(target=x):
            return all(v in x for v in lasso.cycle)
        case Parity(priorities=p):
            return min(p[v] for v in lasso.cycle) % 2 == 0
    raise SemanticError(f"unsupported objective {objective!r}")
