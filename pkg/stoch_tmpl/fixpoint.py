"""
Set operators over game graphs and their Kleene fixpoints.

Nested fixpoints restart the inner iteration from the empty set for every
outer iterate. All functions are pure.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .game import StochasticGame, VertexSet

logger = logging.getLogger(__name__)


@dataclass
class FixpointTrace:
    """Iterates of a (possibly nested) Kleene iteration, for debugging and tests."""

    outer: List[VertexSet] = field(default_factory=list)
    inner: List[List[VertexSet]] = field(default_factory=list)

    def is_monotone(self, outer_decreasing: bool = True) -> bool:
        def chain_ok(xs: List[VertexSet], increasing: bool) -> bool:
            return all((a <= b) if increasing else (b <= a) for a, b in zip(xs, xs[1:]))

        return chain_ok(self.outer, not outer_decreasing) and all(chain_ok(xs, True) for xs in self.inner)


# --- ONE-STEP PREDECESSORS ---

def _pre_bits(g: StochasticGame, bits: int) -> int:
    out = 0
    for u, succ in enumerate(g.succ_mask):
        if succ & ~bits == 0:
            out |= 1 << u
    return out


def _pre_exists_bits(g: StochasticGame, owner_bits: int, bits: int) -> int:
    out = 0
    for u, succ in enumerate(g.succ_mask):
        if (owner_bits >> u) & 1 and succ & bits:
            out |= 1 << u
    return out


def _pre_random_bits(g: StochasticGame, all_in: int, some_in: int) -> int:
    out = 0
    rnd = g.random.bits
    for u, succ in enumerate(g.succ_mask):
        if (rnd >> u) & 1 and succ & ~all_in == 0 and succ & some_in:
            out |= 1 << u
    return out


def pre(g: StochasticGame, x: VertexSet) -> VertexSet:
    """Vertices all of whose successors lie in ``x``."""
    return VertexSet(g.num_vertices, _pre_bits(g, x.bits))


def pre_even(g: StochasticGame, x: VertexSet) -> VertexSet:
    return VertexSet(g.num_vertices, _pre_exists_bits(g, g.even.bits, x.bits))


def pre_odd(g: StochasticGame, x: VertexSet) -> VertexSet:
    return VertexSet(g.num_vertices, _pre_exists_bits(g, g.odd.bits, x.bits))


def pre_random(g: StochasticGame, xp: VertexSet, x: VertexSet) -> VertexSet:
    """Random vertices whose successors all lie in ``xp`` and some lie in ``x``."""
    return VertexSet(g.num_vertices, _pre_random_bits(g, xp.bits, x.bits))


# --- KLEENE ITERATION ---

def _lfp(g: StochasticGame, step: Callable[[int], int], iterates: Optional[List[VertexSet]] = None) -> int:
    y = 0
    for _ in range(g.num_vertices + 2):
        if iterates is not None:
            iterates.append(VertexSet(g.num_vertices, y))
        ny = step(y)
        if ny == y:
            return y
        y = ny
    raise AssertionError("least fixpoint did not stabilise within |V| steps")


def _gfp_lfp(g: StochasticGame, step: Callable[[int, int], int], trace: Optional[FixpointTrace]) -> VertexSet:
    z = VertexSet.full(g.num_vertices).bits
    for _ in range(g.num_vertices + 2):
        inner: Optional[List[VertexSet]] = None
        if trace is not None:
            trace.outer.append(VertexSet(g.num_vertices, z))
            inner = []
            trace.inner.append(inner)
        nz = _lfp(g, lambda y: step(z, y), inner)
        if nz == z:
            return VertexSet(g.num_vertices, z)
        z = nz
    raise AssertionError("greatest fixpoint did not stabilise within |V| steps")


def attr(g: StochasticGame, x: VertexSet, trace: Optional[FixpointTrace] = None) -> VertexSet:
    """μY.(X ∪ Pre(Y))"""
    inner: Optional[List[VertexSet]] = None
    if trace is not None:
        inner = []
        trace.inner.append(inner)
    return VertexSet(g.num_vertices, _lfp(g, lambda y: x.bits | _pre_bits(g, y), inner))


def attr_even(g: StochasticGame, x: VertexSet) -> VertexSet:
    """μY.(X ∪ Pre(Y) ∪ Pre□(Y))"""
    even = g.even.bits
    return VertexSet(g.num_vertices, _lfp(
        g, lambda y: x.bits | _pre_bits(g, y) | _pre_exists_bits(g, even, y)))


def attr_odd(g: StochasticGame, x: VertexSet) -> VertexSet:
    """μY.(X ∪ Pre(Y) ∪ Pre○(Y))"""
    odd = g.odd.bits
    return VertexSet(g.num_vertices, _lfp(
        g, lambda y: x.bits | _pre_bits(g, y) | _pre_exists_bits(g, odd, y)))


def attr_prime(g: StochasticGame, x: VertexSet, trace: Optional[FixpointTrace] = None) -> VertexSet:
    """νZ.μY.(X ∪ Pre(Y) ∪ Pre△(Z,Y)): X is reached almost surely whatever both players do."""
    return _gfp_lfp(g, lambda z, y: x.bits | _pre_bits(g, y) | _pre_random_bits(g, z, y), trace)


def attr_prime_even(g: StochasticGame, x: VertexSet, trace: Optional[FixpointTrace] = None) -> VertexSet:
    """νZ.μY.(X ∪ Pre□(Y) ∪ Pre(Y) ∪ Pre△(Z,Y)): almost-sure reachability winning set."""
    even = g.even.bits
    return _gfp_lfp(
        g,
        lambda z, y: x.bits | _pre_exists_bits(g, even, y) | _pre_bits(g, y) | _pre_random_bits(g, z, y),
        trace,
    )


def buchi_winning_set(g: StochasticGame, x: VertexSet, trace: Optional[FixpointTrace] = None) -> VertexSet:
    """
    Almost-sure Büchi winning set:
    νZ.μY.((X ∩ (Pre□(Z) ∪ Pre(Z))) ∪ Pre□(Y) ∪ Pre(Y) ∪ Pre△(Z,Y)).
    """
    even = g.even.bits

    def step(z: int, y: int) -> int:
        accepting = x.bits & (_pre_exists_bits(g, even, z) | _pre_bits(g, z))
        return accepting | _pre_exists_bits(g, even, y) | _pre_bits(g, y) | _pre_random_bits(g, z, y)

    return _gfp_lfp(g, step, trace)


def safety_winning_set(g: StochasticGame, x: VertexSet) -> VertexSet:
    """νY.(X ∩ (Pre□(Y) ∪ Pre(Y)))"""
    even = g.even.bits
    y = x.bits
    for _ in range(g.num_vertices + 2):
        ny = x.bits & (_pre_exists_bits(g, even, y) | _pre_bits(g, y))
        if ny == y:
            return VertexSet(g.num_vertices, y)
        y = ny
    raise AssertionError("safety fixpoint did not stabilise within |V| steps")
