"""
Executable strategies from templates.

``extract_pure`` is the round-robin strategy over the edges that survive
after deleting prohibited and co-live edges. ``extract_parameterized`` keeps
every non-prohibited edge and plays it with probability proportional to a
per-play weight: co-live edges decay by α each time they are used and
live-group edges are boosted by β.
"""
from __future__ import annotations

import logging
import sys
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from .config import DEFAULT_ALPHA, DEFAULT_BETA, DEFAULT_SEED
from .errors import GameSyntaxError, ParameterError, StructuralError, TemplateInconsistencyError
from .game import Edge, Owner, StochasticGame, VertexSet
from .template import StrategyTemplate

logger = logging.getLogger(__name__)

Weight = Union[Fraction, float]

# rows of float weights are rescaled once their maximum leaves this band
FLOAT_SCALE_LOW, FLOAT_SCALE_HIGH = 1e-150, 1e150


# --- TRANSCRIPTS ---

@dataclass(frozen=True)
class TranscriptStep:
    index: int
    src: int
    owner: Owner
    chosen: int
    prob: Weight

    def dump(self) -> str:
        return f"{self.index} {self.src} {self.owner.name.lower()} {self.chosen} {self.prob}"


@dataclass
class PlayTranscript:
    start: int
    seed: Optional[int] = None
    steps: List[TranscriptStep] = field(default_factory=list)

    @property
    def vertices(self) -> List[int]:
        return [self.start] + [s.chosen for s in self.steps]

    @property
    def edges(self) -> List[Edge]:
        return [(s.src, s.chosen) for s in self.steps]

    def append(self, src: int, owner: Owner, chosen: int, prob: Weight) -> None:
        self.steps.append(TranscriptStep(len(self.steps), src, owner, chosen, prob))

    def dump(self) -> str:
        return "".join(step.dump() + "\n" for step in self.steps)

    def validate(self, game: StochasticGame) -> None:
        current = self.start
        for s in self.steps:
            if s.src != current or not game.has_edge(s.src, s.chosen):
                raise StructuralError(f"transcript step {s.index} is not a move from {current}")
            current = s.chosen

    @classmethod
    def parse(cls, text: str, seed: Optional[int] = None) -> "PlayTranscript":
        steps: List[TranscriptStep] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 5:
                raise GameSyntaxError("expected 'step src owner chosen prob'", lineno)
            try:
                owner = Owner[parts[2].upper()]
                prob: Weight = float(parts[4]) if "." in parts[4] or "e" in parts[4] else Fraction(parts[4])
                steps.append(TranscriptStep(int(parts[0]), int(parts[1]), owner, int(parts[3]), prob))
            except (KeyError, ValueError, ZeroDivisionError) as e:
                raise GameSyntaxError(f"bad transcript step: {e}", lineno) from e
        if not steps:
            raise GameSyntaxError("empty transcript", 1)
        return cls(start=steps[0].src, seed=seed, steps=steps)


# --- ADVERSARIES ---

class Adversary(Protocol):
    """Odd's moves, supplied from outside the strategy."""

    def choose(self, game: StochasticGame, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        ...


class UniformAdversary:
    def choose(self, game: StochasticGame, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        succ = game.successors[v]
        return succ[int(rng.integers(len(succ)))], Fraction(1, len(succ))


@dataclass
class TableAdversary:
    """Fixed memoryless choice per Odd vertex; unlisted vertices move uniformly."""

    table: Dict[int, int]

    def choose(self, game: StochasticGame, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        if v in self.table:
            return self.table[v], Fraction(1)
        return UniformAdversary().choose(game, v, rng)


@dataclass
class ScriptedAdversary:
    """Plays a fixed sequence of Odd moves, then moves uniformly."""

    moves: Sequence[int]
    position: int = 0

    def choose(self, game: StochasticGame, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        if self.position < len(self.moves):
            nxt = self.moves[self.position]
            self.position += 1
            if not game.has_edge(v, nxt):
                raise StructuralError(f"scripted Odd move ({v},{nxt}) is not an edge")
            return nxt, Fraction(1)
        return UniformAdversary().choose(game, v, rng)


# --- STRATEGY STATES ---

class StrategyState:
    game: StochasticGame
    transcript: PlayTranscript

    def choose_even(self, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        raise NotImplementedError

    def reset(self, start: int, seed: Optional[int] = None) -> None:
        raise NotImplementedError

    @property
    def support(self) -> Dict[int, Tuple[int, ...]]:
        raise NotImplementedError


@dataclass
class PureStrategyState(StrategyState):
    game: StochasticGame
    allowed: Dict[int, Tuple[int, ...]]
    cursor: Dict[int, int]
    stalled: FrozenSet[int] = frozenset()
    transcript: PlayTranscript = field(default_factory=lambda: PlayTranscript(start=0))

    @property
    def support(self) -> Dict[int, Tuple[int, ...]]:
        return self.allowed

    def choose_even(self, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        succ = self.allowed[v]
        nxt = succ[self.cursor[v] % len(succ)]
        self.cursor[v] = (self.cursor[v] + 1) % len(succ)
        return nxt, Fraction(1)

    def reset(self, start: int, seed: Optional[int] = None) -> None:
        self.cursor = {v: 0 for v in self.allowed}
        self.transcript = PlayTranscript(start=start, seed=seed)

    def admits(self, transcript: PlayTranscript) -> bool:
        """Whether the round-robin order can produce every Even move of ``transcript``."""
        transcript.validate(self.game)
        cursor = {v: 0 for v in self.allowed}
        for s in transcript.steps:
            if self.game.owners[s.src] != Owner.EVEN:
                continue
            succ = self.allowed[s.src]
            if s.chosen != succ[cursor[s.src] % len(succ)]:
                return False
            cursor[s.src] = (cursor[s.src] + 1) % len(succ)
        return True


@dataclass
class MixedStrategyState(StrategyState):
    game: StochasticGame
    template: StrategyTemplate
    allowed: Dict[int, Tuple[int, ...]]
    alpha: Weight
    beta: Weight
    seed: int = DEFAULT_SEED
    weights: Dict[int, Dict[int, Weight]] = field(default_factory=dict)
    transcript: PlayTranscript = field(default_factory=lambda: PlayTranscript(start=0))

    def __post_init__(self):
        self._live_edges = frozenset(e for group in self.template.live_groups for e in group)
        if not self.weights:
            self.weights = self._initial_weights()

    @property
    def exact(self) -> bool:
        return isinstance(self.alpha, Fraction) and isinstance(self.beta, Fraction)

    @property
    def support(self) -> Dict[int, Tuple[int, ...]]:
        return self.allowed

    def _one(self) -> Weight:
        return Fraction(1) if self.exact else 1.0

    def _initial_weights(self) -> Dict[int, Dict[int, Weight]]:
        return {v: {w: self._one() for w in succ} for v, succ in self.allowed.items()}

    def distribution(self, v: int) -> Dict[int, Weight]:
        row = self.weights[v]
        total = sum(row.values())
        return {w: d / total for w, d in row.items()}

    def probability(self, v: int, nxt: int) -> Weight:
        if nxt not in self.weights.get(v, {}):
            return Fraction(0) if self.exact else 0.0
        return self.distribution(v)[nxt]

    def update(self, v: int, nxt: int) -> None:
        edge = (v, nxt)
        if edge in self.template.colive:
            self.weights[v][nxt] *= self.alpha
        if edge in self._live_edges:
            self.weights[v][nxt] *= self.beta
        if not self.exact:
            self._rescale(v)

    def _rescale(self, v: int) -> None:
        """Scale a float row by its maximum and floor it at the smallest normal float."""
        row = self.weights[v]
        top = max(row.values())
        if not FLOAT_SCALE_LOW <= top <= FLOAT_SCALE_HIGH:
            for w in row:
                row[w] /= top
        for w, d in row.items():
            if d < sys.float_info.min:
                row[w] = sys.float_info.min

    def choose_even(self, v: int, rng: np.random.Generator) -> Tuple[int, Weight]:
        dist = self.distribution(v)
        targets = list(dist)
        probs = np.array([float(dist[w]) for w in targets])
        nxt = targets[int(rng.choice(len(targets), p=probs / probs.sum()))]
        prob = dist[nxt]
        self.update(v, nxt)
        return nxt, prob

    def reset(self, start: int, seed: Optional[int] = None) -> None:
        self.weights = self._initial_weights()
        self.transcript = PlayTranscript(start=start, seed=self.seed if seed is None else seed)


# --- EXTRACTION ---

def _non_prohibited(g: StochasticGame, t: StrategyTemplate, u: int) -> Tuple[int, ...]:
    return tuple(v for v in g.successors[u] if (u, v) not in t.prohibited)


def extract_pure(g: StochasticGame, t: StrategyTemplate, winning: VertexSet) -> PureStrategyState:
    """
    Round-robin over the successors left after deleting P and C. An Even
    vertex of the winning set left with co-live successors only is stalled
    and cycles through those instead.
    """
    allowed: Dict[int, Tuple[int, ...]] = {}
    stalled = set()
    for u in g.even:
        if u not in winning:
            allowed[u] = g.successors[u]
            continue
        keep = tuple(v for v in _non_prohibited(g, t, u) if (u, v) not in t.colive)
        if not keep:
            keep = _non_prohibited(g, t, u)
            if not keep:
                raise TemplateInconsistencyError(f"Even vertex {u} has no allowed successor", u)
            stalled.add(u)
            logger.warning("vertex %d keeps only co-live edges; cycling through %s", u, list(keep))
        allowed[u] = keep
    return PureStrategyState(g, allowed, {v: 0 for v in allowed}, frozenset(stalled))


def _as_weight(value: Union[str, int, float, Fraction]) -> Weight:
    if isinstance(value, float):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ParameterError(f"not a number: {value!r}") from e


def extract_parameterized(g: StochasticGame, t: StrategyTemplate, winning: VertexSet,
                          alpha: Union[str, float, Fraction] = DEFAULT_ALPHA,
                          beta: Union[str, float, Fraction] = DEFAULT_BETA,
                          rng_seed: int = DEFAULT_SEED) -> MixedStrategyState:
    a, b = _as_weight(alpha), _as_weight(beta)
    if not 0 < a < 1:
        raise ParameterError(f"alpha must lie in (0,1), got {alpha}")
    if b < 1:
        raise ParameterError(f"beta must be >= 1, got {beta}")
    if isinstance(a, float) or isinstance(b, float):
        a, b = float(a), float(b)

    allowed: Dict[int, Tuple[int, ...]] = {}
    for u in g.even:
        keep = _non_prohibited(g, t, u) if u in winning else g.successors[u]
        if not keep:
            raise TemplateInconsistencyError(f"Even vertex {u} has no allowed successor", u)
        allowed[u] = keep
    return MixedStrategyState(g, t, allowed, a, b, seed=rng_seed)


def step(state: StrategyState, current: int, rng: np.random.Generator,
         adversary: Optional[Adversary] = None) -> Tuple[int, StrategyState]:
    g = state.game
    owner = Owner(g.owners[current])
    if owner == Owner.EVEN:
        nxt, prob = state.choose_even(current, rng)
    elif owner == Owner.ODD:
        nxt, prob = (adversary or UniformAdversary()).choose(g, current, rng)
    else:
        succ = g.successors[current]
        nxt = succ[int(rng.integers(len(succ)))]
        prob = Fraction(1, len(succ))
    state.transcript.append(current, owner, nxt, prob)
    return nxt, state


def play(state: StrategyState, start: int, steps: int, rng: np.random.Generator,
         adversary: Optional[Adversary] = None, seed: Optional[int] = None) -> PlayTranscript:
    """One fresh play of ``steps`` moves; the strategy state is reset first."""
    state.reset(start, seed)
    current = start
    for _ in range(steps):
        current, state = step(state, current, rng, adversary)
    return state.transcript


def replay_probability(state: MixedStrategyState, transcript: PlayTranscript) -> List[Weight]:
    """
    The probability the mixed strategy gives each Even move of a recorded
    play, with weights updated along the way as in a live play.
    """
    transcript.validate(state.game)
    state.reset(transcript.start)
    probs: List[Weight] = []
    for s in transcript.steps:
        if state.game.owners[s.src] != Owner.EVEN:
            continue
        p = state.probability(s.src, s.chosen)
        probs.append(p)
        if p:
            state.update(s.src, s.chosen)
    return probs


def strict_witness(pure: PureStrategyState, mixed: MixedStrategyState, start: int) -> Optional[PlayTranscript]:
    """
    A shortest play from ``start`` that the mixed strategy produces with
    positive probability and that ends with an Even move the pure strategy
    never makes, or None when the two supports agree on every reachable
    Even vertex.
    """
    g = mixed.game
    parent: Dict[int, Optional[int]] = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if g.owners[u] == Owner.EVEN:
            extra = [v for v in mixed.allowed[u] if v not in pure.allowed[u]]
            if extra:
                path = [extra[0]]
                x: Optional[int] = u
                while x is not None:
                    path.append(x)
                    x = parent[x]
                return _mixed_transcript(mixed, path[::-1])
            moves = mixed.allowed[u]
        else:
            moves = g.successors[u]
        for v in moves:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return None


def _mixed_transcript(mixed: MixedStrategyState, path: Sequence[int]) -> PlayTranscript:
    g = mixed.game
    mixed.reset(path[0])
    for u, v in zip(path, path[1:]):
        owner = Owner(g.owners[u])
        if owner == Owner.EVEN:
            prob = mixed.probability(u, v)
            mixed.update(u, v)
        else:
            prob = Fraction(1, len(g.successors[u]))
        mixed.transcript.append(u, owner, v, prob)
    return mixed.transcript
