from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ..errors import GameSyntaxError, ParameterError, StructuralError, TemplateInconsistencyError
from ..extraction import (PlayTranscript, ScriptedAdversary, TableAdversary, extract_parameterized, extract_pure,
                          play, replay_probability, step, strict_witness)
from ..game import Buchi, CoBuchi, Owner, Reachability, StochasticGame
from ..synthesis import buchi_template, reachability_template, synthesize
from ..template import StrategyTemplate
from .conftest import U, V, W
from .strategies import LASSO_SETTINGS, games, games_with_target


def test_pure_extraction_drops_prohibited_and_colive(g_ex, t1):
    state = extract_pure(g_ex, t1, g_ex.all_vertices())
    assert state.allowed == {U: (V,), V: (W,), W: (W,)}
    # u keeps only its co-live edge and falls back to it
    assert state.stalled == {U}


def test_pure_extraction_outside_winning_set_keeps_everything(g_ex):
    t = StrategyTemplate.of(prohibited=[(V, W)])
    state = extract_pure(g_ex, t, g_ex.vertex_set([U]))
    assert state.allowed[V] == (U, W)


def test_pure_extraction_fails_without_moves(g_ex):
    t = StrategyTemplate.of(prohibited=[(V, U), (V, W)])
    with pytest.raises(TemplateInconsistencyError) as err:
        extract_pure(g_ex, t, g_ex.all_vertices())
    assert err.value.vertex == V


def test_round_robin_cycles_through_allowed(g_ex):
    result = buchi_template(g_ex, g_ex.vertex_set([W]))
    state = extract_pure(g_ex, result.template, result.winning_set)
    assert state.allowed[V] == (U, W)
    transcript = play(state, V, 4, np.random.default_rng(0))
    assert transcript.vertices == [V, U, V, W, W]
    assert all(s.prob == 1 for s in transcript.steps)


def test_pure_strategy_reaches_target(g_ex):
    result = reachability_template(g_ex, g_ex.vertex_set([W]))
    state = extract_pure(g_ex, result.template, result.winning_set)
    assert W in play(state, U, 5, np.random.default_rng(1)).vertices


def test_mixed_initial_distribution_is_uniform(g_ex, t1):
    state = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    assert state.exact
    assert state.distribution(V) == {U: Fraction(1, 2), W: Fraction(1, 2)}
    assert state.probability(V, V) == 0


def test_colive_edge_decays_by_alpha(g_ex, t1):
    state = extract_parameterized(g_ex, t1, g_ex.all_vertices(), alpha=Fraction(1, 2), beta=2)
    state.update(V, U)
    assert state.probability(V, U) == Fraction(1, 3)
    state.update(V, U)
    assert state.weights[V][U] == Fraction(1, 4)


def test_live_group_edge_is_boosted_after_decay():
    g = StochasticGame.build([Owner.EVEN, Owner.EVEN], [[0, 1], [1]])
    t = StrategyTemplate.of(live_groups=[[(0, 0)]], colive=[(0, 0)])
    state = extract_parameterized(g, t, g.all_vertices(), alpha=Fraction(1, 2), beta=Fraction(2))
    state.update(0, 0)
    assert state.weights[0][0] == 1


def test_mixed_strategy_keeps_colive_edges_the_pure_one_drops(g_ex, t1):
    pure = extract_pure(g_ex, t1, g_ex.all_vertices())
    mixed = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    assert U not in pure.allowed[V]
    assert mixed.probability(V, U) > 0


@pytest.mark.parametrize("alpha, beta", [(1, 2), (0, 2), ("1/2", "1/2"), ("-1/2", 2), ("x", 2)])
def test_bad_parameters(g_ex, t1, alpha, beta):
    with pytest.raises(ParameterError):
        extract_parameterized(g_ex, t1, g_ex.all_vertices(), alpha=alpha, beta=beta)


def test_float_parameters_switch_to_floats(g_ex, t1):
    state = extract_parameterized(g_ex, t1, g_ex.all_vertices(), alpha=0.25, beta=2)
    assert not state.exact
    state.update(V, U)
    assert state.probability(V, U) == pytest.approx(0.2)


def test_random_moves_are_uniform(g_r):
    state = extract_pure(g_r, StrategyTemplate.of(), g_r.all_vertices())
    rng = np.random.default_rng(7)
    hits = 0
    for _ in range(10_000):
        state.reset(0)
        nxt, state = step(state, 0, rng)
        hits += nxt == 2
    assert abs(hits / 10_000 - 0.5) < 0.02
    assert state.transcript.steps[-1].prob == Fraction(1, 2)


def test_adversaries(g_r):
    state = extract_pure(g_r, StrategyTemplate.of(), g_r.all_vertices())
    rng = np.random.default_rng(0)
    state.reset(1)
    nxt, _ = step(state, 1, rng, TableAdversary({1: 0}))
    assert nxt == 0
    scripted = ScriptedAdversary([0])
    assert scripted.choose(g_r, 1, rng) == (0, 1)
    assert scripted.position == 1
    with pytest.raises(StructuralError):
        ScriptedAdversary([2]).choose(g_r, 1, rng)


def test_play_is_reproducible_for_a_seed(g_ex, t1):
    state = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    first = play(state, U, 30, np.random.default_rng(3)).dump()
    second = play(state, U, 30, np.random.default_rng(3)).dump()
    assert first == second


def test_transcript_dump_and_parse(g_ex, t1):
    state = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    transcript = play(state, U, 10, np.random.default_rng(5), seed=5)
    parsed = PlayTranscript.parse(transcript.dump())
    assert parsed.vertices == transcript.vertices
    assert [s.prob for s in parsed.steps] == [s.prob for s in transcript.steps]
    assert transcript.dump().splitlines()[0].startswith("0 0 even 1 ")


def test_transcript_parse_errors():
    with pytest.raises(GameSyntaxError):
        PlayTranscript.parse("0 1 even\n")
    with pytest.raises(GameSyntaxError):
        PlayTranscript.parse("0 1 purple 2 1\n")
    with pytest.raises(GameSyntaxError):
        PlayTranscript.parse("# nothing\n")


def test_pure_plays_replay_with_positive_probability(g_ex, t1):
    pure = extract_pure(g_ex, t1, g_ex.all_vertices())
    mixed = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    transcript = play(pure, U, 12, np.random.default_rng(0))
    probs = replay_probability(mixed, transcript)
    assert probs and all(p > 0 for p in probs)


def test_replay_rejects_broken_transcript(g_ex, t1):
    mixed = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    with pytest.raises(StructuralError):
        replay_probability(mixed, PlayTranscript.parse("0 0 even 2 1\n"))


def test_float_weights_stay_positive_through_long_decay():
    g = StochasticGame.build([Owner.EVEN, Owner.EVEN], [[0, 1], [0]])
    t = StrategyTemplate.of(colive=[(0, 0), (0, 1)])
    state = extract_parameterized(g, t, g.all_vertices(), alpha=0.5, beta=2.0)
    for _ in range(2000):
        state.update(0, 0)
    for _ in range(1200):
        state.update(0, 1)
    dist = state.distribution(0)
    assert all(p > 0 for p in dist.values())
    assert sum(dist.values()) == pytest.approx(1.0)
    _, prob = state.choose_even(0, np.random.default_rng(0))
    assert prob > 0


def test_float_weights_at_a_colive_only_vertex():
    g = StochasticGame.build([Owner.EVEN], [[0]])
    state = extract_parameterized(g, StrategyTemplate.of(colive=[(0, 0)]), g.all_vertices(), alpha=0.5, beta=2.0)
    for _ in range(1500):
        state.update(0, 0)
    assert state.distribution(0) == {0: 1.0}


def test_strict_witness_on_example(g_ex, t1):
    pure = extract_pure(g_ex, t1, g_ex.all_vertices())
    mixed = extract_parameterized(g_ex, t1, g_ex.all_vertices())
    witness = strict_witness(pure, mixed, U)
    assert witness.vertices == [U, V, U]
    assert replay_probability(mixed, witness) == [1, Fraction(1, 2)]
    assert not pure.admits(witness)
    assert pure.admits(play(pure, U, 6, np.random.default_rng(0)))
    assert strict_witness(pure, mixed, W) is None


@given(games_with_target(games(max_vertices=6)))
@LASSO_SETTINGS
def test_pure_plays_replay_under_mixed_strategy_but_not_conversely(case):
    g, x = case
    for objective in (Reachability(x), CoBuchi(x)):
        result = synthesize(g, objective)
        t, winning = result.template, result.winning_set
        pure = extract_pure(g, t, winning)
        mixed = extract_parameterized(g, t, winning)
        for start in winning:
            transcript = play(pure, start, 3 * g.num_vertices, np.random.default_rng(start))
            assert pure.admits(transcript)
            assert all(p > 0 for p in replay_probability(mixed, transcript))

            witness = strict_witness(pure, mixed, start)
            if witness is not None:
                assert witness.edges[-1] in t.colive
                assert all(p > 0 for p in replay_probability(mixed, witness))
                assert not pure.admits(witness)

        for u, v in t.colive:
            if u in winning and u in g.even and u not in pure.stalled and (u, v) not in t.prohibited:
                witness = strict_witness(pure, mixed, u)
                assert witness is not None and len(witness.steps) == 1


@given(games_with_target(), st.lists(st.integers(0, 10 ** 6), max_size=60),
       st.sampled_from([(Fraction(1, 2), Fraction(2)), (0.5, 2.0), (0.05, 7.0)]))
@LASSO_SETTINGS
def test_mixed_distributions_stay_normalized(case, picks, params):
    g, x = case
    alpha, beta = params
    for objective in (Reachability(x), Buchi(x)):
        result = synthesize(g, objective)
        mixed = extract_parameterized(g, result.template, result.winning_set, alpha, beta)
        vertices = sorted(mixed.allowed)
        if not vertices:
            return
        for pick in picks:
            v = vertices[pick % len(vertices)]
            row = mixed.allowed[v]
            mixed.update(v, row[pick % len(row)])
            dist = mixed.distribution(v)
            assert all(p > 0 for p in dist.values())
            if mixed.exact:
                assert sum(dist.values()) == 1
            else:
                assert sum(dist.values()) == pytest.approx(1.0, rel=1e-12)
