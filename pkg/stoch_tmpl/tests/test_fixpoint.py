from hypothesis import given
from hypothesis import strategies as st

from ..fixpoint import (FixpointTrace, attr, attr_even, attr_odd, attr_prime, attr_prime_even, buchi_winning_set,
                        pre, pre_even, pre_odd, pre_random, safety_winning_set)
from ..game import Owner, StochasticGame
from .conftest import U, V, W
from .strategies import ORACLE_SETTINGS, QUICK_SETTINGS, deterministic_games, games_with_target, targets


def test_one_step_predecessors(g_ex, g_r):
    assert list(pre(g_ex, g_ex.vertex_set([W]))) == [W]
    assert list(pre(g_ex, g_ex.vertex_set([V, W]))) == [U, W]
    assert list(pre_even(g_ex, g_ex.vertex_set([W]))) == [V, W]
    assert list(pre_odd(g_r, g_r.vertex_set([0]))) == [1]
    assert list(pre_random(g_r, g_r.all_vertices(), g_r.vertex_set([2]))) == [0]
    assert not pre_random(g_r, g_r.vertex_set([2]), g_r.vertex_set([2]))


def test_attractors_on_example(g_ex):
    w = g_ex.vertex_set([W])
    assert list(attr(g_ex, w)) == [W]
    assert attr_even(g_ex, w) == g_ex.all_vertices()
    assert list(attr_odd(g_ex, w)) == [W]
    assert attr_prime_even(g_ex, w) == g_ex.all_vertices()


def test_attr_prime_uses_random_fairness(g_r):
    assert attr_prime(g_r, g_r.vertex_set([2])) == g_r.all_vertices()

    self_loop = StochasticGame.build([Owner.RANDOM, Owner.EVEN], [[0, 1], [1]])
    target = self_loop.vertex_set([1])
    assert attr_prime(self_loop, target) == self_loop.all_vertices()
    assert list(attr(self_loop, target)) == [1]


def test_almost_sure_reach_excludes_random_escape():
    g = StochasticGame.build([Owner.RANDOM, Owner.EVEN, Owner.ODD], [[1, 2], [1], [2]])
    assert list(attr_prime_even(g, g.vertex_set([1]))) == [1]


def test_buchi_and_safety_on_example(g_ex, g_r):
    assert list(buchi_winning_set(g_ex, g_ex.vertex_set([U]))) == [U, V]
    assert buchi_winning_set(g_ex, g_ex.vertex_set([W])) == g_ex.all_vertices()
    assert list(safety_winning_set(g_ex, g_ex.vertex_set([U, V]))) == [U, V]
    assert not safety_winning_set(g_r, g_r.vertex_set([0, 1]))


def test_trace_is_monotone(g_r):
    trace = FixpointTrace()
    attr_prime(g_r, g_r.vertex_set([2]), trace)
    assert trace.outer and trace.inner
    assert trace.is_monotone()

    buchi_trace = FixpointTrace()
    buchi_winning_set(g_r, g_r.vertex_set([2]), buchi_trace)
    assert buchi_trace.is_monotone()


@given(games_with_target())
@QUICK_SETTINGS
def test_winning_sets_are_nested(case):
    g, x = case
    sure = attr_prime(g, x)
    assert x <= sure <= attr_prime_even(g, x)
    assert buchi_winning_set(g, x) <= attr_prime_even(g, x)
    assert safety_winning_set(g, x) <= x


@given(deterministic_games())
@QUICK_SETTINGS
def test_without_random_vertices_primed_attractors_collapse(g):
    x = g.vertex_set(range(0, g.num_vertices, 2))
    assert attr_prime(g, x) == attr(g, x)
    assert attr_prime_even(g, x) == attr_even(g, x)


@given(st.data())
@ORACLE_SETTINGS
def test_operators_are_monotone_in_the_target(data):
    g, x = data.draw(games_with_target())
    larger = x | data.draw(targets(g))
    for op in (pre, pre_even, pre_odd, attr, attr_even, attr_odd, attr_prime, attr_prime_even,
               buchi_winning_set, safety_winning_set):
        assert op(g, x) <= op(g, larger), op.__name__
    assert pre_random(g, g.all_vertices(), x) <= pre_random(g, g.all_vertices(), larger)
