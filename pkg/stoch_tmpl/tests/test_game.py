import pytest
from hypothesis import given
from hypothesis import strategies as st

from ..errors import SemanticError, StructuralError
from ..game import (Buchi, CoBuchi, Lasso, Owner, Parity, PriorityFunction, Reachability, Safety, StochasticGame,
                    VertexSet, lasso_satisfies, make_objective, restrict)
from .conftest import U, V, W
from .strategies import ORACLE_SETTINGS, games_with_target, targets


def test_vertex_set_algebra():
    a = VertexSet.of(4, [0, 1])
    b = VertexSet.of(4, [1, 3])
    assert list(a | b) == [0, 1, 3]
    assert list(a & b) == [1]
    assert list(a - b) == [0]
    assert list(a.complement()) == [2, 3]
    assert VertexSet.of(4, [1]) <= a
    assert len(VertexSet.full(4)) == 4
    assert not VertexSet.empty(4)


def test_vertex_set_rejects_out_of_range_and_mixed_sizes():
    with pytest.raises(StructuralError):
        VertexSet.of(3, [3])
    with pytest.raises(StructuralError):
        VertexSet.of(3, [0]) | VertexSet.of(4, [0])


def test_game_rejects_dead_ends_and_bad_edges():
    with pytest.raises(SemanticError):
        StochasticGame.build([Owner.EVEN, Owner.EVEN], [[1], []])
    with pytest.raises(SemanticError):
        StochasticGame.build([Owner.EVEN], [[1]])
    with pytest.raises(SemanticError):
        StochasticGame.build([Owner.EVEN, Owner.ODD], [[1, 1], [0]])


def test_partition_and_edges(g_ex, g_r):
    assert list(g_ex.even) == [0, 1, 2]
    assert not g_ex.odd and not g_ex.random
    assert list(g_r.random) == [0]
    assert list(g_r.odd) == [1]
    assert g_ex.has_edge(V, W)
    assert not g_ex.has_edge(W, V)
    assert not g_ex.has_edge(-1, 0)
    assert sorted(g_ex.even_edges()) == [(0, 1), (1, 0), (1, 2), (2, 2)]
    assert list(g_r.even_edges()) == [(2, 2)]


def test_restrict_renumbers_and_reports_dead_ends(g_ex):
    sub = restrict(g_ex, g_ex.vertex_set([W]))
    assert sub.to_parent == (0, 1)
    assert sub.game.successors == ((1,), (0,))
    assert not sub.has_dead_ends
    assert sub.lift(sub.game.all_vertices()) == g_ex.vertex_set([U, V])
    assert sub.lift_edge((1, 0)) == (V, U)

    cut = restrict(g_ex, g_ex.vertex_set([V]))
    assert cut.has_dead_ends
    assert list(cut.lift(cut.dead_ends)) == [U]


def test_restrict_nothing_is_identity(g_ex):
    sub = restrict(g_ex, VertexSet.empty(3))
    assert sub.game is g_ex


def test_lasso_edges_and_validation(g_ex):
    lasso = Lasso.of([U, V], [W])
    assert lasso.start == U
    assert len(lasso) == 3
    assert lasso.prefix_edges() == [(U, V), (V, W)]
    assert lasso.cycle_edges() == [(W, W)]
    lasso.validate(g_ex)
    with pytest.raises(StructuralError):
        Lasso.of([], [U, W]).validate(g_ex)
    with pytest.raises(StructuralError):
        Lasso.of([U], [])


def test_lasso_satisfies_each_objective(g_ex):
    to_w = Lasso.of([U, V], [W])
    loop = Lasso.of([], [U, V])
    w = g_ex.vertex_set([W])
    uv = g_ex.vertex_set([U, V])

    assert lasso_satisfies(to_w, Reachability(w), g_ex)
    assert not lasso_satisfies(loop, Reachability(w), g_ex)
    assert lasso_satisfies(loop, Safety(uv))
    assert not lasso_satisfies(to_w, Safety(uv))
    assert lasso_satisfies(to_w, Buchi(w))
    assert not lasso_satisfies(loop, Buchi(w))
    assert lasso_satisfies(to_w, CoBuchi(w))
    assert not lasso_satisfies(Lasso.of([W], [W]), CoBuchi(uv))

    p = PriorityFunction((1, 2, 3))
    assert lasso_satisfies(loop, Parity(p)) is False
    assert lasso_satisfies(Lasso.of([], [V, U]), Parity(PriorityFunction((2, 3, 0))))
    assert not lasso_satisfies(to_w, Parity(p))


def test_make_objective(g_ex):
    reach = make_objective("reach", g_ex, [W])
    assert isinstance(reach, Reachability) and list(reach.target) == [W]
    parity = make_objective("parity", g_ex, priorities=PriorityFunction((0, 1, 2)))
    assert isinstance(parity, Parity)
    with pytest.raises(SemanticError):
        make_objective("muller", g_ex, [W])
    with pytest.raises(SemanticError):
        make_objective("parity", g_ex)
    with pytest.raises(SemanticError):
        make_objective("parity", g_ex, priorities=PriorityFunction((0, 1)))


def test_priorities_must_be_non_negative():
    with pytest.raises(SemanticError):
        PriorityFunction((0, -1))
    assert PriorityFunction((3, 1, 4)).max_priority == 4


@given(st.data())
@ORACLE_SETTINGS
def test_restricting_twice_is_restricting_once(data):
    g, first = data.draw(games_with_target())
    second = data.draw(targets(g))
    outer = restrict(g, first)
    index = {p: i for i, p in enumerate(outer.to_parent)}
    inner = restrict(outer.game, outer.game.vertex_set(index[v] for v in second if v in index))
    once = restrict(g, first | second)
    assert inner.game == once.game
    assert tuple(outer.to_parent[v] for v in inner.to_parent) == once.to_parent
    assert outer.lift(inner.lift(inner.dead_ends)) == once.dead_ends
