import pytest

from ..game import Owner, PriorityFunction, StochasticGame
from ..template import StrategyTemplate

U, V, W = 0, 1, 2
V0, V1, WR = 0, 1, 2


@pytest.fixture
def g_ex() -> StochasticGame:
    """u -> v, v -> {u, w}, w -> w; all Even."""
    return StochasticGame.build([Owner.EVEN] * 3, [[V], [U, W], [W]])


@pytest.fixture
def g_r() -> StochasticGame:
    """v0 Random -> {w, v1}, v1 Odd -> v0, w Even -> w."""
    return StochasticGame.build([Owner.RANDOM, Owner.ODD, Owner.EVEN], [[WR, V1], [V0], [WR]])


@pytest.fixture
def p_r() -> PriorityFunction:
    return PriorityFunction((1, 1, 0))


@pytest.fixture
def t1() -> StrategyTemplate:
    return StrategyTemplate.of(colive=[(U, V), (V, U)])


@pytest.fixture
def t2() -> StrategyTemplate:
    return StrategyTemplate.of(colive=[(U, V)])


@pytest.fixture
def t3() -> StrategyTemplate:
    return StrategyTemplate.of(colive=[(V, U)])


G_EX_TEXT = 'stochastic parity 3;\n0 0 0 1 "u"; 1 0 0 0,2 "v"; 2 0 0 2 "w";\n'
G_R_TEXT = 'stochastic parity 3;\n0 1 2 2,1 "v0";\n1 1 1 0 "v1";\n2 0 0 2 "w";\n'


@pytest.fixture
def g_ex_file(tmp_path):
    path = tmp_path / "g_ex.game"
    path.write_text(G_EX_TEXT)
    return str(path)
