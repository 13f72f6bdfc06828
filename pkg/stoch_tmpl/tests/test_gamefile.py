import pytest
from hypothesis import given

from ..errors import GameSyntaxError, SemanticError
from ..game import Owner, StochasticGame
from ..gamefile import parse_game, serialize_game, tokenize
from .conftest import G_EX_TEXT, G_R_TEXT
from .strategies import QUICK_SETTINGS, games_with_priorities


def test_parse_example(g_ex, g_r):
    gf = parse_game(G_EX_TEXT)
    assert gf.game == g_ex
    assert gf.priorities.values == (0, 0, 0)
    assert gf.names == {0: "u", 1: "v", 2: "w"}
    assert parse_game(G_R_TEXT).game == g_r


def test_resolve_by_id_or_name():
    gf = parse_game(G_EX_TEXT)
    assert gf.resolve("w") == 2
    assert gf.resolve(" 1 ") == 1
    assert gf.resolve_all("u,,w".split(",")) == [0, 2]
    with pytest.raises(SemanticError):
        gf.resolve("7")
    with pytest.raises(SemanticError):
        gf.resolve("x")


def test_comments_and_whitespace():
    gf = parse_game("# two vertices\nstochastic parity 2;  # header\n0 1 1 1;\n\t1 2 0 0,1;\n")
    assert gf.game.successors == ((1,), (0, 1))
    assert gf.priorities.values == (1, 2)


def test_tokens_carry_positions():
    tokens = list(tokenize("stochastic parity 1;\n0 0 0 0;"))
    assert tokens[4].line == 2 and tokens[4].column == 1
    assert tokens[-1].kind == "semi" and tokens[-1].column == 8


@pytest.mark.parametrize("text, line, column", [
    ("stochastic parity 3\n0 0 0 1;", 2, 1),
    ("stochastic parity 1;\n0 0 0 0 @;", 2, 9),
    ("stochastic game 1;", 1, 12),
    ("stochastic parity 1;\n0 0 0 0", 2, 8),
])
def test_syntax_errors_report_position(text, line, column):
    with pytest.raises(GameSyntaxError) as err:
        parse_game(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert err.value.exit_code == 2


@pytest.mark.parametrize("text", [
    "stochastic parity 1;\n0 0 0;",
    "stochastic parity 2;\n0 0 0 5;\n1 0 0 1;",
    "stochastic parity 1;\n0 0 0 0;\n0 0 0 0;",
    "stochastic parity 1;\n0 -1 0 0;",
    "stochastic parity 1;\n0 0 3 0;",
    "stochastic parity 2;\n0 0 0 0;",
    "stochastic parity 1;\n0 0 0 0,0;",
    "stochastic parity 1;\n4 0 0 0;",
])
def test_semantic_errors(text):
    with pytest.raises(SemanticError) as err:
        parse_game(text)
    assert err.value.exit_code == 3


@given(games_with_priorities())
@QUICK_SETTINGS
def test_serialize_then_parse(case):
    g, p = case
    gf = parse_game(serialize_game(g, p, {0: "start"}))
    assert gf.game == g
    assert gf.priorities == p
    assert gf.resolve("start") == 0


def test_names_with_quotes_and_backslashes():
    g = StochasticGame.build([Owner.EVEN, Owner.ODD], [[1], [0]])
    names = {0: 'say "hi"', 1: "a\\b"}
    text = serialize_game(g, names=names)
    assert '"say \\"hi\\""' in text
    gf = parse_game(text)
    assert gf.names == names
    assert gf.resolve("a\\b") == 1
    with pytest.raises(SemanticError):
        serialize_game(g, names={0: "two\nlines"})


def test_oversized_header_fails_on_missing_vertices():
    with pytest.raises(SemanticError) as err:
        parse_game("stochastic parity 1000000000000;\n0 0 0 0;")
    assert "e.g. [1, 2, 3, 4, 5]" in str(err.value)
