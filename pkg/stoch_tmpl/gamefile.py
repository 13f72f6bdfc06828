"""
Text format for stochastic parity games.

    stochastic parity N;
    id priority owner succ{,succ} ["name"];

Owner 0 is Even, 1 is Odd and 2 is Random. Records may share a line; ``#``
starts a comment that runs to the end of the line.
"""
import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional

from .errors import GameSyntaxError, SemanticError
from .game import Owner, PriorityFunction, StochasticGame

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>-?\d+)
  | (?P<name>"(?:[^"\\\n]|\\[\\"])*")
  | (?P<word>[A-Za-z_]+)
  | (?P<semi>;)
  | (?P<comma>,)
  | (?P<bad>.)
""", re.VERBOSE)


def escape_name(name: str) -> str:
    if "\n" in name:
        raise SemanticError(f"vertex name {name!r} spans lines")
    return name.replace("\\", "\\\\").replace('"', '\\"')


def unescape_name(text: str) -> str:
    return re.sub(r"\\(.)", r"\1", text)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for m in TOKEN_RE.finditer(text):
        kind = m.lastgroup
        column = m.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, m.end()
        elif kind == "bad":
            raise GameSyntaxError(f"unexpected character {m.group()!r}", line, column)
        elif kind not in ("ws", "comment"):
            yield Token(kind, m.group(), line, column)


@dataclass(frozen=True)
class GameFile:
    game: StochasticGame
    priorities: PriorityFunction
    names: Dict[int, str] = field(default_factory=dict)

    def resolve(self, token: str) -> int:
        """A vertex given by id or by name."""
        token = token.strip()
        if token.lstrip("-").isdigit():
            v = int(token)
            if not 0 <= v < self.game.num_vertices:
                raise SemanticError(f"vertex {v} is not in the game")
            return v
        for v, name in self.names.items():
            if name == token:
                return v
        raise SemanticError(f"unknown vertex '{token}'")

    def resolve_all(self, tokens: Iterable[str]) -> List[int]:
        return [self.resolve(t) for t in tokens if t.strip()]


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def expect(self, kind: str, what: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("eof", "", 1, 1)
            raise GameSyntaxError(f"expected {what}, got end of input", last.line, last.column + len(last.text))
        if tok.kind != kind or (text is not None and tok.text != text):
            raise GameSyntaxError(f"expected {what}, got {tok.text!r}", tok.line, tok.column)
        self.pos += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        tok = self.peek()
        if tok is not None and tok.kind == kind:
            self.pos += 1
            return tok
        return None


def parse_game(text: str) -> GameFile:
    p = _Parser(text)
    p.expect("word", "'stochastic'", "stochastic")
    p.expect("word", "'parity'", "parity")
    header = p.expect("int", "vertex count")
    p.expect("semi", "';'")
    n = int(header.text)
    if n < 0:
        raise SemanticError("vertex count must be non-negative", header.line)

    owners: Dict[int, Owner] = {}
    priorities: Dict[int, int] = {}
    successors: Dict[int, List[int]] = {}
    names: Dict[int, str] = {}
    lines: Dict[int, int] = {}

    while p.peek() is not None:
        id_tok = p.expect("int", "vertex id")
        prio_tok = p.expect("int", "priority")
        owner_tok = p.expect("int", "owner")
        succ: List[Token] = []
        first = p.accept("int")
        if first is not None:
            succ.append(first)
            while p.accept("comma"):
                succ.append(p.expect("int", "successor id"))
        name = p.accept("name")
        p.expect("semi", "';'")

        v, line = int(id_tok.text), id_tok.line
        if v in owners:
            raise SemanticError(f"duplicate vertex id {v}", line)
        if not 0 <= v < n:
            raise SemanticError(f"vertex id {v} outside 0..{n - 1}", line)
        if int(prio_tok.text) < 0:
            raise SemanticError(f"negative priority {prio_tok.text} at vertex {v}", line)
        if owner_tok.text not in ("0", "1", "2"):
            raise SemanticError(f"owner must be 0, 1 or 2, got {owner_tok.text}", line)
        if not succ:
            raise SemanticError(f"vertex {v} is a dead end", line)
        owners[v] = Owner(int(owner_tok.text))
        priorities[v] = int(prio_tok.text)
        successors[v] = [int(t.text) for t in succ]
        lines[v] = line
        if name is not None:
            names[v] = unescape_name(name.text[1:-1])

    if len(owners) < n:
        # ids are unique and below n, so at most len(owners) + 5 lookups
        missing = list(itertools.islice((v for v in range(n) if v not in owners), 5))
        raise SemanticError(f"{n - len(owners)} vertices declared by the header but not defined, e.g. {missing}")
    for v, succ in successors.items():
        for w in succ:
            if w not in owners:
                raise SemanticError(f"vertex {v} has dangling successor {w}", lines[v])
        if len(set(succ)) != len(succ):
            raise SemanticError(f"vertex {v} lists a successor twice", lines[v])

    game = StochasticGame.build((owners[v] for v in range(n)), (successors[v] for v in range(n)))
    logger.debug("parsed game with %d vertices", n)
    return GameFile(game, PriorityFunction(tuple(priorities[v] for v in range(n))), names)


def serialize_game(game: StochasticGame, priorities: Optional[PriorityFunction] = None,
                   names: Optional[Dict[int, str]] = None) -> str:
    names = names or {}
    lines = [f"stochastic parity {game.num_vertices};"]
    for v in range(game.num_vertices):
        prio = priorities[v] if priorities is not None else 0
        succ = ",".join(str(w) for w in game.successors[v])
        name = f' "{escape_name(names[v])}"' if v in names else ""
        lines.append(f"{v} {prio} {int(game.owners[v])} {succ}{name};")
    return "\n".join(lines) + "\n"
