"""Textual status expressions.

Surface syntax, loosest to tightest binding::

    expr   := and ('||' and)*          fallback
    and    := add ('&&' add)*          sequence
    add    := mul ('+' mul)*           lenient
    mul    := unary (('*'|'%') unary)* strict / disregard
    unary  := ('!'|'~'|'+'|'-') unary | primary
    primary:= F | U | T | failing | running | complete
            | identifier | '(' expr ')'

All binary operators associate left. Prefix ``+``/``-`` are promote and
demote; ``-`` has no binary form. ``#`` starts a comment running to end
of line. Evaluation preserves the short-circuiting of ``&&``/``||``: a
skipped right subtree is never visited, so tasks bound there do not run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .status import (
    Status,
    as_status,
    condone,
    demote,
    disregard,
    from_bool,
    lenient,
    negate,
    promote,
    strict,
)
from .trace import Tracer

_LITERALS = {
    "F": Status(-1),
    "U": Status(0),
    "T": Status(1),
    "failing": Status(-1),
    "running": Status(0),
    "complete": Status(1),
}

RESERVED_WORDS = frozenset(_LITERALS)


class SourceError(Exception):
    """Lex, parse, or binding failure, positioned in the offending input."""

    def __init__(self, kind: str, message: str, line: int = 0, col: int = 0):
        self.kind = kind
        self.message = message
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line else ""
        super().__init__(f"{where}{message}")


class TokKind(Enum):
    IDENT = "identifier"
    LIT = "literal"
    ANDAND = "&&"
    OROR = "||"
    STAR = "*"
    PLUS = "+"
    PERCENT = "%"
    BANG = "!"
    TILDE = "~"
    MINUS = "-"
    LPAREN = "("
    RPAREN = ")"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokKind
    text: str
    line: int
    col: int
    value: Optional[Status] = None


_SINGLE = {
    "*": TokKind.STAR,
    "+": TokKind.PLUS,
    "%": TokKind.PERCENT,
    "!": TokKind.BANG,
    "~": TokKind.TILDE,
    "-": TokKind.MINUS,
    "(": TokKind.LPAREN,
    ")": TokKind.RPAREN,
}


def tokenize(source: str) -> list[Token]:
    """Split source into tokens, ending with an EOF marker."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "#":
            while i < n and source[i] != "\n":
                i += 1
                col += 1
        elif c.isalpha() or c == "_":
            start, start_col = i, col
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
                col += 1
            word = source[start:i]
            if word in _LITERALS:
                tokens.append(Token(TokKind.LIT, word, line, start_col, _LITERALS[word]))
            else:
                tokens.append(Token(TokKind.IDENT, word, line, start_col))
        elif c == "&" or c == "|":
            if i + 1 < n and source[i + 1] == c:
                kind = TokKind.ANDAND if c == "&" else TokKind.OROR
                tokens.append(Token(kind, c * 2, line, col))
                i += 2
                col += 2
            else:
                raise SourceError("lex", f"unexpected character {c!r}", line, col)
        elif c in _SINGLE:
            tokens.append(Token(_SINGLE[c], c, line, col))
            i += 1
            col += 1
        else:
            raise SourceError("lex", f"unexpected character {c!r}", line, col)
    tokens.append(Token(TokKind.EOF, "", line, col))
    return tokens


class UnaryOp(Enum):
    NOT = "!"
    PROMOTE = "+"
    DEMOTE = "-"
    CONDONE = "~"


class BinaryOp(Enum):
    CONJ = "&&"
    DISJ = "||"
    LENIENT = "+"
    STRICT = "*"
    DISREGARD = "%"


@dataclass(frozen=True)
class Literal:
    value: Status


@dataclass(frozen=True)
class Ident:
    name: str
    pos: Optional[tuple[int, int]] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Unary:
    op: UnaryOp
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: BinaryOp
    left: "Expr"
    right: "Expr"


Expr = Union[Literal, Ident, Unary, Binary]

_PREFIX = {
    TokKind.BANG: UnaryOp.NOT,
    TokKind.PLUS: UnaryOp.PROMOTE,
    TokKind.MINUS: UnaryOp.DEMOTE,
    TokKind.TILDE: UnaryOp.CONDONE,
}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._i = 0

    def _peek(self) -> Token:
        return self._tokens[self._i]

    def _next(self) -> Token:
        tok = self._tokens[self._i]
        if tok.kind is not TokKind.EOF:
            self._i += 1
        return tok

    def _fail(self, tok: Token, message: str):
        shown = tok.kind.value if tok.kind is TokKind.EOF else repr(tok.text)
        raise SourceError("parse", f"{message}, found {shown}", tok.line, tok.col)

    def parse(self) -> Expr:
        expr = self._disjunction()
        tok = self._peek()
        if tok.kind is not TokKind.EOF:
            self._fail(tok, "expected end of expression")
        return expr

    def _disjunction(self) -> Expr:
        expr = self._conjunction()
        while self._peek().kind is TokKind.OROR:
            self._next()
            expr = Binary(BinaryOp.DISJ, expr, self._conjunction())
        return expr

    def _conjunction(self) -> Expr:
        expr = self._additive()
        while self._peek().kind is TokKind.ANDAND:
            self._next()
            expr = Binary(BinaryOp.CONJ, expr, self._additive())
        return expr

    def _additive(self) -> Expr:
        expr = self._multiplicative()
        while self._peek().kind is TokKind.PLUS:
            self._next()
            expr = Binary(BinaryOp.LENIENT, expr, self._multiplicative())
        return expr

    def _multiplicative(self) -> Expr:
        expr = self._unary()
        while self._peek().kind in (TokKind.STAR, TokKind.PERCENT):
            op = BinaryOp.STRICT if self._next().kind is TokKind.STAR else BinaryOp.DISREGARD
            expr = Binary(op, expr, self._unary())
        return expr

    def _unary(self) -> Expr:
        tok = self._peek()
        if tok.kind in _PREFIX:
            self._next()
            return Unary(_PREFIX[tok.kind], self._unary())
        return self._primary()

    def _primary(self) -> Expr:
        tok = self._next()
        if tok.kind is TokKind.LIT:
            return Literal(tok.value)
        if tok.kind is TokKind.IDENT:
            return Ident(tok.text, (tok.line, tok.col))
        if tok.kind is TokKind.LPAREN:
            expr = self._disjunction()
            closing = self._peek()
            if closing.kind is not TokKind.RPAREN:
                self._fail(closing, "expected ')'")
            self._next()
            return expr
        self._fail(tok, "expected a status expression")


def parse_tokens(tokens: list[Token]) -> Expr:
    return _Parser(tokens).parse()


def parse(source: str) -> Expr:
    """Parse one expression; raises SourceError on malformed input."""
    return parse_tokens(tokenize(source))


_BINARY_LEVEL = {
    BinaryOp.DISJ: 1,
    BinaryOp.CONJ: 2,
    BinaryOp.LENIENT: 3,
    BinaryOp.STRICT: 4,
    BinaryOp.DISREGARD: 4,
}
_UNARY_LEVEL = 5
_ATOM_LEVEL = 6


def _level(expr: Expr) -> int:
    if isinstance(expr, Binary):
        return _BINARY_LEVEL[expr.op]
    if isinstance(expr, Unary):
        return _UNARY_LEVEL
    return _ATOM_LEVEL


def pretty_print(expr: Expr) -> str:
    """Render with minimal parentheses; parsing the result rebuilds expr."""
    if isinstance(expr, Literal):
        return expr.value.letter
    if isinstance(expr, Ident):
        return expr.name
    if isinstance(expr, Unary):
        inner = pretty_print(expr.operand)
        if _level(expr.operand) < _UNARY_LEVEL:
            inner = f"({inner})"
        return expr.op.value + inner
    level = _BINARY_LEVEL[expr.op]
    left = pretty_print(expr.left)
    if _level(expr.left) < level:
        left = f"({left})"
    right = pretty_print(expr.right)
    if _level(expr.right) <= level:  # left-assoc: equal level on the right needs parens
        right = f"({right})"
    return f"{left} {expr.op.value} {right}"


_UNARY_FN = {
    UnaryOp.NOT: negate,
    UnaryOp.PROMOTE: promote,
    UnaryOp.DEMOTE: demote,
    UnaryOp.CONDONE: condone,
}
_EAGER_FN = {
    BinaryOp.LENIENT: lenient,
    BinaryOp.STRICT: strict,
    BinaryOp.DISREGARD: disregard,
}

def evaluate(
    expr: Expr,
    bindings: dict,
    world=None,
    tracer: Optional[Tracer] = None,
) -> Status:
    """Evaluate against an environment of tasks, variables, and constants.

    A binding may be a Status or bool constant, an object with a
    ``tick(world)`` method (a task; it runs at most once per call and
    emits a trace event), or a plain callable taking the world. Unbound
    identifiers raise SourceError.
    """
    memo: dict[int, Status] = {}
    return _eval(expr, bindings, world, tracer, memo)


def _eval(expr, bindings, world, tracer, memo) -> Status:
    if isinstance(expr, Literal):
        return expr.value
    if isinstance(expr, Ident):
        if expr.name not in bindings:
            line, col = expr.pos or (0, 0)
            raise SourceError(
                "unbound-identifier", f"unbound identifier '{expr.name}'", line, col
            )
        return _resolve(expr.name, bindings[expr.name], world, tracer, memo)
    if isinstance(expr, Unary):
        return _UNARY_FN[expr.op](_eval(expr.operand, bindings, world, tracer, memo))
    x = _eval(expr.left, bindings, world, tracer, memo)
    if expr.op is BinaryOp.CONJ:
        if not x.is_complete:
            return x
        return _eval(expr.right, bindings, world, tracer, memo)
    if expr.op is BinaryOp.DISJ:
        if not x.is_failing:
            return x
        return _eval(expr.right, bindings, world, tracer, memo)
    y = _eval(expr.right, bindings, world, tracer, memo)
    return _EAGER_FN[expr.op](x, y)


def _resolve(name, target, world, tracer, memo) -> Status:
    if isinstance(target, Status):
        return target
    if isinstance(target, bool):
        return from_bool(target)
    tick = getattr(target, "tick", None)
    if callable(tick):
        key = id(target)  # a task instance runs at most once per evaluation
        if key in memo:
            return memo[key]
        status = as_status(tick(world))
        memo[key] = status
        if tracer is not None:
            tracer.emit(getattr(target, "id", name), status)
        return status
    if callable(target):
        return as_status(target(world))
    raise TypeError(f"binding {name!r} is not a status, bool, task, or callable")
