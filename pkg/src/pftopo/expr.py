"""A small expression language over named picture fuzzy sets.

Grammar (whitespace insignificant, `~` binds tightest, then `&`, then `|`,
binary operators associate left)::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '~' factor | '(' expr ')' | IDENT
    IDENT  := [A-Za-z_][A-Za-z0-9_]*

`I` and `O` are reserved identifiers for the full and the null set.
Syntax errors carry the byte offset and the set of expected tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import PictureFuzzySet
from .core import complement as _complement
from .core import full as _full
from .core import intersection as _intersection
from .core import null as _null
from .core import union as _union
from .errors import ExprSyntaxError
from .families import Family


@dataclass(frozen=True)
class Name:
    label: str


@dataclass(frozen=True)
class Full:
    pass


@dataclass(frozen=True)
class Null:
    pass


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Intersection:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Complement:
    child: "Expr"


Expr = Name | Full | Null | Union | Intersection | Complement

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PUNCT = {"|", "&", "~", "(", ")"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Yield (kind, value, byte_offset) tokens plus a trailing EOF token."""
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    byte_pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            byte_pos += len(ch.encode("utf-8"))
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, byte_pos))
            pos += 1
            byte_pos += 1
            continue
        m = _IDENT_RE.match(text, pos)
        if m:
            tokens.append(("IDENT", m.group(), byte_pos))
            byte_pos += len(m.group())
            pos = m.end()
            continue
        raise ExprSyntaxError(byte_pos, ("IDENT", "'('", "'~'"), repr(ch))
    tokens.append(("EOF", "", byte_pos))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        kind, value, offset = self.peek()
        found = "end of input" if kind == "EOF" else repr(value)
        raise ExprSyntaxError(offset, expected, found)

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek()[0] != "EOF":
            self.fail(("'|'", "'&'", "end of input"))
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] == "|":
            self.advance()
            node = Union(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] == "&":
            self.advance()
            node = Intersection(node, self.factor())
        return node

    def factor(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "~":
            self.advance()
            return Complement(self.factor())
        if kind == "(":
            self.advance()
            node = self.expr()
            if self.peek()[0] != ")":
                self.fail(("')'",))
            self.advance()
            return node
        if kind == "IDENT":
            self.advance()
            if value == "I":
                return Full()
            if value == "O":
                return Null()
            return Name(value)
        self.fail(("IDENT", "'('", "'~'"))
        raise AssertionError("unreachable")


def parse(text: str) -> Expr:
    """Parse expression text into an AST; names stay unresolved."""
    return _Parser(text).parse()


def evaluate(ast: Expr, family: Family) -> PictureFuzzySet:
    """Evaluate an AST against a family; raises UnknownName for unresolved
    labels.  I and O evaluate on the family's universe."""
    if isinstance(ast, Name):
        return family.get(ast.label)
    if isinstance(ast, Full):
        return _full(family.universe)
    if isinstance(ast, Null):
        return _null(family.universe)
    if isinstance(ast, Union):
        return _union(evaluate(ast.left, family), evaluate(ast.right, family))
    if isinstance(ast, Intersection):
        return _intersection(evaluate(ast.left, family), evaluate(ast.right, family))
    if isinstance(ast, Complement):
        return _complement(evaluate(ast.child, family))
    raise TypeError(f"not an expression node: {ast!r}")


def format_expr(ast: Expr) -> str:
    """Canonical printer with full parenthesization; parse(format_expr(x))
    reproduces x."""
    if isinstance(ast, Name):
        return ast.label
    if isinstance(ast, Full):
        return "I"
    if isinstance(ast, Null):
        return "O"
    if isinstance(ast, Union):
        return f"({format_expr(ast.left)} | {format_expr(ast.right)})"
    if isinstance(ast, Intersection):
        return f"({format_expr(ast.left)} & {format_expr(ast.right)})"
    if isinstance(ast, Complement):
        return f"~{format_expr(ast.child)}"
    raise TypeError(f"not an expression node: {ast!r}")
