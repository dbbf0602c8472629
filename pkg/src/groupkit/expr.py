"""Parsing and evaluation of the group-expression language.

The language names finite groups built from a few constructors:

    Z8                    cyclic group of order 8
    D6                    dihedral group of order 12
    Hol 8                 holomorph of the cyclic group of order 8
    Z2 x D4               direct product (left-associative)
    Z8 : Z2 [r^3]         semidirect product where the generator of the
                          right-hand cyclic factor acts on the left factor
                          by r -> r^3
    Z8 : Z2 [#1]          semidirect product using action number 1 from
                          the deterministic enumeration of actions()
    (Z2 x D4) : Z2 [#0]   parentheses group subexpressions

Whitespace between tokens is ignored.  ":" binds tighter than "x", and
both operators associate to the left, so "Z3 x Z8 : Z2 [r^3]" is the
direct product of Z3 with the semidirect product.  The "[r^i]" action
form requires cyclic groups on both sides of ":"; "[#j]" works for any
operands and indexes the deterministic enumeration of all actions, which
is stable for a given version of this package but not across versions.

Syntax errors carry the character offset and the set of tokens that
would have been accepted there.  Semantic errors (an exponent that is
not coprime to the group order, an action index out of range) are only
detected when the expression is evaluated to a table.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NoReturn, Union

from .construct import Action, actions, cyclic, dihedral, direct_product, holomorph, semidirect
from .core import GroupTable, Morphism


class ExprError(Exception):
    """Base class for group-expression failures."""


class ExprSyntaxError(ExprError):
    """The text does not match the expression grammar.

    Attributes:
        position: character offset of the first offending character.
        expected: the tokens that would have been accepted at that offset.
        found: display form of what was actually there.
    """

    def __init__(self, position: int, expected: tuple[str, ...], found: str):
        self.position = position
        self.expected = tuple(expected)
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"at offset {position}: expected {want}, found {found}")


class ExprEvalError(ExprError):
    """A well-formed expression names an impossible construction."""


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Holomorph:
    n: int


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class CyclicPower:
    """Action spec [r^i]: the generator of cyclic H sends r to r^i in K."""

    i: int


@dataclass(frozen=True)
class Index:
    """Action spec [#j]: the j-th action in the actions() enumeration."""

    j: int


ActionSpec = Union[CyclicPower, Index]


@dataclass(frozen=True)
class Semidirect:
    k_expr: "GroupExpr"
    h_expr: "GroupExpr"
    action: ActionSpec


GroupExpr = Union[Cyclic, Dihedral, Holomorph, Product, Semidirect]

MAX_NESTING_DEPTH = 64

_KEYWORDS = (("Hol", "HOL"), ("Z", "Z"), ("D", "D"), ("r^", "RPOW"))
_SINGLE_CHARS = {
    "x": "X",
    ":": "COLON",
    "[": "LBRACK",
    "]": "RBRACK",
    "(": "LPAREN",
    ")": "RPAREN",
    "#": "HASH",
}
_TOKEN_DISPLAY = {
    "Z": "'Z'",
    "D": "'D'",
    "HOL": "'Hol'",
    "INT": "integer",
    "X": "'x'",
    "COLON": "':'",
    "LBRACK": "'['",
    "RBRACK": "']'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "RPOW": "'r^'",
    "HASH": "'#'",
    "EOF": "end of input",
}
_ALL_TOKENS = (
    "'Z'", "'D'", "'Hol'", "'r^'", "integer",
    "'x'", "':'", "'['", "']'", "'('", "')'", "'#'",
)


@dataclass(frozen=True)
class _Token:
    kind: str
    value: int
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    end = len(text)
    while i < end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        keyword = next((k for k in _KEYWORDS if text.startswith(k[0], i)), None)
        if keyword is not None:
            tokens.append(_Token(keyword[1], 0, i))
            i += len(keyword[0])
            continue
        if ch in _SINGLE_CHARS:
            tokens.append(_Token(_SINGLE_CHARS[ch], 0, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < end and text[i].isdigit():
                i += 1
            tokens.append(_Token("INT", int(text[start:i]), start))
            continue
        raise ExprSyntaxError(i, _ALL_TOKENS, repr(ch))
    tokens.append(_Token("EOF", 0, end))
    return tokens


def _found_text(token: _Token) -> str:
    if token.kind == "EOF":
        return "end of input"
    if token.kind == "INT":
        return f"'{token.value}'"
    return _TOKEN_DISPLAY[token.kind]


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, expected: tuple[str, ...]) -> NoReturn:
        token = self.peek()
        raise ExprSyntaxError(token.position, expected, _found_text(token))

    def expect(self, kind: str, expected: tuple[str, ...] | None = None) -> _Token:
        if self.peek().kind != kind:
            self.fail(expected or (_TOKEN_DISPLAY[kind],))
        return self.advance()

    def parse(self) -> GroupExpr:
        node = self.expr()
        if self.peek().kind != "EOF":
            self.fail(("'x'", "':'", "end of input"))
        return node

    def expr(self) -> GroupExpr:
        node = self.atom()
        while self.peek().kind == "X":
            self.advance()
            node = Product(node, self.atom())
        return node

    def atom(self) -> GroupExpr:
        node = self.primary()
        while self.peek().kind == "COLON":
            self.advance()
            right = self.primary()
            self.expect("LBRACK", ("'['",))
            action = self.action()
            self.expect("RBRACK", ("']'",))
            node = Semidirect(node, right, action)
        return node

    def primary(self) -> GroupExpr:
        token = self.peek()
        if token.kind == "Z":
            self.advance()
            return Cyclic(self.positive_int())
        if token.kind == "D":
            self.advance()
            return Dihedral(self.positive_int())
        if token.kind == "HOL":
            self.advance()
            return Holomorph(self.positive_int())
        if token.kind == "LPAREN":
            if self.depth >= MAX_NESTING_DEPTH:
                raise ExprSyntaxError(
                    token.position,
                    ("nesting no deeper than %d parentheses" % MAX_NESTING_DEPTH,),
                    "'('",
                )
            self.depth += 1
            self.advance()
            node = self.expr()
            self.expect("RPAREN", ("'x'", "':'", "')'"))
            self.depth -= 1
            return node
        self.fail(("'Z'", "'D'", "'Hol'", "'('"))

    def action(self) -> ActionSpec:
        token = self.peek()
        if token.kind == "RPOW":
            self.advance()
            return CyclicPower(self.any_int())
        if token.kind == "HASH":
            self.advance()
            return Index(self.any_int())
        self.fail(("'r^'", "'#'"))

    def positive_int(self) -> int:
        token = self.peek()
        if token.kind != "INT":
            self.fail(("integer",))
        if token.value < 1:
            raise ExprSyntaxError(token.position, ("positive integer",), f"'{token.value}'")
        self.advance()
        return token.value

    def any_int(self) -> int:
        token = self.peek()
        if token.kind != "INT":
            self.fail(("integer",))
        self.advance()
        return token.value


def parse_expr(text: str) -> GroupExpr:
    """Parse expression text into a GroupExpr tree.

    Raises ExprSyntaxError, carrying the character offset and the set of
    acceptable tokens, on anything outside the grammar.
    """
    return _Parser(text).parse()


_GENERATOR_NAMES = ("r", "s", "t", "u", "v", "w")


class _NameAllocator:
    """Hands out generator letters r, s, t, ... to cyclic leaves in turn."""

    def __init__(self):
        self.count = 0

    def next_name(self) -> str:
        if self.count < len(_GENERATOR_NAMES):
            name = _GENERATOR_NAMES[self.count]
        else:
            name = f"g{self.count + 1}"
        self.count += 1
        return name


def _multiplicative_order(i: int, m: int) -> int:
    if m == 1:
        return 1
    order = 1
    value = i % m
    while value != 1:
        value = value * i % m
        order += 1
    return order


def _resolve_action(e: Semidirect, k_table: GroupTable, h_table: GroupTable) -> Action:
    spec = e.action
    if isinstance(spec, CyclicPower):
        if not (isinstance(e.k_expr, Cyclic) and isinstance(e.h_expr, Cyclic)):
            raise ExprEvalError(
                "the r^i action form needs cyclic groups on both sides of ':'; "
                "use [#j] to pick an action for other operands"
            )
        m, n, i = e.k_expr.n, e.h_expr.n, spec.i
        if gcd(i, m) != 1:
            raise ExprEvalError(
                f"r^{i} is not an automorphism of Z{m}: gcd({i}, {m}) != 1")
        order = _multiplicative_order(i, m)
        if n % order != 0:
            raise ExprEvalError(
                f"r^{i} generates an automorphism of order {order} in Aut(Z{m}), "
                f"which does not divide {n}, so Z{n} cannot act that way")
        maps = tuple(
            Morphism(k_table, k_table, tuple(pow(i, t, m) * x % m for x in range(m)))
            for t in range(n)
        )
        return Action(h_group=h_table, k_group=k_table, maps=maps)
    choices = actions(h_table, k_table)
    if not 0 <= spec.j < len(choices):
        raise ExprEvalError(
            f"action #{spec.j} is out of range: these operands admit "
            f"{len(choices)} actions (#0 through #{len(choices) - 1})")
    return choices[spec.j]


def _eval(e: GroupExpr, names: _NameAllocator) -> GroupTable:
    if isinstance(e, Cyclic):
        return cyclic(e.n, names.next_name())
    if isinstance(e, Dihedral):
        return dihedral(e.n)
    if isinstance(e, Holomorph):
        return holomorph(e.n)
    if isinstance(e, Product):
        left = _eval(e.left, names)
        right = _eval(e.right, names)
        return direct_product(left, right)
    if isinstance(e, Semidirect):
        k_table = _eval(e.k_expr, names)
        h_table = _eval(e.h_expr, names)
        action = _resolve_action(e, k_table, h_table)
        return semidirect(k_table, h_table, action)
    raise TypeError(f"not a group expression: {e!r}")


def eval_expr(e: GroupExpr) -> GroupTable:
    """Build the multiplication table named by a parsed expression.

    Cyclic leaves receive generator letters r, s, t, ... in parse order.
    Raises ExprEvalError for impossible actions and SizeCapError when a
    construction would exceed the size cap.
    """
    return _eval(e, _NameAllocator())


def parse_and_eval(text: str) -> GroupTable:
    """Convenience wrapper: parse the text and evaluate it to a table."""
    return eval_expr(parse_expr(text))
