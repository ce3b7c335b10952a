"""Concrete syntax for the composed language.

Grammar, loosest first:

    expr    := sum
    sum     := postfix ('+' postfix)*                       left-assoc
    postfix := primary ('!' primary | '[' expr ']' ':=' primary)*
    primary := NAT | 'nil' | 'none' | 'some' '(' expr ')' | '(' expr ')'

The renderer emits minimal parentheses; parse(render(t)) == t.
"""

from __future__ import annotations

from dataclasses import dataclass

from .functor import InL, InR, Pair, Slot, Term
from .lang import (
    array_payload,
    assign,
    enat,
    index,
    nat_value,
    nil,
    none,
    option_payload,
    plus,
    plus_parts,
    some,
)


class ParseError(Exception):
    """Syntax error with the offset of the offending character."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


_PUNCT = {
    "+": "plus",
    "!": "bang",
    "[": "lbrack",
    "]": "rbrack",
    "(": "lparen",
    ")": "rparen",
}
_KEYWORDS = {"nil", "none", "some"}


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("nat", text[start:i], start))
            continue
        if c.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word not in _KEYWORDS:
                raise ParseError(f"unknown word {word!r}", start)
            tokens.append(_Token(word, word, start))
            continue
        if text.startswith(":=", i):
            tokens.append(_Token("assign", ":=", i))
            i += 2
            continue
        if c in _PUNCT:
            tokens.append(_Token(_PUNCT[c], c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(f"expected {what}", token.offset)
        return self.take()

    def expr(self) -> Term:
        left = self.postfix()
        while self.peek().kind == "plus":
            self.take()
            left = plus(left, self.postfix())
        return left

    def postfix(self) -> Term:
        term = self.primary()
        while True:
            kind = self.peek().kind
            if kind == "bang":
                self.take()
                term = index(term, self.primary())
            elif kind == "lbrack":
                self.take()
                idx = self.expr()
                self.expect("rbrack", "']'")
                self.expect("assign", "':='")
                term = assign(term, idx, self.primary())
            else:
                return term

    def primary(self) -> Term:
        token = self.peek()
        if token.kind == "nat":
            self.take()
            return enat(int(token.text))
        if token.kind == "nil":
            self.take()
            return nil()
        if token.kind == "none":
            self.take()
            return none()
        if token.kind == "some":
            self.take()
            self.expect("lparen", "'('")
            inner = self.expr()
            self.expect("rparen", "')'")
            return some(inner)
        if token.kind == "lparen":
            self.take()
            inner = self.expr()
            self.expect("rparen", "')'")
            return inner
        raise ParseError("expected an expression", token.offset)


def parse(text: str) -> Term:
    """Parse surface syntax into a term."""
    parser = _Parser(_tokenize(text))
    term = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(f"unexpected {trailing.text!r}", trailing.offset)
    return term


def render(t: Term) -> str:
    """Surface syntax for a term, with minimal parentheses."""
    return _render_sum(t)


def _render_sum(t: Term) -> str:
    parts = plus_parts(t)
    if parts is not None:
        return f"{_render_sum(parts[0])} + {_render_postfix(parts[1])}"
    return _render_postfix(t)


def _render_postfix(t: Term) -> str:
    ap = array_payload(t)
    if ap is not None:
        match ap:
            case InR(Pair(Slot(a), Slot(i))):
                return f"{_render_postfix(a)} ! {_render_primary(i)}"
            case InL(InL(Pair(Slot(a), Pair(Slot(i), Slot(e))))):
                return f"{_render_postfix(a)}[{_render_sum(i)}] := {_render_primary(e)}"
    return _render_primary(t)


def _render_primary(t: Term) -> str:
    n = nat_value(t)
    if n is not None:
        return str(n)
    op = option_payload(t)
    if op is not None:
        match op:
            case InR(_):
                return "none"
            case InL(Slot(e)):
                return f"some({_render_sum(e)})"
    ap = array_payload(t)
    if ap is not None and isinstance(ap, InL) and isinstance(ap.payload, InR):
        return "nil"
    return f"({_render_sum(t)})"
