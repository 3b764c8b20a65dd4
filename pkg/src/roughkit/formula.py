"""Formula syntax trees, a recursive-descent parser and a printer.

Grammar, loosest binding first::

    formula  := or_expr
    or_expr  := and_expr { "or" and_expr }
    and_expr := not_expr { "and" not_expr }
    not_expr := ("not" | "box" | "dia") not_expr | primary
    primary  := "true" | "false" | IDENT "=" IDENT | "(" formula ")"
    IDENT    := [A-Za-z0-9_]+

``box`` and ``dia`` are only recognised when parsing with ``modal=True``.
Binary connectives associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ParseError


@dataclass(frozen=True)
class Atom:
    attribute: str
    value: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Box:
    operand: "Formula"


@dataclass(frozen=True)
class Diamond:
    operand: "Formula"


Formula = Union[Atom, Const, Not, And, Or, Box, Diamond]

TRUE = Const(True)
FALSE = Const(False)

KEYWORDS = frozenset({"and", "or", "not", "true", "false"})
MODAL_KEYWORDS = frozenset({"box", "dia"})

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z0-9_]+)|(?P<punct>[=()])|(?P<end>\Z))")


def implies(p: Formula, q: Formula) -> Formula:
    """``p -> q`` spelled as ``not p or q``."""
    return Or(Not(p), q)


def conjunction(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disjunction(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def is_modal(f: Formula) -> bool:
    if isinstance(f, (Box, Diamond)):
        return True
    if isinstance(f, (Not,)):
        return is_modal(f.operand)
    if isinstance(f, (And, Or)):
        return is_modal(f.left) or is_modal(f.right)
    return False


def atoms(f: Formula) -> Iterator[Atom]:
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, (Not, Box, Diamond)):
        yield from atoms(f.operand)
    elif isinstance(f, (And, Or)):
        yield from atoms(f.left)
        yield from atoms(f.right)


# -- parsing -----------------------------------------------------------------

@dataclass(frozen=True)
class _Tok:
    kind: str  # "word", "=", "(", ")", "end", or a keyword
    text: str
    pos: int  # character offset


class _Parser:
    def __init__(self, text: str, modal: bool):
        self.text = text
        self.keywords = KEYWORDS | MODAL_KEYWORDS if modal else KEYWORDS
        self.toks = self._lex()
        self.i = 0

    def error(self, message: str, pos: int) -> ParseError:
        return ParseError(message, len(self.text[:pos].encode("utf-8")))

    def _lex(self) -> list[_Tok]:
        toks = []
        pos = 0
        n = len(self.text)
        while True:
            m = _TOKEN.match(self.text, pos)
            if m is None:
                start = pos
                while start < n and self.text[start].isspace():
                    start += 1
                raise self.error(f"unexpected character {self.text[start]!r}", start)
            if m.group("end") is not None:
                toks.append(_Tok("end", "", m.start("end")))
                return toks
            if m.group("word") is not None:
                w = m.group("word")
                kind = w if w in self.keywords else "word"
                toks.append(_Tok(kind, w, m.start("word")))
            else:
                p = m.group("punct")
                toks.append(_Tok(p, p, m.start("punct")))
            pos = m.end()

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> Formula:
        f = self.or_expr()
        t = self.tok
        if t.kind == ")":
            raise self.error("unbalanced parenthesis: unexpected ')'", t.pos)
        if t.kind != "end":
            raise self.error(f"unexpected token {t.text!r}", t.pos)
        return f

    def or_expr(self) -> Formula:
        f = self.and_expr()
        while self.tok.kind == "or":
            self.advance()
            f = Or(f, self.and_expr())
        return f

    def and_expr(self) -> Formula:
        f = self.not_expr()
        while self.tok.kind == "and":
            self.advance()
            f = And(f, self.not_expr())
        return f

    def not_expr(self) -> Formula:
        kind = self.tok.kind
        if kind == "not":
            self.advance()
            return Not(self.not_expr())
        if kind == "box":
            self.advance()
            return Box(self.not_expr())
        if kind == "dia":
            self.advance()
            return Diamond(self.not_expr())
        return self.primary()

    def primary(self) -> Formula:
        t = self.advance()
        if t.kind == "true":
            return TRUE
        if t.kind == "false":
            return FALSE
        if t.kind == "(":
            f = self.or_expr()
            close = self.tok
            if close.kind != ")":
                raise self.error("unbalanced parenthesis: expected ')'", close.pos)
            self.advance()
            return f
        if t.kind == "word":
            eq = self.tok
            if eq.kind != "=":
                raise self.error(f"expected '=' after {t.text!r}", eq.pos)
            self.advance()
            v = self.tok
            if v.kind != "word":
                what = "end of input" if v.kind == "end" else repr(v.text)
                raise self.error(f"expected value after '=', found {what}", v.pos)
            self.advance()
            return Atom(t.text, v.text)
        if t.kind == "end":
            raise self.error("unexpected end of input", t.pos)
        raise self.error(f"unexpected token {t.text!r}", t.pos)


def parse(text: str, modal: bool = False) -> Formula:
    """Parse formula text. Errors carry the byte offset of the offending token."""
    return _Parser(text, modal).parse()


def parse_modal(text: str) -> Formula:
    return parse(text, modal=True)


# -- printing ----------------------------------------------------------------

_OR, _AND, _UNARY, _PRIMARY = 1, 2, 3, 4


def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    if isinstance(f, (Not, Box, Diamond)):
        return _UNARY
    return _PRIMARY


def _wrap(f: Formula, need: int) -> str:
    s = to_text(f)
    return f"({s})" if _prec(f) < need else s


def to_text(f: Formula) -> str:
    """Render ``f`` in the surface syntax with as few parentheses as parsing allows.

    Conjunctions nested in disjunctions are bracketed anyway for legibility.
    """
    if isinstance(f, Atom):
        return f"{f.attribute}={f.value}"
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        return "not " + _wrap(f.operand, _UNARY)
    if isinstance(f, Box):
        return "box " + _wrap(f.operand, _UNARY)
    if isinstance(f, Diamond):
        return "dia " + _wrap(f.operand, _UNARY)
    if isinstance(f, And):
        return f"{_wrap(f.left, _AND)} and {_wrap(f.right, _UNARY)}"
    if isinstance(f, Or):
        left = f"({to_text(f.left)})" if isinstance(f.left, And) else _wrap(f.left, _OR)
        return f"{left} or {_wrap(f.right, _AND + 1)}"
    raise TypeError(f"not a formula: {f!r}")
