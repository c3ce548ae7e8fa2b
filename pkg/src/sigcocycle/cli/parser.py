"""Recursive-descent parser for the word syntax.

Grammar::

    word := term+
    term := atom ("^" signed-int)?
    atom := "z" int | "iota" | "psi" int | "(" word ")"

``iota`` is the hyperelliptic involution word and ``psi h`` the genus-h BSCC
word.  Whitespace separates terms and is otherwise ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import ParseError
from ..words import Word, bscc_word, iota_word

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[()^+\-−]))")


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Iota:
    pass


@dataclass(frozen=True)
class Psi:
    h: int


@dataclass(frozen=True)
class Group:
    terms: tuple["Term", ...]


@dataclass(frozen=True)
class Term:
    atom: Union[Gen, Iota, Psi, Group]
    exponent: int = 1


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "sym" and value == "−":
            value = "-"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what):
        kind, value, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected {what}, found {value or 'end of input'!r}", pos)
        return int(value)

    def word(self):
        terms = []
        while True:
            kind, value, pos = self.peek()
            if kind == "end" or (kind == "sym" and value == ")"):
                break
            terms.append(self.term())
        if not terms:
            raise ParseError("expected a generator, 'iota', 'psi' or '('", self.peek()[2])
        return tuple(terms)

    def term(self):
        atom = self.atom()
        kind, value, pos = self.peek()
        if kind == "sym" and value == "^":
            self.take()
            sign = 1
            kind, value, pos = self.peek()
            if kind == "sym" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
            exponent = sign * self.expect_int("an exponent")
            if exponent == 0:
                raise ParseError("exponent must be nonzero", pos)
            return Term(atom, exponent)
        return Term(atom)

    def atom(self):
        kind, value, pos = self.take()
        if kind == "name":
            name = value.lower()
            if name == "iota":
                return Iota()
            if name == "psi":
                return Psi(self.expect_int("a BSCC genus after 'psi'"))
            if name == "z":
                return Gen(self.expect_int("a generator index after 'z'"))
            raise ParseError(f"unknown name {value!r}", pos)
        if kind == "sym" and value == "(":
            inner = self.word()
            kind, value, cpos = self.take()
            if value != ")":
                raise ParseError("missing ')'", cpos)
            return Group(inner)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_expr(text: str) -> tuple[Term, ...]:
    p = _Parser(text)
    terms = p.word()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return terms


def expand(terms, g: int) -> Word:
    w = Word(g)
    for term in terms:
        atom = term.atom
        if isinstance(atom, Gen):
            base = Word(g, ((atom.index, 1),))
        elif isinstance(atom, Iota):
            base = iota_word(g)
        elif isinstance(atom, Psi):
            base = bscc_word(g, atom.h)
        else:
            base = expand(atom.terms, g)
        w = w + base ** term.exponent
    return w


def parse_word(text: str, g: int) -> Word:
    return expand(parse_expr(text), g)


def format_expr(terms) -> str:
    out = []
    for term in terms:
        atom = term.atom
        if isinstance(atom, Gen):
            s = f"z{atom.index}"
        elif isinstance(atom, Iota):
            s = "iota"
        elif isinstance(atom, Psi):
            s = f"psi{atom.h}"
        else:
            s = f"({format_expr(atom.terms)})"
        if term.exponent != 1:
            s += f"^{term.exponent}"
        out.append(s)
    return " ".join(out)


def format_word(w: Word) -> str:
    """Flat text for a word; parses back to the same word."""
    return " ".join(f"z{l.index}" if l.exponent == 1 else f"z{l.index}^-1" for l in w)
