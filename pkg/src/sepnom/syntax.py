"""Text syntax for set expressions, words and substitution literals."""

from __future__ import annotations

import re

from .atoms import Subst
from .nominal import (
    A,
    ONE,
    AtomLeaf,
    Coproduct,
    Discrete,
    Free,
    Label,
    Power,
    Product,
    SepPower,
    SepProduct,
    SepWordsUpTo,
    Tag,
    Tagged,
    WordsUpTo,
)


class ParseError(ValueError):
    def __init__(self, msg, position):
        super().__init__(f"{msg} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[(){},*]))")

_BINARY = {"prod": Product, "sep": SepProduct, "sum": Coproduct}
_BOUNDED = {"wordsle": WordsUpTo, "sepwordsle": SepWordsUpTo, "pow": Power, "seppow": SepPower}
_UNBOUNDED = {"words", "sepwords"}


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            got = tok[1] if tok[0] else "end of input"
            raise ParseError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok


def parse_set(text: str):
    """Parse a set expression such as ``free(prod(A,A))``."""
    toks = _Tokens(text)
    X = _set(toks)
    kind, val, pos = toks.peek()
    if kind == "sym" and val == "*":
        raise ParseError("unbounded words have infinitely many orbits; use wordsle(E,n)", pos)
    if kind is not None:
        raise ParseError(f"trailing input {val!r}", pos)
    return X


def _set(t):
    kind, val, pos = t.take()
    if kind == "num":
        if val != "1":
            raise ParseError(f"unknown set {val!r}", pos)
        return ONE
    if kind != "name":
        raise ParseError(f"unexpected {val!r}", pos)
    if val == "A":
        return A
    if val == "D":
        t.take("sym", "{")
        labels = [t.take("name")[1]]
        while t.peek()[1] == ",":
            t.take()
            labels.append(t.take("name")[1])
        t.take("sym", "}")
        return Discrete(labels)
    if val in _UNBOUNDED:
        raise ParseError(f"{val}(...) has infinitely many orbits; use {val}le(E,n)", pos)
    if val not in _BINARY and val not in _BOUNDED and val not in ("free", "tag"):
        raise ParseError(f"unknown constructor {val!r}", pos)
    t.take("sym", "(")
    if val in _BINARY:
        left = _set(t)
        t.take("sym", ",")
        right = _set(t)
        out = _BINARY[val](left, right)
    elif val in _BOUNDED:
        base = _set(t)
        t.take("sym", ",")
        out = _BOUNDED[val](base, int(t.take("num")[1]))
    elif val == "free":
        out = Free(_set(t))
    else:
        name = t.take("name")[1]
        t.take("sym", ",")
        out = Tag(name, _set(t))
    t.take("sym", ")")
    return out


_LETTER = re.compile(r"^(?:(?P<atom>\d+)|(?P<tag>[^\s();]+)\((?P<arg>\d+)\)|(?P<label>[^\s();]+))$")


def parse_word(text: str) -> list:
    """``Put(1); Put(2); Pop`` -> list of letter values; empty text is the empty word."""
    letters = []
    if not text.strip():
        return letters
    pos = 0
    for chunk in text.split(";"):
        s = chunk.strip()
        m = _LETTER.match(s)
        if not m:
            raise ParseError(f"bad letter {s!r}", pos + (len(chunk) - len(chunk.lstrip())))
        if m["atom"]:
            letters.append(AtomLeaf(int(m["atom"])))
        elif m["tag"]:
            letters.append(Tagged(m["tag"], AtomLeaf(int(m["arg"]))))
        else:
            letters.append(Label(m["label"]))
        pos += len(chunk) + 1
    return letters


_PAIR = re.compile(r"\s*(\d+)\s*->\s*(\d+)\s*")


def parse_subst(text: str) -> Subst:
    """``{1->2, 3->2}``"""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError("substitution must be written {a->b, ...}", 0)
    body = s[1:-1]
    if not body.strip():
        return Subst()
    pairs = []
    for part in body.split(","):
        m = _PAIR.fullmatch(part)
        if not m:
            raise ParseError(f"bad entry {part.strip()!r}", text.find(part))
        pairs.append((int(m[1]), int(m[2])))
    if len({a for a, _ in pairs}) != len(pairs):
        raise ParseError("atom mapped twice", 0)
    return Subst(pairs)
