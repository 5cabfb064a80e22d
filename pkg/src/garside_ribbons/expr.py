"""Element expressions.

Grammar::

    expr     := fraction | word
    fraction := "inv(" word ")" [ "." word ]
    word     := "" | "1" | term ( "." term )*
    term     := factor [ "^" INT ]
    factor   := ATOM | "1" | "Delta" | "Delta_P[" atoms "]" | "(" word ")"
    atoms    := ATOM ( "," ATOM )*

Atom names are those of the lattice (``s1``, ``s2``, ...). Whitespace is
ignored. Parse errors carry the character offset where they occurred.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownAtom
from .groups import GroupFraction, reduce_fraction
from .monoid import Element, GarsideMonoid
from .parabolic import StandardParabolic, delta_element, format_parabolic, parabolic_closure

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<sym>[.^(),\[\]]))")


class _Parser:
    def __init__(self, M: GarsideMonoid, text: str):
        self.M = M
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        t = self.peek()
        return t[2] if t else len(self.text)

    def take(self, value: str | None = None, kind: str | None = None) -> tuple[str, str, int]:
        t = self.peek()
        if t is None or (value is not None and t[1] != value) or (kind is not None and t[0] != kind):
            want = repr(value) if value else kind
            got = repr(t[1]) if t else "end of input"
            raise ParseError(f"expected {want}, got {got}", self.pos(), self.text)
        self.i += 1
        return t

    def at(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t[1] == value

    def done(self) -> bool:
        return self.i >= len(self.tokens)

    # grammar -------------------------------------------------------------------

    def expr(self) -> Element | GroupFraction:
        if self.at("inv"):
            self.take("inv")
            self.take("(")
            den = self.word()
            self.take(")")
            num: Element = ()
            if self.at("."):
                self.take(".")
                num = self.word()
            self.end()
            return reduce_fraction(self.M, den, num)
        w = self.word()
        self.end()
        return w

    def end(self) -> None:
        if not self.done():
            raise ParseError(f"unexpected {self.peek()[1]!r}", self.pos(), self.text)

    def word(self) -> Element:
        if self.done() or self.at(")"):
            return ()
        out = self.term()
        while self.at("."):
            self.take(".")
            out = self.M.multiply(out, self.term())
        return out

    def term(self) -> Element:
        base = self.factor()
        if self.at("^"):
            self.take("^")
            k = int(self.take(kind="int")[1])
            return self.M.power(base, k)
        return base

    def factor(self) -> Element:
        t = self.peek()
        if t is None:
            raise ParseError("expected an atom, got end of input", self.pos(), self.text)
        kind, value, pos = t
        if value == "(":
            self.take("(")
            w = self.word()
            self.take(")")
            return w
        if kind == "int":
            if value != "1":
                raise ParseError(f"unexpected number {value!r}", pos, self.text)
            self.take()
            return ()
        if kind != "name":
            raise ParseError(f"unexpected {value!r}", pos, self.text)
        self.take()
        if value == "Delta":
            return self.M.simple(self.M.delta)
        if value == "Delta_P":
            P = self.parabolic_brackets()
            return delta_element(self.M, P)
        return (self.atom(value, pos),)

    def atom(self, name: str, pos: int) -> int:
        idx = self.M.lattice.atom_names
        if name not in idx:
            raise UnknownAtom(f"unknown atom {name!r}", pos, self.text)
        return self.M.lattice.atoms[idx.index(name)]

    def parabolic_brackets(self) -> StandardParabolic:
        self.take("[")
        atoms = []
        if not self.at("]"):
            _, name, pos = self.take(kind="name")
            atoms.append(self.atom(name, pos))
            while self.at(","):
                self.take(",")
                _, name, pos = self.take(kind="name")
                atoms.append(self.atom(name, pos))
        self.take("]")
        return parabolic_closure(self.M, atoms)


def parse_expr(M: GarsideMonoid, text: str) -> Element | GroupFraction:
    """Parse a positive word or a fraction ``inv(W).W``."""
    return _Parser(M, text).expr()


def parse_element(M: GarsideMonoid, text: str) -> Element:
    out = parse_expr(M, text)
    if isinstance(out, GroupFraction):
        if not out.is_positive:
            raise ParseError("expected a positive element, got a fraction", 0, text)
        return out.num
    return out


def parse_fraction(M: GarsideMonoid, text: str) -> GroupFraction:
    out = parse_expr(M, text)
    return out if isinstance(out, GroupFraction) else GroupFraction((), out)


def parse_atom(M: GarsideMonoid, text: str) -> int:
    p = _Parser(M, text)
    _, name, pos = p.take(kind="name")
    p.end()
    return p.atom(name, pos)


def parse_parabolic(M: GarsideMonoid, text: str) -> StandardParabolic:
    """``[s1, s5]``, ``s1,s5`` or ``[]``; the closure of the listed atoms.

    Listing a set that is not already closed is accepted; the closure is used.
    """
    t = text.strip()
    if not t.startswith("["):
        t = f"[{t}]"
    p = _Parser(M, t)
    P = p.parabolic_brackets()
    p.end()
    return P


def format_fraction(M: GarsideMonoid, x: GroupFraction) -> str:
    if x.is_positive:
        return M.format(x.num)
    if not x.num:
        return f"inv({M.format(x.den)})"
    return f"inv({M.format(x.den)}).{M.format(x.num)}"


def format_any(M: GarsideMonoid, x) -> str:
    if isinstance(x, GroupFraction):
        return format_fraction(M, x)
    if isinstance(x, StandardParabolic):
        return format_parabolic(M, x)
    return M.format(x)
