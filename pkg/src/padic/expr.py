"""Expression language of the ``padic`` calculator.

Grammar::

    expr  := sum | "v(" sum ")" | "d(" sum "," sum ")"
    sum   := prod { "+" prod }
    prod  := unary { "*" unary }
    unary := "-" unary | atom
    atom  := INT | "(" sum ")"

Integer literals are decimal and unsigned; a leading ``-`` is always parsed
as negation, so ``-3`` is ``Neg(IntLit(3))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

__all__ = [
    "IntLit",
    "Add",
    "Mul",
    "Neg",
    "Val",
    "Dist",
    "Expr",
    "ParseError",
    "parse",
    "to_source",
]


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    operand: "Term"


@dataclass(frozen=True)
class Val:
    arg: "Term"


@dataclass(frozen=True)
class Dist:
    left: "Term"
    right: "Term"


Term = Union[IntLit, Add, Mul, Neg]
Expr = Union[Term, Val, Dist]


class ParseError(Exception):
    def __init__(self, offset: int, expected: set[str], found: str):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(self.expected))
        super().__init__(f"at offset {offset}: expected one of {{{want}}}, found {found}")


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<INT>[0-9]+)|(?P<NAME>[A-Za-z_]\w*)|(?P<OP>[-+*(),]))", re.ASCII)
_INT, _EOF, _BAD = "INT", "end of input", "invalid character"
_ATOM_START = {_INT, "(", "-"}


def _tokenize(src: str) -> Iterator[Token]:
    pos = 0
    while True:
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            rest = src[pos:]
            stripped = rest.lstrip()
            offset = len(src[: pos + len(rest) - len(stripped)].encode())
            if stripped:
                yield Token(_BAD, stripped[0], offset)
            yield Token(_EOF, "", len(src.encode()))
            return
        kind = m.lastgroup
        text = m.group(kind)
        # names (only the query heads v and d are meaningful) and operators
        # are their own token kinds
        yield Token(_INT if kind == _INT else text, text, len(src[: m.start(kind)].encode()))
        pos = m.end()


class _Parser:
    def __init__(self, src: str):
        self.tokens = list(_tokenize(src))
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected: set[str]):
        t = self.tok
        found = "end of input" if t.kind == _EOF else repr(t.text)
        raise ParseError(t.offset, expected, found)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        t = self.tok
        self.pos += 1
        return t

    def expr(self) -> Expr:
        if self.tok.kind == "v":
            self.pos += 1
            self.expect("(")
            node: Expr = Val(self.sum())
            self.expect(")")
        elif self.tok.kind == "d":
            self.pos += 1
            self.expect("(")
            left = self.sum()
            self.expect(",")
            node = Dist(left, self.sum())
            self.expect(")")
        else:
            node = self.sum()
            if self.tok.kind != _EOF:
                self.fail({"+", "*", _EOF})
        if self.tok.kind != _EOF:
            self.fail({_EOF})
        return node

    def sum(self) -> Term:
        node = self.prod()
        while self.tok.kind == "+":
            self.pos += 1
            node = Add(node, self.prod())
        return node

    def prod(self) -> Term:
        node = self.unary()
        while self.tok.kind == "*":
            self.pos += 1
            node = Mul(node, self.unary())
        return node

    def unary(self) -> Term:
        if self.tok.kind == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Term:
        t = self.tok
        if t.kind == _INT:
            self.pos += 1
            return IntLit(int(t.text))
        if t.kind == "(":
            self.pos += 1
            node = self.sum()
            self.expect(")")
            return node
        self.fail(_ATOM_START)


def parse(src: str) -> Expr:
    """Parse one expression.  Raises :class:`ParseError` with a byte offset."""
    return _Parser(src).expr()


# binding strength: sum < prod < unary/atom
_PREC = {Add: 1, Mul: 2, Neg: 3, IntLit: 4}


def _show(e: Term, min_prec: int) -> str:
    if isinstance(e, IntLit):
        text = str(e.value)
    elif isinstance(e, Add):
        text = f"{_show(e.left, 1)} + {_show(e.right, 2)}"
    elif isinstance(e, Mul):
        text = f"{_show(e.left, 2)} * {_show(e.right, 3)}"
    elif isinstance(e, Neg):
        text = f"-{_show(e.operand, 3)}"
    else:
        raise TypeError(f"{type(e).__name__} can only appear at the top level")
    return f"({text})" if _PREC[type(e)] < min_prec else text


def to_source(e: Expr) -> str:
    """Canonical source text with the fewest parentheses; ``parse`` inverts it."""
    if isinstance(e, Val):
        return f"v({_show(e.arg, 1)})"
    if isinstance(e, Dist):
        return f"d({_show(e.left, 1)}, {_show(e.right, 1)})"
    return _show(e, 1)
