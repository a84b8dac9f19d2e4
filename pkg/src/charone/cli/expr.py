"""Expression language for the square and polygon semirings.

    expr    := term ('+' term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' INT)?
    primary := 'q' '^' INT '(x)' 'q' '^' INT
             | '(' expr ')'
             | 'sigma' '(' INT ',' INT ')'
             | 'fr' '(' INT ',' INT ',' expr ')'
             | 'mu' '(' expr ')'
             | 'gamma' '(' expr ')'

``(x)`` is the tensor sign: ``q^a (x) q^b`` is the staircase with corner (a, b).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import CharoneError, ParseError
from ..polygon import NewtonPolygon, gamma, sigma
from ..square import Staircase, sq_frobenius, sq_mu
from ..tropical import Zmin

INT64 = 1 << 63


@dataclass(frozen=True)
class Tensor:
    a: int
    b: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Sigma:
    a: int
    b: int


@dataclass(frozen=True)
class Fr:
    n: int
    m: int
    arg: "Expr"


@dataclass(frozen=True)
class Mu:
    arg: "Expr"


@dataclass(frozen=True)
class Gamma:
    arg: "Expr"


Expr = Union[Tensor, Add, Mul, Pow, Sigma, Fr, Mu, Gamma]

_TOKEN = re.compile(r"(\(x\))|(-?\d+)|([A-Za-z_]+)|(\S)")
_SPACE = re.compile(r"\s*")


@dataclass(frozen=True)
class Token:
    kind: str  # "tensor", "int", "name", "op", "end"
    text: str
    offset: int  # byte offset into the UTF-8 input


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        pos = _SPACE.match(text, pos).end()
        offset = len(text[:pos].encode("utf-8"))
        if pos == len(text):
            tokens.append(Token("end", "", offset))
            return tokens
        m = _TOKEN.match(text, pos)
        kind = ("tensor", "int", "name", "op")[m.lastindex - 1]
        if kind == "op" and m.group(4) not in "+*^(),":
            raise ParseError(f"unexpected character {m.group(4)!r}", offset)
        tokens.append(Token(kind, m.group(m.lastindex), offset))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _fail(self, what: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {what}, found {found}", t.offset)

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "name", "tensor") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self._fail(repr(text))

    def integer(self, *, positive: bool = False) -> int:
        t = self.tok
        if t.kind != "int":
            self._fail("an integer")
        v = int(t.text)
        if not -INT64 <= v < INT64:
            raise ParseError("integer literal outside the 64-bit range", t.offset)
        if positive and v < 1:
            raise ParseError("expected a positive integer", t.offset)
        self.i += 1
        return v

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self._fail("'+', '*' or end of input")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.accept("+"):
            e = Add(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.accept("*"):
            e = Mul(e, self.factor())
        return e

    def factor(self) -> Expr:
        e = self.primary()
        if self.accept("^"):
            t = self.tok
            k = self.integer()
            if k < 0:
                raise ParseError("exponents must be non-negative", t.offset)
            e = Pow(e, k)
        return e

    def primary(self) -> Expr:
        t = self.tok
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if self.accept("q"):
            self.expect("^")
            a = self.integer()
            if self.tok.kind != "tensor":
                self._fail("'(x)'")
            self.i += 1
            self.expect("q")
            self.expect("^")
            return Tensor(a, self.integer())
        if self.accept("sigma"):
            self.expect("(")
            a = self.integer(positive=True)
            self.expect(",")
            b = self.integer(positive=True)
            self.expect(")")
            return Sigma(a, b)
        if self.accept("fr"):
            self.expect("(")
            n = self.integer(positive=True)
            self.expect(",")
            m = self.integer(positive=True)
            self.expect(",")
            e = self.expr()
            self.expect(")")
            return Fr(n, m, e)
        for name, node in (("mu", Mu), ("gamma", Gamma)):
            if self.accept(name):
                self.expect("(")
                e = self.expr()
                self.expect(")")
                return node(e)
        raise ParseError(
            f"expected a literal q^a(x)q^b, '(' or a function, found {'end of input' if t.kind == 'end' else repr(t.text)}",
            t.offset,
        )


def parse(text: str) -> Expr:
    return _Parser(text).parse()


_PREC = {Add: 1, Mul: 2}


def to_text(e: Expr) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(e, Tensor):
        return f"q^{e.a}(x)q^{e.b}"
    if isinstance(e, Sigma):
        return f"sigma({e.a},{e.b})"
    if isinstance(e, Fr):
        return f"fr({e.n},{e.m},{to_text(e.arg)})"
    if isinstance(e, Mu):
        return f"mu({to_text(e.arg)})"
    if isinstance(e, Gamma):
        return f"gamma({to_text(e.arg)})"
    if isinstance(e, Pow):
        base = to_text(e.base)
        if isinstance(e.base, (Add, Mul, Pow, Tensor)):
            base = f"({base})"
        return f"{base}^{e.exp}"
    prec = _PREC[type(e)]
    sym = " + " if isinstance(e, Add) else " * "
    left = to_text(e.left)
    if _PREC.get(type(e.left), 3) < prec:
        left = f"({left})"
    right = to_text(e.right)
    # operators are left-associative, so an equal-precedence right operand needs parentheses
    if _PREC.get(type(e.right), 3) <= prec:
        right = f"({right})"
    return left + sym + right


class EvalError(CharoneError, ValueError):
    pass


Value = Union[Staircase, NewtonPolygon, Zmin]


def _kind(v: Value) -> str:
    return {Staircase: "staircase", NewtonPolygon: "polygon", Zmin: "Z_min element"}[type(v)]


def evaluate(e: Expr) -> Value:
    if isinstance(e, Tensor):
        return Staircase.tensor(e.a, e.b)
    if isinstance(e, Sigma):
        return sigma(e.a, e.b)
    if isinstance(e, (Add, Mul)):
        x, y = evaluate(e.left), evaluate(e.right)
        if type(x) is not type(y):
            raise EvalError(f"cannot combine a {_kind(x)} with a {_kind(y)}")
        return x + y if isinstance(e, Add) else x * y
    if isinstance(e, Pow):
        return evaluate(e.base) ** e.exp
    if isinstance(e, Fr):
        x = evaluate(e.arg)
        if isinstance(x, Staircase):
            return sq_frobenius(x, e.n, e.m)
        if isinstance(x, NewtonPolygon):
            return gamma(sq_frobenius(x.staircase(), e.n, e.m))
        raise EvalError("fr applies to staircases and polygons")
    if isinstance(e, Mu):
        x = evaluate(e.arg)
        if isinstance(x, NewtonPolygon):
            x = x.staircase()
        if not isinstance(x, Staircase):
            raise EvalError("mu applies to staircases and polygons")
        return sq_mu(x)
    if isinstance(e, Gamma):
        x = evaluate(e.arg)
        if isinstance(x, NewtonPolygon):
            return x
        if not isinstance(x, Staircase):
            raise EvalError("gamma applies to staircases")
        return gamma(x)
    raise TypeError(f"not an expression node: {e!r}")
