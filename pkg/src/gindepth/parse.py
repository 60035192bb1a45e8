"""Reading and writing ideal files.

Format::

    # comment
    ring 4
    x1*x3 - x2^2
    x1*x4 - x2*x3

The first non-comment line is ``ring <n>``; each later non-blank line is one
polynomial in x1..xn with integer coefficients and the operators ``+ - * ^``.
Juxtaposition is not multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ContractError, ParseError
from .field import default_field
from .groebner import PolynomialIdeal
from .monomial_ideal import MonomialIdeal
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^])|(?P<bad>\S))")


@dataclass(frozen=True)
class IdealFile:
    n: int
    field: object
    sources: tuple[str, ...]
    ideal: PolynomialIdeal

    @property
    def is_monomial(self) -> bool:
        return self.ideal.is_monomial()

    def monomial_ideal(self) -> MonomialIdeal:
        if not self.is_monomial:
            raise ContractError("this command needs monomial generators")
        return MonomialIdeal(self.n, [g.items()[0][0] for g in self.ideal.generators])


def _tokens(text: str, lineno: int, col0: int):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        value = m.group(kind)
        col = m.start(kind) + 1 + col0
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", lineno, col)
        out.append((kind, value, col))
        pos = m.end()
    return out


class _LineParser:
    def __init__(self, tokens, n, field, lineno, end_col):
        self.toks = tokens
        self.i = 0
        self.n = n
        self.field = field
        self.lineno = lineno
        self.end_col = end_col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        col = tok[2] if tok else self.end_col
        raise ParseError(msg, self.lineno, col)

    def parse(self) -> Polynomial:
        if self.peek() is None:
            self.fail("empty polynomial")
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek() is not None:
            tok = self.take()
            if tok[0] != "op" or tok[1] not in "+-":
                self.fail("expected '+' or '-'", tok)
            t = self.term()
            total = total + t if tok[1] == "+" else total - t
        return total

    def exponent(self) -> int:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.take()
            tok = self.take()
            if tok is None or tok[0] != "int":
                self.fail("expected an integer exponent", tok)
            return int(tok[1])
        return 1

    def factor(self) -> Polynomial:
        tok = self.take()
        if tok is None:
            self.fail("expected a number or variable")
        if tok[0] == "int":
            return Polynomial.constant(self.n, int(tok[1]) ** self.exponent(), self.field)
        if tok[0] == "var":
            i = int(tok[1][1:])
            if i < 1:
                self.fail("variable indices start at 1", tok)
            if i > self.n:
                self.fail("variable index exceeds ring size", tok)
            return Polynomial.variable(self.n, i, self.field) ** self.exponent()
        self.fail(f"unexpected {tok[1]!r}", tok)

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "op" and tok[1] in "+-"):
                return result
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                result = result * self.factor()
            else:
                self.fail("expected an operator (juxtaposition is not multiplication)", tok)


def parse_ideal(text: str, field=None) -> IdealFile:
    field = field if field is not None else default_field()
    n = None
    sources, gens = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if n is None:
            m = re.fullmatch(r"\s*ring\s+(\d+)\s*", body)
            if m is None:
                col = len(body) - len(body.lstrip()) + 1
                raise ParseError("expected 'ring <n>'", lineno, col)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("ring size must be at least 1", lineno, m.start(1) + 1)
            continue
        toks = _tokens(body, lineno, 0)
        f = _LineParser(toks, n, field, lineno, len(body.rstrip()) + 1).parse()
        sources.append(body.strip())
        gens.append(f)
    if n is None:
        raise ParseError("missing 'ring <n>' line", 1, 1)
    return IdealFile(n, field, tuple(sources), PolynomialIdeal(n, gens, field))


def format_ideal(I: PolynomialIdeal | MonomialIdeal) -> str:
    """Canonical file text; parses back to the same ideal."""
    if isinstance(I, MonomialIdeal):
        lines = [str(m) for m in I.gens]
        n = I.ambient
    else:
        lines = [str(g) for g in I.generators]
        n = I.n
    return "\n".join([f"ring {n}", *lines]) + "\n"
