"""Exponent-vector monomials and the graded reverse lexicographic order.

Throughout, x1 > x2 > ... > xn. Two monomials of equal degree compare by the
last nonzero entry of their exponent difference: the one with the smaller
exponent there is the larger monomial.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionError, ExponentOverflow

MAX_EXPONENT = 2**31 - 1

LESS, EQUAL, GREATER = -1, 0, 1


def desc_key(exps: tuple) -> tuple:
    """Sort key under which ascending order is grevlex-descending order."""
    return (-sum(exps),) + exps[::-1]


def grevlex_cmp_exps(a: tuple, b: tuple) -> int:
    da, db = sum(a), sum(b)
    if da != db:
        return GREATER if da > db else LESS
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return GREATER if a[i] < b[i] else LESS
    return EQUAL


def divides_exps(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


class Monomial:
    """An immutable monomial x1^e1 * ... * xn^en."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        for e in exps:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> Monomial:
        """The variable x_i (1-based) in n variables."""
        if not 1 <= i <= n:
            raise DimensionError(f"variable x{i} not in a ring of {n} variables")
        e = [0] * n
        e[i - 1] = 1
        return cls(e)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables that occur."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def max_variable(self) -> int:
        """Largest index of a variable dividing this monomial (0 for 1)."""
        for i in range(self.n - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        return 0

    def _check(self, other: Monomial):
        if self.n != other.n:
            raise DimensionError(f"monomials in {self.n} and {other.n} variables")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial([a + b for a, b in zip(self.exponents, other.exponents)])

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return divides_exps(self.exponents, other.exponents)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial([a - b for a, b in zip(self.exponents, other.exponents)])

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial([max(a, b) for a, b in zip(self.exponents, other.exponents)])

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial([min(a, b) for a, b in zip(self.exponents, other.exponents)])

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __lt__(self, other: Monomial) -> bool:
        return grevlex_compare(self, other) == LESS

    def __le__(self, other: Monomial) -> bool:
        return grevlex_compare(self, other) != GREATER

    def __gt__(self, other: Monomial) -> bool:
        return grevlex_compare(self, other) == GREATER

    def __ge__(self, other: Monomial) -> bool:
        return grevlex_compare(self, other) != LESS

    def __repr__(self):
        return f"Monomial({list(self.exponents)})"

    def __str__(self):
        return format_exps(self.exponents)


def format_exps(exps: tuple) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def grevlex_compare(a: Monomial, b: Monomial) -> int:
    """Return ``LESS``, ``EQUAL`` or ``GREATER`` (-1, 0, 1) for a versus b."""
    if a.n != b.n:
        raise DimensionError(f"monomials in {a.n} and {b.n} variables")
    return grevlex_cmp_exps(a.exponents, b.exponents)
