"""Exact coefficient fields: prime fields F_p and the rationals.

Field elements are plain Python values (``int`` in ``[0, p)`` for F_p,
``fractions.Fraction`` for Q). A field object owns the arithmetic and the
canonicalization, so polynomial code stays agnostic of the backing field.
"""

from __future__ import annotations

import random
from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class PrimeField:
    """The finite field Z/pZ for an odd prime p < 2**31."""

    is_prime_field = True

    def __init__(self, p: int = DEFAULT_PRIME):
        p = int(p)
        if p == 2 or not _is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if p >= 2**31:
            raise ValueError("prime must be below 2**31")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def symmetric(self, a) -> int:
        """Representative in (-p/2, p/2], used for printing."""
        return a - self.p if a > self.p // 2 else a

    def sample(self, rng: random.Random):
        return rng.randrange(self.p)

    @property
    def spec(self) -> str:
        return f"p:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """The rational numbers with exact ``Fraction`` arithmetic."""

    is_prime_field = False
    characteristic = 0
    # sampling window for "general" choices; kept small so coefficients stay short
    window = 50

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a / Fraction(b)

    def symmetric(self, a):
        return a

    def sample(self, rng: random.Random):
        return Fraction(rng.randint(-self.window, self.window))

    @property
    def spec(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


def field_from_spec(spec: str):
    """Parse ``q`` or ``p:<prime>``."""
    spec = spec.strip().lower()
    if spec == "q":
        return RationalField()
    if spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"bad field spec {spec!r}; expected 'q' or 'p:<prime>'")


def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)
