"""Sparse polynomials over an exact field, linear changes of coordinates and
the projections pi_l : S(n) -> S(n-1).
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateSampler,
    DimensionError,
    ProjectionUndefined,
    SingularChange,
)
from .field import default_field
from .monomial import Monomial, desc_key, format_exps


class Polynomial:
    """An immutable polynomial in x1..xn.

    Terms are kept strictly descending in grevlex with no zero coefficients;
    the zero polynomial has no terms.
    """

    __slots__ = ("n", "field", "_terms", "_hash")

    def __init__(self, n: int, field=None, terms: Mapping | Iterable = ()):
        field = field if field is not None else default_field()
        acc: dict[tuple, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            exps = mono.exponents if isinstance(mono, Monomial) else tuple(mono)
            if len(exps) != n:
                raise DimensionError(f"monomial {exps} not in {n} variables")
            c = field(coeff)
            if exps in acc:
                c = field.add(acc[exps], c)
            acc[exps] = c
        self._set(n, field, {e: c for e, c in acc.items() if c})

    def _set(self, n, field, d):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)
        object.__setattr__(
            self, "_terms", tuple(sorted(d.items(), key=lambda t: desc_key(t[0])))
        )
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_dict(cls, n, field, d) -> Polynomial:
        """Trusted constructor: ``d`` maps exponent tuples to nonzero field elements."""
        obj = cls.__new__(cls)
        obj._set(n, field, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers
    @classmethod
    def zero(cls, n, field=None) -> Polynomial:
        return cls(n, field)

    @classmethod
    def constant(cls, n, c, field=None) -> Polynomial:
        return cls(n, field, [((0,) * n, c)])

    @classmethod
    def variable(cls, n, i, field=None) -> Polynomial:
        return cls(n, field, [(Monomial.var(n, i), 1)])

    @classmethod
    def from_monomial(cls, m: Monomial, field=None) -> Polynomial:
        return cls(m.n, field, [(m, 1)])

    # views
    @property
    def terms(self) -> list[tuple[object, Monomial]]:
        """(coefficient, monomial) pairs, grevlex descending."""
        return [(c, Monomial(e)) for e, c in self._terms]

    def items(self):
        """(exponent tuple, coefficient) pairs, grevlex descending."""
        return self._terms

    def to_dict(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return Monomial(self._terms[0][0])

    @property
    def leading_coefficient(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._terms[0][1]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e, _ in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, m) -> object:
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return dict(self._terms).get(exps, self.field.zero)

    # arithmetic
    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise DimensionError(f"polynomials in {self.n} and {other.n} variables")
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, other, self.field)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        F = self.field
        d = dict(self._terms)
        for e, c in other._terms:
            v = F.add(d.get(e, F.zero), c)
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial._from_dict(self.n, F, d)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        F = self.field
        return Polynomial._from_dict(self.n, F, {e: F.neg(c) for e, c in self._terms})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        F = self.field
        d: dict = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple([a + b for a, b in zip(e1, e2)])
                v = F.add(d.get(e, F.zero), F.mul(c1, c2))
                if v:
                    d[e] = v
                else:
                    d.pop(e, None)
        return Polynomial._from_dict(self.n, F, d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        F = self.field
        c = F(c)
        if not c:
            return Polynomial.zero(self.n, F)
        return Polynomial._from_dict(self.n, F, {e: F.mul(c, v) for e, v in self._terms})

    def monic(self) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self._terms == other._terms
        if not self._terms:
            return other == 0
        return False

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self._terms)))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.n}, {self.field!r}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        F = self.field
        out = []
        for k, (e, c) in enumerate(self._terms):
            c = F.symmetric(c)
            neg = c < 0
            a = -c if neg else c
            mono = format_exps(e)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def substitute(f: Polynomial, images: Sequence[Polynomial], target_n: int) -> Polynomial:
    """Ring homomorphism x_j -> images[j-1], landing in ``target_n`` variables."""
    if len(images) != f.n:
        raise DimensionError(f"need {f.n} images, got {len(images)}")
    F = f.field
    result = Polynomial.zero(target_n, F)
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(j, k):
        if (j, k) not in powers:
            powers[(j, k)] = images[j] ** k
        return powers[(j, k)]

    one = Polynomial.constant(target_n, 1, F)
    for e, c in f.items():
        term = one.scale(c)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        result = result + term
    return result


class LinearForm:
    """l = c1*x1 + ... + cn*xn, not identically zero."""

    __slots__ = ("coefficients", "field")

    def __init__(self, coefficients: Sequence, field=None):
        field = field if field is not None else default_field()
        coeffs = tuple(field(c) for c in coefficients)
        if not any(coeffs):
            raise ValueError("linear form must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @classmethod
    def variable(cls, n, i, field=None) -> LinearForm:
        c = [0] * n
        c[i - 1] = 1
        return cls(c, field)

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> LinearForm:
        coeffs = [f.field.zero] * f.n
        for e, c in f.items():
            if sum(e) != 1:
                raise ValueError(f"{f} is not a linear form")
            coeffs[e.index(1)] = c
        return cls(coeffs, f.field)

    def to_polynomial(self) -> Polynomial:
        n = self.n
        return Polynomial(
            n, self.field, [(Monomial.var(n, i + 1), c) for i, c in enumerate(self.coefficients)]
        )

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({self.to_polynomial()})"


def _determinant(matrix, F):
    a = [list(row) for row in matrix]
    n = len(a)
    det = F.one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return F.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = F.neg(det)
        det = F.mul(det, a[col][col])
        inv = F.inv(a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                factor = F.mul(a[r][col], inv)
                a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[col])]
    return det


def _inverse(matrix, F):
    n = len(matrix)
    a = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.mul(inv, x) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class LinearChange:
    """An invertible n x n matrix A acting by x_j -> sum_i A[i][j] x_i."""

    __slots__ = ("matrix", "field", "seed")

    def __init__(self, matrix: Sequence[Sequence], field=None, seed: int | None = None):
        field = field if field is not None else default_field()
        rows = tuple(tuple(field(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("linear change must be a nonempty square matrix")
        if not _determinant(rows, field):
            raise SingularChange("matrix is singular")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "seed", seed)

    def __setattr__(self, name, value):
        raise AttributeError("LinearChange is immutable")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n, field=None) -> LinearChange:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    def determinant(self):
        return _determinant(self.matrix, self.field)

    def inverse(self) -> LinearChange:
        return LinearChange(_inverse(self.matrix, self.field), self.field)

    def images(self) -> list[Polynomial]:
        """The image of each variable x_j as a linear polynomial."""
        n = self.n
        return [
            Polynomial(n, self.field, [(Monomial.var(n, i + 1), self.matrix[i][j]) for i in range(n)])
            for j in range(n)
        ]

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def apply_change(f: Polynomial, change: LinearChange) -> Polynomial:
    if f.n != change.n:
        raise DimensionError(f"change of size {change.n} applied in {f.n} variables")
    return substitute(f, change.images(), f.n)


def random_change(n: int, seed: int, field=None) -> LinearChange:
    """Seeded random invertible matrix; entries sampled from the field's window."""
    if n < 1:
        raise ValueError("n must be at least 1")
    field = field if field is not None else default_field()
    rng = random.Random(seed)
    for _ in range(64):
        rows = [[field.sample(rng) for _ in range(n)] for _ in range(n)]
        if _determinant(rows, field):
            return LinearChange(rows, field, seed=seed)
    raise DegenerateSampler("degenerate sampler: no invertible matrix in 64 attempts")


def random_linear_form(n: int, rng: random.Random, field=None) -> LinearForm:
    field = field if field is not None else default_field()
    for _ in range(64):
        coeffs = [field.sample(rng) for _ in range(n)]
        if any(coeffs):
            return LinearForm(coeffs, field)
    raise DegenerateSampler("degenerate sampler: zero linear form 64 times")


def _pi_images(l: Polynomial) -> list[Polynomial]:
    """Images of x_1..x_m under pi_l for a linear form l in m variables."""
    m, F = l.n, l.field
    cn = l.coefficient((0,) * (m - 1) + (1,))
    if not cn:
        raise ProjectionUndefined("projection undefined: x_n-coefficient of l is zero")
    target = m - 1
    images = [Polynomial.variable(target, i + 1, F) for i in range(target)]
    inv = F.inv(cn)
    last = {}
    for e, c in l.items():
        i = e.index(1)
        if i < target:
            te = [0] * target
            te[i] = 1
            last[tuple(te)] = F.neg(F.mul(c, inv))
    images.append(Polynomial._from_dict(target, F, last))
    return images


def project_pi(f: Polynomial, l: LinearForm | Polynomial) -> Polynomial:
    """pi_l: substitute x_n -> -(c_1x_1 + ... + c_{n-1}x_{n-1})/c_n into S(n-1)."""
    lp = l.to_polynomial() if isinstance(l, LinearForm) else l
    if lp.n != f.n:
        raise DimensionError(f"linear form in {lp.n} variables, polynomial in {f.n}")
    return substitute(f, _pi_images(lp), f.n - 1)


def chain_images(n: int, forms: Sequence[LinearForm | Polynomial], field=None) -> list[Polynomial]:
    """Images of x_1..x_n under Pi_{l_1...l_s}, as linear polynomials in S(n-s)."""
    field = field if field is not None else (forms[0].field if forms else default_field())
    images = [Polynomial.variable(n, i + 1, field) for i in range(n)]
    m = n
    for stage, l in enumerate(forms, start=1):
        lp = l.to_polynomial() if isinstance(l, LinearForm) else l
        if lp.n != n:
            raise DimensionError(f"form {stage} lives in {lp.n} variables, expected {n}")
        lbar = substitute(lp, images, m)
        try:
            step = _pi_images(lbar)
        except ProjectionUndefined:
            raise ProjectionUndefined(
                f"projection chain undefined at stage {stage}: "
                f"x{m}-coefficient of the reduced form is zero",
                stage=stage,
            ) from None
        images = [substitute(img, step, m - 1) for img in images]
        m -= 1
    return images


def project_chain(f: Polynomial, forms: Sequence[LinearForm | Polynomial]) -> Polynomial:
    """Pi_{l_1...l_s} = pi_{bar l_s} ... pi_{l_1}, landing in S(n-s)."""
    if not forms:
        return f
    images = chain_images(f.n, forms, f.field)
    return substitute(f, images, f.n - len(forms))
