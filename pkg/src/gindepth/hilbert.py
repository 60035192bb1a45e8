"""Hilbert series, Hilbert functions and Hilbert coefficients of S/J for a
monomial ideal J, plus the rank of J_2/J_1 over k[x_{r+1}..x_n].

Integer polynomials in t are tuples of coefficients, constant term first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import ContractError
from .monomial_ideal import (
    MonomialIdeal,
    bar_phi,
    big_pi,
    contains,
    is_borel_type,
)
from . import kernels


# integer polynomial helpers

def _trim(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(a, b) -> tuple:
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_sub(a, b) -> tuple:
    return poly_add(a, tuple(-x for x in b))


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_shift(a, k: int) -> tuple:
    return _trim((0,) * k + tuple(a)) if a else ()


def one_minus_t_power(k: int) -> tuple:
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def divide_one_minus_t(a) -> tuple | None:
    """a / (1 - t) if exact, else None."""
    a = _trim(a)
    if not a:
        return ()
    if sum(a) != 0:
        return None
    # a = (1 - t) b  <=>  b_i = a_0 + ... + a_i
    out, acc = [], 0
    for x in a[:-1]:
        acc += x
        out.append(acc)
    return _trim(out)


def poly_eval(a, t):
    return sum(c * t**i for i, c in enumerate(a))


def power_series(numerator, n: int, upto: int) -> list[int]:
    """Coefficients of t^0..t^upto in numerator / (1 - t)^n."""
    # 1/(1-t)^n = sum_m C(m+n-1, n-1) t^m
    out = [0] * (upto + 1)
    for i, c in enumerate(numerator):
        if i > upto or not c:
            continue
        for m in range(upto + 1 - i):
            out[i + m] += c * (comb(m + n - 1, n - 1) if n > 0 else (1 if m == 0 else 0))
    return out


def format_poly(a, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if (mono == "" or mag != 1) else ""
        if body and mono:
            body += "*"
        body += mono
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


@dataclass(frozen=True)
class HilbertCoefficients:
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i] if i < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class HilbertSeries:
    """h_{S/J}(t) = numerator/(1-t)^ambient = reduced/(1-t)^dim."""

    ambient: int
    numerator: tuple[int, ...]
    reduced: tuple[int, ...]
    dim: int

    @property
    def multiplicity(self) -> int:
        return poly_eval(self.reduced, 1)

    def coefficients(self, upto: int | None = None) -> HilbertCoefficients:
        if upto is None:
            upto = max(len(self.reduced) - 1, 0)
        return coefficients(self.reduced, upto)

    def hilbert_function(self, m: int) -> int:
        if m < 0:
            return 0
        return power_series(self.numerator, self.ambient, m)[m]

    def expansion(self, upto: int) -> list[int]:
        return power_series(self.numerator, self.ambient, upto)


# numerator recursion

def _coprime_numerator(gens) -> tuple:
    out = (1,)
    for e in gens:
        out = poly_mul(out, poly_sub((1,), poly_shift((1,), sum(e))))
    return out


def _pairwise_coprime(gens) -> bool:
    seen = set()
    for e in gens:
        sup = {i for i, x in enumerate(e) if x}
        if seen & sup:
            return False
        seen |= sup
    return True


def _pivot_max_occurrence(gens, n):
    counts = [0] * n
    for e in gens:
        for i, x in enumerate(e):
            if x:
                counts[i] += 1
    return max(range(n), key=lambda i: (counts[i], -i))


def _pivot_first(gens, n):
    counts = [0] * n
    for e in gens:
        for i, x in enumerate(e):
            if x:
                counts[i] += 1
    return next(i for i in range(n) if counts[i] >= 2)


PIVOTS = {"max_occurrence": _pivot_max_occurrence, "first": _pivot_first}


def numerator(J: MonomialIdeal, pivot: str = "max_occurrence") -> tuple:
    """Numerator g(t) with h_{S/J}(t) = g(t) / (1-t)^n."""
    choose = PIVOTS[pivot]
    n = J.ambient
    memo: dict[tuple, tuple] = {}

    def rec(gens: tuple) -> tuple:
        if not gens:
            return (1,)
        if len(gens) == 1 and sum(gens[0]) == 0:
            return ()
        if _pairwise_coprime(gens):
            return _coprime_numerator(gens)
        if gens in memo:
            return memo[gens]
        i = choose(gens, n)
        xi = tuple(1 if k == i else 0 for k in range(n))
        plus = tuple(sorted(kernels.minimalize([e for e in gens if not e[i]] + [xi])))
        quot = tuple(
            sorted(kernels.minimalize([e[:i] + (max(e[i] - 1, 0),) + e[i + 1:] for e in gens]))
        )
        result = poly_add(rec(plus), poly_shift(rec(quot), 1))
        memo[gens] = result
        return result

    return rec(tuple(sorted(J.exps)))


def reduce(g, n: int) -> tuple[tuple, int]:
    """Cancel (1-t) factors from g/(1-t)^n; returns (q, dim). Zero module: ((), -1)."""
    g = _trim(g)
    if not g:
        return (), -1
    k = 0
    while k < n:
        nxt = divide_one_minus_t(g)
        if nxt is None:
            break
        g, k = nxt, k + 1
    return g, n - k


def series_of_monomial_quotient(J: MonomialIdeal, pivot: str = "max_occurrence") -> HilbertSeries:
    g = numerator(J, pivot)
    q, dim = reduce(g, J.ambient)
    return HilbertSeries(J.ambient, g, q, dim)


def coefficients(q, upto: int) -> HilbertCoefficients:
    """e_0..e_upto with q(t) = sum_i e_i (t-1)^i."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    return HilbertCoefficients(
        tuple(sum(c * comb(k, i) for k, c in enumerate(q)) for i in range(upto + 1))
    )


def hilbert_function(J: MonomialIdeal, m: int) -> int:
    """Number of degree-m monomials outside J, by enumeration."""
    if m < 0:
        return 0
    n = J.ambient
    count = 0
    for combo in combinations_with_replacement(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] += 1
        if not contains(J, tuple(e)):
            count += 1
    return count


def hilbert_coefficients(J: MonomialIdeal, upto: int) -> HilbertCoefficients:
    return series_of_monomial_quotient(J).coefficients(upto)


def rank_quotient(J: MonomialIdeal, r: int) -> int:
    """rank of J_2/J_1 over k[x_{r+1}..x_n] = dim_k Pi_r(J_2)/Pi_r(J_1).

    J_1 = (J cap k[x_1..x_r]) S and J_2 = Phi_r(J).
    """
    if not is_borel_type(J):
        raise ContractError("rank_quotient needs a Borel-type ideal")
    n = J.ambient
    if not 0 <= r <= n:
        raise ContractError(f"r={r} outside 0..{n}")
    d = series_of_monomial_quotient(J).dim
    if d < n - r:
        raise ContractError(f"dim(S/J)={d} < n-r={n - r}")
    small = big_pi(J, r)
    big = bar_phi(J, r)
    diff = poly_sub(numerator(small), numerator(big))
    for _ in range(r):
        nxt = divide_one_minus_t(diff)
        if nxt is None:
            raise ContractError("J_2/J_1 has infinite k-length in r variables")
        diff = nxt
    if any(c < 0 for c in diff):
        raise ContractError("negative Hilbert function difference")
    return sum(diff)


def rank_quotient_bruteforce(J: MonomialIdeal, r: int, max_degree: int) -> int:
    """Same quantity by enumerating monomials of Pi_r(J_2) outside Pi_r(J_1)."""
    small = big_pi(J, r)
    big = bar_phi(J, r)
    total = 0
    for m in range(max_degree + 1):
        total += hilbert_function(small, m) - hilbert_function(big, m)
    return total
