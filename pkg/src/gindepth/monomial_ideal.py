"""Monomial ideals with canonical minimal generators, and the projection /
saturation calculus phi_i, Phi_r, Pi_r and bar Phi_r.

Variable indices are 1-based everywhere in the public API.
"""

from __future__ import annotations

from typing import Iterable

from . import kernels
from .errors import DimensionError
from .monomial import Monomial, desc_key, format_exps


class MonomialIdeal:
    """A monomial ideal in ``ambient`` variables.

    ``gens`` is the minimal generating set sorted grevlex-descending. The unit
    ideal has the single generator 1, the zero ideal no generators.
    """

    __slots__ = ("ambient", "_exps")

    def __init__(self, ambient: int, monomials: Iterable = ()):
        exps = []
        for m in monomials:
            e = m.exponents if isinstance(m, Monomial) else tuple(int(x) for x in m)
            if len(e) != ambient:
                raise DimensionError(f"monomial {format_exps(e)} not in {ambient} variables")
            if any(x < 0 for x in e):
                raise ValueError("exponents must be nonnegative")
            exps.append(e)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(
            self, "_exps", tuple(sorted(kernels.minimalize(exps), key=desc_key))
        )

    @classmethod
    def _trusted(cls, ambient, exps) -> MonomialIdeal:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "ambient", ambient)
        object.__setattr__(obj, "_exps", tuple(sorted(kernels.minimalize(exps), key=desc_key)))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, n) -> MonomialIdeal:
        return cls(n)

    @classmethod
    def unit(cls, n) -> MonomialIdeal:
        return cls(n, [(0,) * n])

    @classmethod
    def maximal(cls, n) -> MonomialIdeal:
        return cls(n, [Monomial.var(n, i) for i in range(1, n + 1)])

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(e) for e in self._exps)

    @property
    def exps(self) -> tuple[tuple[int, ...], ...]:
        return self._exps

    def is_zero(self) -> bool:
        return not self._exps

    def is_unit(self) -> bool:
        return bool(self._exps) and sum(self._exps[0]) == 0 and len(self._exps) == 1

    def max_degree(self) -> int:
        return max((sum(e) for e in self._exps), default=0)

    def contains(self, u) -> bool:
        return contains(self, u)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ambient(self, other)
        return MonomialIdeal._trusted(self.ambient, self._exps + other._exps)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ambient(self, other)
        return MonomialIdeal._trusted(
            self.ambient,
            [tuple(a + b for a, b in zip(u, v)) for u in self._exps for v in other._exps],
        )

    def __le__(self, other: MonomialIdeal) -> bool:
        """Ideal containment."""
        _same_ambient(self, other)
        return all(contains(other, e) for e in self._exps)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ambient == other.ambient
            and self._exps == other._exps
        )

    def __hash__(self):
        return hash((self.ambient, self._exps))

    def __repr__(self):
        return f"MonomialIdeal({self.ambient}, [{', '.join(format_exps(e) for e in self._exps)}])"

    def __str__(self):
        if not self._exps:
            return "(0)"
        return "(" + ", ".join(format_exps(e) for e in self._exps) + ")"


def _same_ambient(a: MonomialIdeal, b: MonomialIdeal):
    if a.ambient != b.ambient:
        raise DimensionError(f"ideals in {a.ambient} and {b.ambient} variables")


def _exps_of(u, n) -> tuple:
    e = u.exponents if isinstance(u, Monomial) else tuple(u)
    if len(e) != n:
        raise DimensionError(f"monomial in {len(e)} variables, ideal in {n}")
    return e


def _check_index(J: MonomialIdeal, i: int):
    if not 1 <= i <= J.ambient:
        raise DimensionError(f"variable index {i} outside 1..{J.ambient}")


def _check_r(J: MonomialIdeal, r: int):
    if not 0 <= r <= J.ambient:
        raise DimensionError(f"r={r} outside 0..{J.ambient}")


def minimalize(ambient: int, monomials: Iterable) -> MonomialIdeal:
    return MonomialIdeal(ambient, monomials)


def contains(J: MonomialIdeal, u) -> bool:
    e = _exps_of(u, J.ambient)
    for g in J.exps:
        if all(a <= b for a, b in zip(g, e)):
            return True
    return False


def phi(J: MonomialIdeal, i: int) -> MonomialIdeal:
    """J : x_i^infinity, by deleting x_i from every generator."""
    _check_index(J, i)
    k = i - 1
    return MonomialIdeal._trusted(J.ambient, [e[:k] + (0,) + e[k + 1:] for e in J.exps])


def big_phi(J: MonomialIdeal, r: int) -> MonomialIdeal:
    """J : (x_{r+1} ... x_n)^infinity; the ambient stays n."""
    _check_r(J, r)
    n = J.ambient
    return MonomialIdeal._trusted(n, [e[:r] + (0,) * (n - r) for e in J.exps])


def big_pi(J: MonomialIdeal, r: int) -> MonomialIdeal:
    """Set x_{r+1}, ..., x_n to zero; the result lives in r variables."""
    _check_r(J, r)
    return MonomialIdeal._trusted(r, [e[:r] for e in J.exps if not any(e[r:])])


def bar_phi(J: MonomialIdeal, r: int) -> MonomialIdeal:
    """Pi_r(Phi_r(J)), an ideal in r variables."""
    _check_r(J, r)
    return MonomialIdeal._trusted(r, [e[:r] for e in J.exps])


def bar_phi_interleaved(J: MonomialIdeal, r: int) -> MonomialIdeal:
    """pi_{r+1} phi_{r+1} ... pi_n phi_n (J), evaluated step by step."""
    _check_r(J, r)
    K = J
    for i in range(J.ambient, r, -1):
        K = big_pi(phi(K, i), i - 1)
    return K


def extend(J: MonomialIdeal, n: int) -> MonomialIdeal:
    """The extension of J along k[x_1..x_m] -> k[x_1..x_n] for n >= m."""
    if n < J.ambient:
        raise DimensionError(f"cannot extend from {J.ambient} to {n} variables")
    pad = (0,) * (n - J.ambient)
    return MonomialIdeal._trusted(n, [e + pad for e in J.exps])


def restrict_extend(J: MonomialIdeal, r: int) -> MonomialIdeal:
    """(J cap k[x_1..x_r]) S, in the ambient of J."""
    return extend(big_pi(J, r), J.ambient)


def colon(J: MonomialIdeal, m) -> MonomialIdeal:
    """J : m for a single monomial m."""
    me = _exps_of(m, J.ambient)
    return MonomialIdeal._trusted(
        J.ambient, [tuple(max(a - b, 0) for a, b in zip(e, me)) for e in J.exps]
    )


def colon_saturation(J: MonomialIdeal, m) -> MonomialIdeal:
    """J : m^infinity, iterating J : m until it stabilises."""
    _exps_of(m, J.ambient)
    K = J
    while True:
        nxt = colon(K, m)
        if nxt == K:
            return K
        K = nxt


def intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(A, B)
    return MonomialIdeal._trusted(
        A.ambient, [tuple(max(a, b) for a, b in zip(u, v)) for u in A.exps for v in B.exps]
    )


def _var(n, i):
    return Monomial.var(n, i)


def saturate_general(J: MonomialIdeal) -> MonomialIdeal:
    """J : m^infinity as the intersection of the J : x_i^infinity."""
    n = J.ambient
    if n == 0:
        return J
    K = colon_saturation(J, _var(n, 1))
    for i in range(2, n + 1):
        K = intersect(K, colon_saturation(J, _var(n, i)))
    return K


def saturate(J: MonomialIdeal) -> MonomialIdeal:
    """J^sat; for Borel-type J this is J : x_n^infinity."""
    if J.ambient == 0:
        return J
    if is_borel_type(J):
        return phi(J, J.ambient)
    return saturate_general(J)


def _in_after_saturating(J: MonomialIdeal, w: tuple, i: int) -> bool:
    """Whether x_i^s * w lies in J for some s >= 0."""
    for g in J.exps:
        if all(a <= b for k, (a, b) in enumerate(zip(g, w)) if k != i):
            return True
    return False


def is_borel_type(J: MonomialIdeal) -> bool:
    """For every generator u, x_j | u and i < j imply x_i^s u / x_j in J for some s."""
    for u in J.exps:
        for j, ej in enumerate(u):
            if not ej:
                continue
            w = u[:j] + (ej - 1,) + u[j + 1:]
            for i in range(j):
                if not _in_after_saturating(J, w, i):
                    return False
    return True


def is_borel_type_by_colons(J: MonomialIdeal) -> bool:
    """The colon form: J : (x_1..x_i)^infinity == J : x_i^infinity for every i."""
    n = J.ambient
    if n == 0:
        return True
    cols = [colon_saturation(J, _var(n, i)) for i in range(1, n + 1)]
    running = cols[0]
    for i in range(1, n):
        running = intersect(running, cols[i])
        if running != cols[i]:
            return False
    return True


def socle_membership(u, K: MonomialIdeal) -> bool:
    """u not in K, but x_i u in K for every variable of K's ring."""
    e = _exps_of(u, K.ambient)
    if contains(K, e):
        return False
    for i in range(K.ambient):
        if not contains(K, e[:i] + (e[i] + 1,) + e[i + 1:]):
            return False
    return True


def pure_power_variables(J: MonomialIdeal) -> tuple[int, ...]:
    """Indices i such that some power of x_i is a generator."""
    out = []
    for e in J.exps:
        nz = [k for k, x in enumerate(e) if x]
        if len(nz) == 1:
            out.append(nz[0] + 1)
    return tuple(sorted(out))


def max_variable_index(J: MonomialIdeal) -> int:
    best = 0
    for e in J.exps:
        for k in range(len(e) - 1, -1, -1):
            if e[k]:
                best = max(best, k + 1)
                break
    return best


def combinatorial_dimension(J: MonomialIdeal) -> int:
    """Size of the largest variable set avoided by the support of every generator
    (Krull dimension of S/J); -1 for the unit ideal."""
    from itertools import combinations

    n = J.ambient
    if J.is_unit():
        return -1
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(all(k in chosen for k, x in enumerate(e) if x) for e in J.exps):
                return size
    return -1
