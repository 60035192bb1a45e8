"""Buchberger's algorithm in grevlex, initial ideals and Monte-Carlo generic
initial ideals.

Inside this module polynomials are dicts keyed by rkeys (see ``_pykernels``);
``Polynomial`` is used at the boundary only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import kernels
from .errors import DimensionError, GinUnstable
from .field import default_field
from .monomial_ideal import MonomialIdeal, is_borel_type
from .polynomial import (
    LinearChange,
    Polynomial,
    chain_images,
    random_change,
    substitute,
)


def to_rkey(e: tuple) -> tuple:
    return (-sum(e),) + e[::-1]


def from_rkey(k: tuple) -> tuple:
    return k[:0:-1]


def _rdict(f: Polynomial) -> dict:
    return {to_rkey(e): c for e, c in f.items()}


def _from_rdict(n, F, d) -> Polynomial:
    return Polynomial._from_dict(n, F, {from_rkey(k): c for k, c in d.items()})


def _rlcm(a: tuple, b: tuple) -> tuple:
    body = tuple(max(x, y) for x, y in zip(a[1:], b[1:]))
    return (-sum(body),) + body


def _rdivides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a[1:], b[1:]))


def _rcoprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a[1:], b[1:]))


@dataclass(frozen=True)
class PolynomialIdeal:
    """An ideal of S(n) given by nonzero generators."""

    n: int
    generators: tuple[Polynomial, ...]
    field: object = dc_field(default=None)

    def __init__(self, n: int, generators: Sequence[Polynomial] = (), field=None):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.n != n:
                raise DimensionError(f"generator {g} not in {n} variables")
        if field is None:
            field = gens[0].field if gens else default_field()
        for g in gens:
            if g.field != field:
                raise ValueError("generators over different fields")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "field", field)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def map(self, fn, n: int | None = None) -> PolynomialIdeal:
        return PolynomialIdeal(self.n if n is None else n, [fn(g) for g in self.generators], self.field)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _monic_rdict(d: dict, F) -> dict:
    lead = min(d)
    inv = F.inv(d[lead])
    return {k: F.mul(inv, c) for k, c in d.items()}


def _tail(d: dict):
    lead = min(d)
    return lead, [(k, c) for k, c in d.items() if k != lead]


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f on division by G (full reduction)."""
    if not G:
        raise ValueError("normal_form needs a nonempty divisor list")
    F = f.field
    red = kernels.make_reducer(F)
    for g in G:
        if g.n != f.n:
            raise DimensionError("divisors in a different ring")
        if g.is_zero():
            continue
        lead, tail = _tail(_monic_rdict(_rdict(g), F))
        red.add(lead, tail)
    if not len(red):
        return f
    return _from_rdict(f.n, F, red.normal_form(_rdict(f)))


def _spoly_tail(li, ti, lj, tj, F) -> dict:
    """S-polynomial of two monic elements (leading terms cancel)."""
    lcm = _rlcm(li, lj)
    qi = [a - b for a, b in zip(lcm, li)]
    qj = [a - b for a, b in zip(lcm, lj)]
    d: dict = {}
    for k, c in ti:
        m = tuple([a + b for a, b in zip(k, qi)])
        d[m] = F.add(d.get(m, F.zero), c)
    for k, c in tj:
        m = tuple([a + b for a, b in zip(k, qj)])
        d[m] = F.sub(d.get(m, F.zero), c)
    return {k: c for k, c in d.items() if c}


def _update(leads, pairs, new_index):
    """Gebauer-Moeller pair update for a new basis element."""
    lf = leads[new_index]
    kept = set()
    for (i, j) in pairs:
        lij = _rlcm(leads[i], leads[j])
        if (
            not _rdivides(lf, lij)
            or lij == _rlcm(leads[i], lf)
            or lij == _rlcm(leads[j], lf)
        ):
            kept.add((i, j))
    by_lcm: dict[tuple, list[int]] = {}
    for i in range(new_index):
        if leads[i] is None:
            continue
        by_lcm.setdefault(_rlcm(leads[i], lf), []).append(i)
    minimal = []
    # ascending rkey order = descending grevlex; sort by degree so divisors come first
    for L in sorted(by_lcm, key=lambda k: (-k[0], k)):
        if all(not _rdivides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        group = by_lcm[L]
        if any(_rcoprime(leads[i], lf) for i in group):
            continue  # product criterion
        kept.add((min(group), new_index))
    return kept


def buchberger(I: PolynomialIdeal) -> list[Polynomial]:
    """Reduced Groebner basis of I in grevlex, sorted by leading monomial (largest first)."""
    F, n = I.field, I.n
    leads: list[tuple] = []
    tails: list[list] = []
    red = kernels.make_reducer(F)
    pairs: set = set()

    def insert(d):
        nonlocal pairs
        d = _monic_rdict(d, F)
        lead, tail = _tail(d)
        leads.append(lead)
        tails.append(tail)
        red.add(lead, tail)
        pairs = _update(leads, pairs, len(leads) - 1)

    for g in I.generators:
        d = red.normal_form(_rdict(g)) if len(red) else _rdict(g)
        if d:
            insert(d)
    while pairs:
        # normal strategy: smallest lcm first
        i, j = min(pairs, key=lambda p: (_lcm_sort_key(leads, p), p))
        pairs.discard((i, j))
        s = _spoly_tail(leads[i], tails[i], leads[j], tails[j], F)
        if not s:
            continue
        r = red.normal_form(s)
        if r:
            insert(r)
    return _reduce_basis(n, F, leads, tails)


def _lcm_sort_key(leads, p):
    L = _rlcm(leads[p[0]], leads[p[1]])
    return (-L[0], L)


def _reduce_basis(n, F, leads, tails) -> list[Polynomial]:
    # minimal basis: drop elements whose lead is divisible by another lead
    order = sorted(range(len(leads)), key=lambda k: (-leads[k][0], leads[k]))
    chosen: list[int] = []
    for k in order:
        if not any(_rdivides(leads[c], leads[k]) for c in chosen):
            chosen.append(k)
    out = []
    for k in chosen:
        others = kernels.make_reducer(F)
        for c in chosen:
            if c != k:
                others.add(leads[c], tails[c])
        tail = others.normal_form(dict(tails[k])) if len(others) else dict(tails[k])
        tail[leads[k]] = F.one
        out.append(_from_rdict(n, F, tail))
    out.sort(key=lambda g: to_rkey(g.items()[0][0]))
    return out


def initial_ideal(I: PolynomialIdeal) -> MonomialIdeal:
    if not I.generators:
        return MonomialIdeal.zero(I.n)
    return MonomialIdeal(I.n, [g.items()[0][0] for g in buchberger(I)])


def reduced_basis_and_initial(I: PolynomialIdeal) -> tuple[list[Polynomial], MonomialIdeal]:
    if not I.generators:
        return [], MonomialIdeal.zero(I.n)
    G = buchberger(I)
    return G, MonomialIdeal(I.n, [g.items()[0][0] for g in G])


def apply_change_ideal(I: PolynomialIdeal, A: LinearChange) -> PolynomialIdeal:
    images = A.images()
    return I.map(lambda g: substitute(g, images, I.n))


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    trials: int
    seeds: tuple[int, ...]
    agreed: bool
    borel: bool
    votes: tuple[int, ...] = ()


def gin(I: PolynomialIdeal, trials: int = 3, seed: int = 0) -> GinResult:
    """Generic initial ideal by random changes of coordinates seeded seed+1..seed+trials."""
    if trials < 2:
        raise ValueError("gin needs at least 2 trials")
    seeds = tuple(seed + t for t in range(1, trials + 1))
    results = []
    for s in seeds:
        A = random_change(I.n, s, I.field)
        results.append(initial_ideal(apply_change_ideal(I, A)))
    counts = Counter(results)
    best, votes = counts.most_common(1)[0]
    if votes == 1 and len(results) > 1:
        raise GinUnstable("gin unstable — increase trials or field size")
    return GinResult(
        gin=best,
        trials=trials,
        seeds=seeds,
        agreed=votes == trials,
        borel=is_borel_type(best),
        votes=tuple(counts[r] for r in results),
    )


def saturate_by_last_variable(I: PolynomialIdeal) -> PolynomialIdeal:
    """I : x_n^infinity from a grevlex basis by dividing out powers of x_n."""
    G = buchberger(I) if I.generators else []
    out = []
    for g in G:
        k = min(e[-1] for e, _ in g.items())
        if k:
            g = Polynomial._from_dict(
                g.n, g.field, {e[:-1] + (e[-1] - k,): c for e, c in g.items()}
            )
        out.append(g)
    return PolynomialIdeal(I.n, out, I.field)


def saturate_ideal(I: PolynomialIdeal, seed: int = 0) -> PolynomialIdeal:
    """I^sat for homogeneous I, by saturating along a random last coordinate."""
    if I.n == 0 or not I.generators:
        return I
    A = random_change(I.n, seed, I.field)
    J = saturate_by_last_variable(apply_change_ideal(I, A))
    return apply_change_ideal(J, A.inverse())


def project_ideal(I: PolynomialIdeal, forms) -> PolynomialIdeal:
    """Image of the generators under Pi_{l_1...l_s}."""
    if not forms:
        return I
    images = chain_images(I.n, forms, I.field)
    target = I.n - len(forms)
    return PolynomialIdeal(target, [substitute(g, images, target) for g in I.generators], I.field)


def section_ideal(I: PolynomialIdeal, forms, seed: int = 0) -> PolynomialIdeal:
    """The ideal I_s of the section with s hyperplanes: saturate after each projection."""
    cur = I
    images = None  # images of x_1..x_n in the current ring
    for stage, l in enumerate(forms, start=1):
        lp = l.to_polynomial() if hasattr(l, "to_polynomial") else l
        lbar = lp if images is None else substitute(lp, images, cur.n)
        step = chain_images(cur.n, [lbar], I.field)
        cur = PolynomialIdeal(
            cur.n - 1, [substitute(g, step, cur.n - 1) for g in cur.generators], I.field
        )
        cur = saturate_ideal(cur, seed + stage)
        images = step if images is None else [substitute(img, step, cur.n) for img in images]
    return cur
