"""Both-sides checks of the projection/saturation identities for gins.

Each check returns an ``IdentityCheck`` carrying the two computed sides, so
callers (tests, the ``verify`` command) can report exactly what differed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .criteria import general_forms, coefficient_comparison
from .groebner import (
    PolynomialIdeal,
    gin,
    project_ideal,
    saturate_ideal,
    section_ideal,
)
from .hilbert import series_of_monomial_quotient
from .monomial_ideal import (
    MonomialIdeal,
    bar_phi,
    big_pi,
    is_borel_type,
    phi,
    saturate,
    saturate_general,
)
from .monomial import Monomial
from .polynomial import Polynomial


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: dict
    holds: bool
    lhs: MonomialIdeal | None = None
    rhs: MonomialIdeal | None = None
    detail: str = ""


def truncate(P: PolynomialIdeal, k: int) -> PolynomialIdeal:
    """Generators of P intersected with m^k, for homogeneous P."""
    n, F = P.n, P.field
    out = []
    for g in P.generators:
        deg = g.degree()
        if deg >= k:
            out.append(g)
            continue
        for combo in combinations_with_replacement(range(n), k - deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(g * Polynomial.from_monomial(Monomial(e), F))
    return PolynomialIdeal(n, out, F)


def check_projection_commutes(I: PolynomialIdeal, s: int = 1, seed: int = 0, trials: int = 3) -> IdentityCheck:
    """gin(Pi_{l_1..l_s}(I)) == Pi_{n-s}(gin(I)) for general l's."""
    n = I.n
    lhs = gin(project_ideal(I, general_forms(n, s, seed, I.field)), trials, seed).gin
    rhs = big_pi(gin(I, trials, seed).gin, n - s)
    return IdentityCheck("gin commutes with general projection", {"s": s, "seed": seed},
                         lhs == rhs, lhs, rhs)


def check_saturation_commutes(I: PolynomialIdeal, seed: int = 0, trials: int = 3,
                              saturated: PolynomialIdeal | None = None) -> IdentityCheck:
    """gin(I^sat) == gin(I) : x_n^infinity == gin(I)^sat."""
    sat = saturated if saturated is not None else saturate_ideal(I, seed)
    lhs = gin(sat, trials, seed).gin
    J = gin(I, trials, seed).gin
    rhs = phi(J, I.n)
    holds = lhs == rhs and rhs == saturate_general(J)
    return IdentityCheck("gin commutes with saturation", {"seed": seed}, holds, lhs, rhs)


def sigma_pi_chain(J: MonomialIdeal, r: int, with_last_sigma: bool = True) -> MonomialIdeal:
    """sigma pi_{r+1} sigma pi_{r+2} ... sigma pi_n (J) with general saturation;
    ``with_last_sigma=False`` drops the outermost sigma."""
    K = J
    for i in range(J.ambient, r, -1):
        K = big_pi(K, i - 1)
        if i - 1 > r or with_last_sigma:
            K = saturate_general(K)
    return K


def check_section_formula(I: PolynomialIdeal, s: int = 1, seed: int = 0, trials: int = 3) -> IdentityCheck:
    """gin(I_s) == sigma pi_{r+1} ... sigma pi_n (gin(I))."""
    n = I.n
    forms = general_forms(n, s, seed, I.field)
    Is = section_ideal(I, forms, seed)
    lhs = gin(Is, trials, seed).gin
    rhs = sigma_pi_chain(gin(I, trials, seed).gin, n - s)
    return IdentityCheck("gin of the hyperplane section", {"s": s, "seed": seed},
                         lhs == rhs, lhs, rhs)


def check_interleaved_chain(J: MonomialIdeal) -> list[IdentityCheck]:
    """For saturated Borel-type J and every r:
    pi_{r+1} sigma ... sigma pi_n (J) == bar Phi_r(J) and
    sigma pi_{r+1} ... sigma pi_n (J) == phi_r(bar Phi_r(J))."""
    J = saturate(J)
    if not is_borel_type(J):
        return [IdentityCheck("Borel input", {}, False, J, None, "input is not of Borel type")]
    n = J.ambient
    out = []
    for r in range(n - 1, 0, -1):
        lhs1 = sigma_pi_chain(J, r, with_last_sigma=False)
        rhs1 = bar_phi(J, r)
        out.append(IdentityCheck("interleaved projection equals bar Phi", {"r": r},
                                 lhs1 == rhs1, lhs1, rhs1))
        lhs2 = sigma_pi_chain(J, r)
        rhs2 = phi(rhs1, r)
        out.append(IdentityCheck("saturated interleaving equals phi_r bar Phi", {"r": r},
                                 lhs2 == rhs2, lhs2, rhs2))
    return out


def check_coefficient_comparison(J: MonomialIdeal) -> list[IdentityCheck]:
    if not is_borel_type(J):
        return [IdentityCheck("Borel input", {}, False, J, None, "input is not of Borel type")]
    d = series_of_monomial_quotient(J).dim
    if d < 0:
        return []
    out = []
    for r in range(J.ambient - d, J.ambient + 1):
        rec = coefficient_comparison(J, r)
        out.append(IdentityCheck(
            "coefficient comparison for J, J_1, J_2", {"r": r}, rec.holds, rec.J1, rec.J2,
            f"k={rec.k} e(S/J)={rec.e_J} e(S/J_1)={rec.e_J1} e(S/J_2)={rec.e_J2} rank={rec.rank}",
        ))
    return out


def verify_polynomial_ideal(I: PolynomialIdeal, seed: int = 0, trials: int = 3) -> list[IdentityCheck]:
    """All identities on a homogeneous ideal and its gin."""
    J = gin(I, trials, seed).gin
    checks = []
    d = series_of_monomial_quotient(J).dim
    for s in range(1, min(2, max(d, 0)) + 1):
        checks.append(check_projection_commutes(I, s, seed, trials))
        checks.append(check_section_formula(I, s, seed, trials))
    checks.append(check_saturation_commutes(I, seed, trials))
    checks.extend(check_interleaved_chain(J))
    checks.extend(check_coefficient_comparison(J))
    return checks


def verify_monomial_ideal(J: MonomialIdeal) -> list[IdentityCheck]:
    checks = []
    if is_borel_type(J):
        checks.extend(check_interleaved_chain(J))
    checks.extend(check_coefficient_comparison(J))
    return checks
