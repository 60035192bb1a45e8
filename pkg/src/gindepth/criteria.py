"""Decision procedures built on generic initial ideals.

* obstruction to being the (generic) initial ideal of a homogeneous prime,
* depth and regularity read off a gin,
* depth from a jump in Hilbert coefficients under general hyperplane sections,
* verification of the rank identity relating J, J_1 and J_2,
* height-one gins and the artinian-section test.

Primality of inputs is never checked; every verdict is conditional on it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ContractError, DegenerateSampler, ProjectionUndefined
from .groebner import PolynomialIdeal, gin as compute_gin, initial_ideal, project_ideal
from .hilbert import (
    hilbert_function,
    rank_quotient,
    series_of_monomial_quotient,
)
from .monomial import Monomial
from .monomial_ideal import (
    MonomialIdeal,
    bar_phi,
    big_phi,
    big_pi,
    contains,
    is_borel_type,
    max_variable_index,
    pure_power_variables,
    restrict_extend,
    socle_membership,
)
from .polynomial import chain_images, random_linear_form

NO_R_APPLICABLE = "no_r_applicable"
CONSISTENT = "consistent"
OBSTRUCTED = "obstructed"


@dataclass(frozen=True)
class RCheck:
    """Outcome of the obstruction test at one r."""

    r: int
    hypothesis_holds: bool
    u: Monomial | None = None
    conclusion1: bool | None = None
    conclusion2: bool | None = None
    conclusion3: bool | None = None
    extra_generators: tuple[Monomial, ...] = ()
    reason: str = ""

    @property
    def violated(self) -> bool:
        return self.hypothesis_holds and not (
            self.conclusion1 and self.conclusion2 and self.conclusion3
        )


@dataclass(frozen=True)
class ObstructionReport:
    ambient: int
    borel: bool
    checks: tuple[RCheck, ...]
    verdict: str
    obstructed_at: int | None = None
    reason: str = ""

    @property
    def consistent(self) -> bool:
        """True unless some r obstructs (includes the no-r-applicable case)."""
        return self.verdict != OBSTRUCTED


def obstruction_check(J: MonomialIdeal, r: int) -> RCheck:
    """Test the hypothesis bar Phi_r(J) = Pi_r(J) + (u), u in Pi_r(J) : m(r), and
    if it holds evaluate the three structural conclusions."""
    n = J.ambient
    if not is_borel_type(J):
        raise ContractError("obstruction_check needs a Borel-type ideal")
    if not 1 <= r <= n - 1:
        raise ContractError(f"r={r} outside 1..{n - 1}")
    K = big_pi(J, r)
    B = bar_phi(J, r)
    if B == K:
        return RCheck(r, False, reason="bar Phi_r(J) = Pi_r(J)")
    outside = [e for e in B.exps if not contains(K, e)]
    if len(outside) != 1:
        return RCheck(r, False, reason=f"{len(outside)} generators of bar Phi_r(J) outside Pi_r(J)")
    ue = outside[0]
    if not socle_membership(ue, K):
        return RCheck(r, False, u=Monomial(ue), reason="u is not in Pi_r(J) : m(r)")

    u = Monomial(ue)
    extras = tuple(Monomial(e) for e in J.exps if any(e[r:]))
    if u.is_one:
        c1 = all(contains(J, Monomial.var(n, i)) for i in range(1, r + 1)) or len(extras) == 1
        c2 = c3 = True
    else:
        c1 = len(extras) == 1

        def is_u_times_power(v):
            e = v.exponents
            return e[:r] == ue and e[r] > 0 and not any(e[r + 1:])

        c2 = all(is_u_times_power(v) for v in extras)
        c3 = max_variable_index(J) <= r + 1
    return RCheck(r, True, u=u, conclusion1=c1, conclusion2=c2, conclusion3=c3, extra_generators=extras)


def prime_obstruction_scan(J: MonomialIdeal) -> ObstructionReport:
    """Run the obstruction test at every r = 1..n-1."""
    n = J.ambient
    if not is_borel_type(J):
        return ObstructionReport(
            n, False, (), OBSTRUCTED, None, "not of Borel type; gin is always of Borel type"
        )
    checks = tuple(obstruction_check(J, r) for r in range(1, n))
    bad = [c.r for c in checks if c.violated]
    if bad:
        r = min(bad)
        return ObstructionReport(
            n, True, checks, OBSTRUCTED, r,
            f"violates the structure conclusions at r={r}; cannot be the initial ideal "
            "or generic initial ideal of any prime ideal",
        )
    if any(c.hypothesis_holds for c in checks):
        return ObstructionReport(n, True, checks, CONSISTENT)
    return ObstructionReport(n, True, checks, NO_R_APPLICABLE)


def _check_gin_like(J: MonomialIdeal):
    if J.is_zero() or J.is_unit():
        raise ContractError("zero and unit ideals have no depth/regularity reading")
    if not is_borel_type(J):
        raise ContractError("expected a Borel-type ideal")


def depth_from_gin(J: MonomialIdeal) -> int:
    """n - max{i : x_i divides a minimal generator}."""
    _check_gin_like(J)
    return J.ambient - max_variable_index(J)


def regularity_from_gin(J: MonomialIdeal) -> int:
    """Max generator degree minus one (a characteristic-zero formula)."""
    _check_gin_like(J)
    return J.max_degree() - 1


def codim_from_pure_powers(J: MonomialIdeal) -> int:
    """c such that J holds pure powers of exactly x_1..x_c."""
    pure = pure_power_variables(J)
    c = len(pure)
    if pure != tuple(range(1, c + 1)):
        raise ContractError(f"pure powers of {pure} are not an initial segment x_1..x_c")
    return c


@dataclass(frozen=True)
class DepthReport:
    n: int
    s: int
    r: int
    d: int
    seed: int
    gin_seeds: tuple[int, ...]
    gin: MonomialIdeal
    section_initial: MonomialIdeal
    e_P: tuple[int, ...]
    e_Ps: tuple[int, ...]
    part1_holds: bool
    criterion_triggered: bool
    depth_claim: int | None
    gin_depth_crosscheck: int
    regularity: int
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        """Part 1 held and the two depth routes agree."""
        return self.part1_holds and (
            self.depth_claim is None or self.depth_claim == self.gin_depth_crosscheck
        )


def general_forms(n: int, s: int, seed: int, field):
    """s seeded random linear forms for which Pi_{l_1...l_s} is defined."""
    rng = random.Random(f"forms:{seed}")
    for _ in range(64):
        forms = [random_linear_form(n, rng, field) for _ in range(s)]
        try:
            chain_images(n, forms, field)
        except ProjectionUndefined:
            continue
        return forms
    raise DegenerateSampler("degenerate sampler: no well-defined projection chain")


def _require_homogeneous(P: PolynomialIdeal):
    if not P.is_homogeneous():
        raise ContractError("generators must be homogeneous")


def section_depth_pipeline(P: PolynomialIdeal, s: int, seed: int = 0, trials: int = 3) -> DepthReport:
    """Compare e_i(S/P) with e_i(S(r)/P_s) for s general linear forms; a jump of
    -(-1)^(d-s) in e_{d-s} certifies depth(S/P) = s - 1."""
    _require_homogeneous(P)
    warnings = []
    g = compute_gin(P, trials=trials, seed=seed)
    J = g.gin
    if not g.agreed:
        warnings.append("gin trials disagreed; majority value used")
    if not g.borel:
        warnings.append("gin sample is not of Borel type; bad sample, re-seed")
    if J.is_unit():
        raise ContractError("P is the unit ideal")
    n = P.n
    d = n - codim_from_pure_powers(J)
    if not 1 <= s <= d:
        raise ContractError(f"s={s} out of range 1..{d}")
    r = n - s
    forms = general_forms(n, s, seed, P.field)
    Ps = project_ideal(P, forms)
    in_Ps = initial_ideal(Ps)

    hs_P = series_of_monomial_quotient(J)
    hs_Ps = series_of_monomial_quotient(in_Ps)
    if hs_P.dim != d:
        warnings.append(f"Hilbert dimension {hs_P.dim} differs from pure-power dimension {d}")
    if hs_Ps.dim != d - s:
        warnings.append(f"section has dimension {hs_Ps.dim}, expected {d - s}")
    k = d - s
    e_P = hs_P.coefficients(k).values
    e_Ps = hs_Ps.coefficients(k).values
    part1 = e_P[:k] == e_Ps[:k]
    if not part1:
        warnings.append("input likely not prime, or sample not general — re-seed")
    triggered = e_P[k] == e_Ps[k] - (-1) ** k
    claim = s - 1 if triggered else None
    cross = depth_from_gin(J)
    if claim is not None and claim != cross:
        warnings.append(f"depth claim {claim} disagrees with gin depth {cross}")
    return DepthReport(
        n=n, s=s, r=r, d=d, seed=seed, gin_seeds=g.seeds, gin=J, section_initial=in_Ps,
        e_P=tuple(e_P), e_Ps=tuple(e_Ps), part1_holds=part1, criterion_triggered=triggered,
        depth_claim=claim, gin_depth_crosscheck=cross, regularity=regularity_from_gin(J),
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class CoefficientComparison:
    n: int
    r: int
    d: int
    k: int
    J1: MonomialIdeal
    J2: MonomialIdeal
    e_J: tuple[int, ...]
    e_J1: tuple[int, ...]
    e_J2: tuple[int, ...]
    dims: tuple[int, int, int]
    rank: int
    statement1: bool
    statement2: bool
    difference_holds: bool
    additivity_holds: bool

    @property
    def holds(self) -> bool:
        return self.statement1 and self.statement2 and self.difference_holds and self.additivity_holds


def _count_between(small: MonomialIdeal, big: MonomialIdeal, m: int) -> int:
    """Monomials of degree m in big but not in small."""
    return hilbert_function(small, m) - hilbert_function(big, m)


def coefficient_comparison(J: MonomialIdeal, r: int, additivity_degree: int | None = None) -> CoefficientComparison:
    """Check e_i(S/J) = e_i(S/J_2) for i <= k, e_i(S/J) = e_i(S/J_1) for i < k and
    e_k(S/J_1) - e_k(S/J) = (-1)^k rank(J_2/J_1), where k = r + d - n."""
    if not is_borel_type(J):
        raise ContractError("coefficient_comparison needs a Borel-type ideal")
    n = J.ambient
    hs = series_of_monomial_quotient(J)
    d = hs.dim
    if d < 0:
        raise ContractError("unit ideal")
    if r < n - d or r > n:
        raise ContractError(f"r={r} outside {n - d}..{n}")
    k = r + d - n
    J1 = restrict_extend(J, r)
    J2 = big_phi(J, r)
    hs1 = series_of_monomial_quotient(J1)
    hs2 = series_of_monomial_quotient(J2)
    e = hs.coefficients(k).values
    e1 = hs1.coefficients(k).values
    e2 = hs2.coefficients(k).values
    rank = rank_quotient(J, r)
    st1 = hs2.dim == d and e[: k + 1] == e2[: k + 1]
    st2 = hs1.dim == d and e[:k] == e1[:k]
    diff = hs1.dim == d and e1[k] - e[k] == (-1) ** k * rank
    # h(S/J_1) - h(S/J_2) must count the monomials of J_2 outside J_1
    upto = additivity_degree if additivity_degree is not None else max(
        J.max_degree() + 2, len(hs1.numerator) + 1
    )
    series_gap = [a - b for a, b in zip(hs1.expansion(upto), hs2.expansion(upto))]
    add = all(series_gap[m] == _count_between(J1, J2, m) for m in range(upto + 1))
    return CoefficientComparison(
        n=n, r=r, d=d, k=k, J1=J1, J2=J2, e_J=tuple(e), e_J1=tuple(e1), e_J2=tuple(e2),
        dims=(d, hs1.dim, hs2.dim), rank=rank, statement1=st1, statement2=st2,
        difference_holds=diff, additivity_holds=add,
    )


def height1_check(J: MonomialIdeal) -> bool:
    """Whether J = (x_1^e), the only possible gin of a height-one prime."""
    if J.ambient < 3:
        raise ContractError("height1_check needs n >= 3")
    if len(J.exps) != 1:
        return False
    e = J.exps[0]
    return e[0] > 0 and not any(e[1:])


@dataclass(frozen=True)
class SectionReport:
    c: int
    d: int
    deg_SJ: int
    deg_artinian: int
    rank: int
    jump_is_one: bool
    generators_in_c_plus_1_vars: bool
    x_c_plus_1_occurs: bool
    depth: int
    almost_cm_claim: bool | None
    violations: tuple[str, ...] = ()


def artinian_section(J: MonomialIdeal) -> SectionReport:
    """Degree of S/Phi_c(J) against the length of S(c)/Pi_c(J) for c = n - d.

    The jump is decided by rank(J_2/J_1) = 1 at r = c; the degree gap equals
    that rank, which is recorded as a consistency violation if it fails.
    """
    if not is_borel_type(J):
        raise ContractError("artinian_section needs a Borel-type ideal")
    n = J.ambient
    c = codim_from_pure_powers(J)
    d = n - c
    if d < 1:
        raise ContractError("S/J is artinian (d = 0)")
    deg_SJ = series_of_monomial_quotient(big_phi(J, c)).multiplicity
    deg_art = series_of_monomial_quotient(big_pi(J, c)).multiplicity
    rank = rank_quotient(J, c)
    jump = rank == 1
    top = max_variable_index(J)
    in_c1 = top <= c + 1
    occurs = top == c + 1
    depth = depth_from_gin(J)
    violations = []
    if deg_art - deg_SJ != rank:
        violations.append(f"degree gap {deg_art - deg_SJ} differs from rank {rank}")
    claim = None
    if jump:
        if not in_c1:
            violations.append("a generator involves a variable beyond x_(c+1)")
        if not occurs:
            violations.append("x_(c+1) does not occur in any minimal generator")
        if depth != d - 1:
            violations.append(f"depth {depth} differs from d-1 = {d - 1}")
        claim = in_c1 and occurs and depth == d - 1
    return SectionReport(
        c=c, d=d, deg_SJ=deg_SJ, deg_artinian=deg_art, rank=rank, jump_is_one=jump,
        generators_in_c_plus_1_vars=in_c1, x_c_plus_1_occurs=occurs, depth=depth,
        almost_cm_claim=claim, violations=tuple(violations),
    )
