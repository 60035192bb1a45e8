"""Acceptance criteria; each test records one PASS/FAIL line in the summary."""

import random

import pytest

from gindepth.criteria import (
    artinian_section,
    depth_from_gin,
    coefficient_comparison,
    prime_obstruction_scan,
    section_depth_pipeline,
)
from gindepth.groebner import PolynomialIdeal, apply_change_ideal, gin, initial_ideal
from gindepth.hilbert import hilbert_function, series_of_monomial_quotient
from gindepth.identities import check_projection_commutes, check_section_formula
from gindepth.monomial import Monomial
from gindepth.monomial_ideal import MonomialIdeal, is_borel_type, pure_power_variables
from gindepth.parse import parse_ideal
from gindepth.polynomial import Polynomial, random_change
from strategies import F, random_borel_ideal, random_monomial_ideal

CORPUS_PRIMES = ["hyperplane", "cubic", "quartic", "quintic", "quintic_acm", "rnc4", "cusp",
                 "plane_d2", "plane_d3", "plane_d4", "plane_d5"]


def load(corpus, name):
    return parse_ideal((corpus / f"{name}.ideal").read_text()).ideal


@pytest.mark.criterion(1)
def test_worked_example_obstruction(corpus, acceptance):
    J = parse_ideal((corpus / "borel_obstructed.ideal").read_text()).monomial_ideal()
    assert J == MonomialIdeal(4, [(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)])
    rep = prime_obstruction_scan(J)
    r2 = rep.checks[1]
    passed = (
        rep.borel
        and r2.r == 2
        and r2.hypothesis_holds
        and r2.u == Monomial((1, 0))
        and r2.conclusion1 is False
        and rep.verdict == "obstructed"
        and rep.obstructed_at == 2
        and "cannot be the initial ideal or generic initial ideal of any prime" in rep.reason
    )
    acceptance(passed, f"verdict={rep.verdict}({rep.obstructed_at}) u={r2.u} conclusion1={r2.conclusion1}")
    assert passed


@pytest.mark.criterion(2)
def test_depth_jump_on_rational_quartic(corpus, acceptance):
    rep = section_depth_pipeline(load(corpus, "quartic"), 2, seed=7)
    passed = (
        rep.e_P[0] == 4
        and rep.e_Ps[0] == 5
        and rep.criterion_triggered
        and rep.depth_claim == 1
        and rep.gin_depth_crosscheck == 1
    )
    acceptance(passed, f"e0(S/P)={rep.e_P[0]} e0(S(2)/P_2)={rep.e_Ps[0]} "
                       f"depth_claim={rep.depth_claim} gin depth={rep.gin_depth_crosscheck}")
    assert passed


@pytest.mark.criterion(3)
def test_no_jump_on_twisted_cubic(corpus, acceptance):
    P = load(corpus, "cubic")
    reps = [section_depth_pipeline(P, s) for s in (1, 2)]
    passed = (
        all(r.part1_holds and not r.criterion_triggered and r.depth_claim is None for r in reps)
        and all(r.e_P[0] == r.e_Ps[0] == 3 for r in reps)
        and reps[0].e_P == reps[0].e_Ps == (3, 2)
        and all(r.gin_depth_crosscheck == 2 for r in reps)
    )
    acceptance(passed, "; ".join(f"s={r.s} e_P={list(r.e_P)} e_Ps={list(r.e_Ps)} "
                                 f"triggered={r.criterion_triggered}" for r in reps))
    assert passed


@pytest.mark.criterion(4)
def test_plane_curve_gins(acceptance):
    failures = []
    x1, x2, x3 = (Polynomial.variable(3, i, F) for i in (1, 2, 3))
    for d in range(2, 6):
        I = PolynomialIdeal(3, [x1 ** d - x2 ** (d - 1) * x3])
        for seed in (0, 100, 200):
            g = gin(I, trials=3, seed=seed)
            if g.gin != MonomialIdeal(3, [(d, 0, 0)]) or not g.agreed:
                failures.append((d, seed, str(g.gin), g.agreed))
    acceptance(not failures, f"d=2..5 x 3 seeds x 3 trials, failures={failures}")
    assert not failures


@pytest.mark.criterion(5)
def test_hilbert_oracle_equivalence(acceptance):
    rng = random.Random(20240501)
    mismatches = 0
    for _ in range(200):
        J = random_monomial_ideal(rng, n_max=4, max_degree=4)
        series = series_of_monomial_quotient(J).expansion(8)
        mismatches += sum(series[m] != hilbert_function(J, m) for m in range(9))
    acceptance(mismatches == 0, f"200 ideals, degrees 0..8, mismatches={mismatches}")
    assert mismatches == 0


@pytest.mark.criterion(6)
def test_coefficient_comparison_suite(acceptance):
    rng = random.Random(20240502)
    cases = failures = nonzero_rank = 0
    for _ in range(200):
        J = random_borel_ideal(rng, n_max=4, max_degree=4)
        assert is_borel_type(J)
        d = series_of_monomial_quotient(J).dim
        for r in range(J.ambient - d, J.ambient + 1):
            rec = coefficient_comparison(J, r)
            cases += 1
            nonzero_rank += rec.rank > 0
            if not (rec.statement1 and rec.statement2 and rec.difference_holds):
                failures += 1
    acceptance(failures == 0, f"200 Borel-type ideals, {cases} (J, r) cases "
                                f"({nonzero_rank} with nonzero rank), failures={failures}")
    assert failures == 0


@pytest.mark.criterion(7)
def test_gin_structure_on_corpus(corpus, acceptance):
    problems = []
    for name in CORPUS_PRIMES:
        J = gin(load(corpus, name)).gin
        c = J.ambient - series_of_monomial_quotient(J).dim
        if not is_borel_type(J):
            problems.append(f"{name}: not Borel")
        if pure_power_variables(J) != tuple(range(1, c + 1)):
            problems.append(f"{name}: pure powers {pure_power_variables(J)} for c={c}")
        if not prime_obstruction_scan(J).consistent:
            problems.append(f"{name}: obstructed")
    identity_checks = 0
    for name in ("cubic", "quartic"):
        I = load(corpus, name)
        for s in (1, 2):
            for seed in (0, 1, 2):
                for check in (check_projection_commutes(I, s, seed), check_section_formula(I, s, seed)):
                    identity_checks += 1
                    if not check.holds:
                        problems.append(f"{name}: {check.name} s={s} seed={seed}")
    acceptance(not problems, f"{len(CORPUS_PRIMES)} primes, {identity_checks} identity checks, "
                             f"problems={problems}")
    assert not problems


@pytest.mark.criterion(8)
def test_series_invariance_under_changes(corpus, acceptance):
    I = load(corpus, "cubic")
    numerators = {
        series_of_monomial_quotient(initial_ideal(apply_change_ideal(I, random_change(4, seed)))).numerator
        for seed in range(1, 21)
    }
    passed = len(numerators) == 1
    acceptance(passed, f"20 changes, distinct numerators={sorted(numerators)}")
    assert passed


@pytest.mark.criterion(9)
def test_artinian_section_trigger(corpus, acceptance):
    cubic_gin = gin(load(corpus, "cubic")).gin
    quartic_gin = gin(load(corpus, "quartic")).gin
    cubic, quartic = artinian_section(cubic_gin), artinian_section(quartic_gin)
    passed = (
        quartic.jump_is_one
        and quartic.almost_cm_claim is True
        and depth_from_gin(quartic_gin) == quartic.d - 1
        and not cubic.jump_is_one
        and depth_from_gin(cubic_gin) == cubic.d
        and not cubic.violations
        and not quartic.violations
    )
    acceptance(passed, f"cubic degrees {cubic.deg_SJ}/{cubic.deg_artinian} rank {cubic.rank}; "
                       f"quartic degrees {quartic.deg_SJ}/{quartic.deg_artinian} rank {quartic.rank}")
    assert passed
