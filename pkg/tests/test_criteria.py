import random

import pytest

from gindepth.criteria import (
    CONSISTENT,
    NO_R_APPLICABLE,
    OBSTRUCTED,
    artinian_section,
    codim_from_pure_powers,
    depth_from_gin,
    general_forms,
    height1_check,
    coefficient_comparison,
    prime_obstruction_scan,
    regularity_from_gin,
    obstruction_check,
    section_depth_pipeline,
)
from gindepth.errors import ContractError
from gindepth.groebner import PolynomialIdeal, gin
from gindepth.hilbert import series_of_monomial_quotient
from gindepth.monomial import Monomial
from gindepth.monomial_ideal import MonomialIdeal
from gindepth.parse import parse_ideal
from gindepth.polynomial import Polynomial, chain_images
from strategies import F, random_borel_ideal

OBSTRUCTED_J = MonomialIdeal(4, [(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)])
# satisfies the depth/regularity formulas; not the gin of any corpus curve
A = MonomialIdeal(4, [(2, 0, 0, 0), (1, 1, 0, 0), (0, 3, 0, 0)])
PRIMES = ["hyperplane", "cubic", "quartic", "quintic", "quintic_acm", "rnc4", "cusp",
          "plane_d2", "plane_d3", "plane_d4", "plane_d5"]


def load(corpus, name):
    return parse_ideal((corpus / f"{name}.ideal").read_text()).ideal


def test_obstruction_on_worked_example():
    c = obstruction_check(OBSTRUCTED_J, 2)
    assert c.hypothesis_holds and c.u == Monomial((1, 0))
    assert c.conclusion1 is False and c.violated
    assert {str(m) for m in c.extra_generators} == {"x1*x3", "x1*x4"}


def test_obstruction_hypothesis_failures():
    assert not obstruction_check(A, 2).hypothesis_holds
    c = obstruction_check(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)]), 2)
    assert not c.hypothesis_holds and not c.violated
    with pytest.raises(ContractError):
        obstruction_check(OBSTRUCTED_J, 4)


def test_scan_examples():
    rep = prime_obstruction_scan(OBSTRUCTED_J)
    assert rep.verdict == OBSTRUCTED and rep.obstructed_at == 2 and not rep.consistent
    assert "cannot be the initial ideal or generic initial ideal of any prime" in rep.reason
    for n in (3, 4):
        rep = prime_obstruction_scan(MonomialIdeal(n, [(3,) + (0,) * (n - 1)]))
        assert rep.consistent and rep.verdict in (CONSISTENT, NO_R_APPLICABLE)
    rep = prime_obstruction_scan(MonomialIdeal(2, [(0, 1)]))
    assert rep.verdict == OBSTRUCTED and not rep.borel and "Borel" in rep.reason


def test_depth_and_regularity_formulas():
    assert depth_from_gin(A) == 2 and regularity_from_gin(A) == 2
    assert depth_from_gin(MonomialIdeal(3, [(1, 0, 0)])) == 2
    assert depth_from_gin(OBSTRUCTED_J) == 0
    assert regularity_from_gin(MonomialIdeal(3, [(1, 0, 0)])) == 0
    assert regularity_from_gin(MonomialIdeal(3, [(3, 0, 0)])) == 2
    for bad in (MonomialIdeal.zero(3), MonomialIdeal.unit(3), MonomialIdeal(2, [(0, 1)])):
        with pytest.raises(ContractError):
            depth_from_gin(bad)


def test_pipeline_on_cubic(corpus):
    for s in (1, 2):
        rep = section_depth_pipeline(load(corpus, "cubic"), s)
        assert rep.part1_holds and not rep.criterion_triggered
        assert rep.depth_claim is None and rep.gin_depth_crosscheck == 2
        assert rep.e_P[0] == rep.e_Ps[0] == 3
    assert section_depth_pipeline(load(corpus, "cubic"), 1).e_P == (3, 2)


def test_pipeline_on_quartic(corpus):
    rep = section_depth_pipeline(load(corpus, "quartic"), 2, seed=7)
    assert (rep.e_P[0], rep.e_Ps[0]) == (4, 5)
    assert rep.criterion_triggered and rep.depth_claim == 1 == rep.gin_depth_crosscheck
    assert rep.ok


def test_pipeline_on_hyperplane(corpus):
    rep = section_depth_pipeline(load(corpus, "hyperplane"), 1)
    assert rep.e_P[0] == rep.e_Ps[0] == 1
    assert not rep.criterion_triggered and rep.gin_depth_crosscheck == 2


def test_pipeline_contracts(corpus):
    with pytest.raises(ContractError):
        section_depth_pipeline(load(corpus, "cubic"), 3)
    x1 = Polynomial.variable(2, 1, F)
    with pytest.raises(ContractError):
        section_depth_pipeline(PolynomialIdeal(2, [x1 ** 2 + x1]), 1)


def test_general_forms_define_a_chain():
    forms = general_forms(4, 2, 5, F)
    assert len(forms) == 2 and chain_images(4, forms, F)
    assert forms == general_forms(4, 2, 5, F)


@pytest.mark.parametrize("name", PRIMES)
def test_soundness_and_part1_on_primes(corpus, name):
    P = load(corpus, name)
    g = gin(P)
    assert g.borel and prime_obstruction_scan(g.gin).consistent
    d = P.n - codim_from_pure_powers(g.gin)
    for s in range(1, d + 1):
        rep = section_depth_pipeline(P, s)
        assert rep.part1_holds, (name, s)
        if rep.criterion_triggered:
            assert rep.depth_claim == rep.gin_depth_crosscheck


def test_coefficient_comparison_examples():
    rec = coefficient_comparison(OBSTRUCTED_J, 2)
    assert rec.k == 0 and rec.e_J[0] == 2 and rec.e_J1[0] == 3 and rec.rank == 1 and rec.holds
    rec = coefficient_comparison(MonomialIdeal(3, [(2, 0, 0)]), 2)
    assert rec.holds and rec.rank == 0 and rec.J1 == rec.J2
    with pytest.raises(ContractError):
        coefficient_comparison(OBSTRUCTED_J, 1)


def test_coefficient_comparison_on_seeded_borel_ideals():
    rng = random.Random(3)
    for _ in range(30):
        J = random_borel_ideal(rng)
        d = series_of_monomial_quotient(J).dim
        for r in range(J.ambient - d, J.ambient + 1):
            assert coefficient_comparison(J, r).holds, (J, r)


def test_height1():
    assert height1_check(MonomialIdeal(3, [(3, 0, 0)]))
    assert not height1_check(MonomialIdeal(3, [(1, 1, 0)]))
    assert not height1_check(MonomialIdeal(3, [(2, 0, 0), (0, 3, 0)]))
    with pytest.raises(ContractError):
        height1_check(MonomialIdeal(2, [(1, 0)]))


def test_height1_for_plane_curves(corpus):
    for d in range(2, 6):
        assert height1_check(gin(load(corpus, f"plane_d{d}")).gin)


def test_artinian_section_pair(corpus):
    quartic = artinian_section(gin(load(corpus, "quartic")).gin)
    assert (quartic.deg_SJ, quartic.deg_artinian) == (4, 5)
    assert quartic.jump_is_one and quartic.almost_cm_claim and quartic.depth == 1
    assert not quartic.violations
    cubic = artinian_section(gin(load(corpus, "cubic")).gin)
    assert (cubic.deg_SJ, cubic.deg_artinian) == (3, 3)
    assert not cubic.jump_is_one and cubic.almost_cm_claim is None and cubic.depth == 2


def test_artinian_section_small_cases():
    rep = artinian_section(MonomialIdeal(3, [(1, 0, 0)]))
    assert (rep.deg_SJ, rep.deg_artinian, rep.jump_is_one) == (1, 1, False)
    rep = artinian_section(A)
    assert (rep.deg_SJ, rep.deg_artinian, rep.rank) == (4, 4, 0)


def test_rank_two_gap_does_not_trigger(corpus):
    # depth-one quintic: the degree gap is two, so the rank-one trigger stays off
    rep = artinian_section(gin(load(corpus, "quintic")).gin)
    assert rep.rank == 2 and not rep.jump_is_one and rep.depth == 1
