from __future__ import annotations

import pytest

from anngraph.analysis import RingAnalysis, audit
from anngraph.ring import algebra_presentation, make_algebra
from anngraph.theorems import (
    CHECKERS,
    check_ag_structure,
    check_conjecture_0_1,
    check_cor_2_11,
    check_cor_2_12,
    check_cor_2_4,
    check_cor_2_5,
    check_ex_2_6,
    check_lemma_1_5,
    check_lemma_1_8,
    check_lemma_2_9,
    check_prop_1_1,
    check_prop_2_1,
    check_prop_2_2,
    check_thm_1_2,
    check_thm_1_3,
    check_thm_1_4,
    check_thm_1_6,
    check_thm_1_9,
    check_thm_2_14_consistency,
    check_thm_2_3,
    diameter_cases,
    run_checks,
)

from conftest import prod, zn


def ctx(r):
    return RingAnalysis(r)


def test_prop_1_1_examples(an_ctx):
    v = check_prop_1_1(ctx(zn(4)))
    assert v.status == "pass" and v.witness == {"gamma_diameter": 0, "ag_diameter": 0}
    assert check_prop_1_1(an_ctx).status == "pass"
    v = check_prop_1_1(ctx(prod(2, 4)))
    assert v.status == "pass" and v.witness["ag_diameter"] == 3
    assert check_prop_1_1(ctx(zn(7))).status == "inapplicable"


def test_diameter_trichotomy_examples():
    c = ctx(prod(2, 3))
    assert not c.zr_is_ideal and c.ag_diameter == 1 and c.is_two_field_product
    for check in (check_thm_1_2, check_thm_1_3, check_thm_1_4):
        assert check(c).status == "pass"
    c = ctx(prod(2, 4))
    assert c.ag_diameter == 3 and not c.reduced
    assert check_thm_1_4(c).status == "pass"
    c = ctx(prod(2, 3, 5))
    assert c.ag_diameter == 3 and len(c.min_primes) == 3
    assert check_thm_1_3(c).status == "pass"


def test_diam_two_branch_is_vacuous_on_finite_rings():
    v = check_thm_1_2(ctx(prod(2, 3)))
    assert v.status == "pass" and any("vacuous" in n for n in v.notes)


def test_z12_zero_divisors_not_an_ideal():
    # 2 and 3 are zero divisors, 2 + 3 = 5 is a unit
    c = ctx(zn(12))
    assert not c.zr_is_ideal
    assert check_thm_1_4(c).status == "pass"


def test_zr_ideal_makes_thm_1_4_inapplicable():
    assert check_thm_1_4(ctx(zn(8))).status == "inapplicable"


def test_lemma_1_5_and_thm_1_6():
    assert check_lemma_1_5(ctx(zn(16))).status == "pass"
    v = check_thm_1_6(ctx(prod(2, 4)))
    assert v.status == "pass" and v.witness["pairs"] > 0 and v.witness["ag_diameter"] == 3
    assert check_thm_1_6(ctx(prod(2, 3))).status == "inapplicable"
    v = check_thm_1_6(ctx(zn(8)))
    assert v.status == "pass" and "vacuous" in v.notes[0]


def test_lemma_1_8():
    assert check_lemma_1_8(ctx(zn(12))).status == "inapplicable"
    v = check_lemma_1_8(ctx(prod(2, 3, 5)))
    assert v.status == "pass" and v.witness["ag_diameter"] == 3


def test_thm_1_9_cases():
    c = ctx(zn(8))
    cases = diameter_cases(c)
    assert cases["case2"] and not cases["case3"] and c.ag_diameter == 1
    # both literal conditions hold for Z8, so the overlap is reported
    v = check_thm_1_9(c)
    assert v.status == "pass" and any("overlap" in n for n in v.notes)
    assert check_thm_1_9(ctx(zn(4))).witness["cases"] == [1]
    assert check_thm_1_9(ctx(zn(16))).witness["cases"] == [3]
    assert check_thm_1_9(ctx(prod(2, 4))).witness["cases"] == [4]
    assert check_thm_1_9(ctx(prod(2, 3))).witness["cases"] == [2]


def test_prop_2_1_reports_the_missing_ideal():
    v = check_prop_2_1()
    checks = v.witness["checks"]
    assert checks["order_32"] and checks["clique_witness_valid"]
    assert checks["ag_clique_4"] and checks["ag_chi_4"]
    assert checks["gamma_clique_4"] and checks["gamma_chi_5"]
    assert not checks["nonzero_proper_count_15"]
    assert v.status == "fail"
    assert v.witness["unlisted_ideals"] == ["(y+z, x+z)"]
    assert check_prop_2_1(ctx(zn(32))).status == "inapplicable"


def test_unlisted_ideal_is_really_an_ideal(an_ring):
    from anngraph.ideals import ideal_from_generators
    from anngraph.oracles import brute_force_ideals

    r = an_ring
    i = ideal_from_generators(r, [r.element("x+y"), r.element("x+z")])
    assert {r.label(int(a)) for a in i.members} == {
        "0", "2", "x+y", "x+y+2", "x+z", "x+z+2", "y+z", "y+z+2"
    }
    assert frozenset(int(a) for a in i.members) in brute_force_ideals(r)


def test_coloring_examples():
    v = check_prop_2_2(ctx(zn(9)))
    assert v.status == "pass" and v.witness["ag_chi"] == 1
    c = ctx(zn(16))
    assert check_thm_2_3(c).status == "pass"
    v = check_cor_2_4(c)
    assert v.status == "pass" and v.witness["local"] and v.witness["star"]
    v = check_cor_2_5(ctx(prod(2, 3)))
    assert v.status == "pass" and v.witness["gamma_chi_2"]
    assert check_cor_2_5(ctx(zn(4))).status == "inapplicable"


def test_thm_2_3_fails_on_z12():
    v = check_thm_2_3(ctx(zn(12)))
    assert v.status == "fail"
    assert v.witness["chi_2"] and v.witness["bipartite"]
    assert not v.witness["complete_bipartite"] and not v.witness["structure"]
    assert check_cor_2_4(ctx(zn(12))).status == "fail"


def test_example_2_6():
    for p in (2, 3, 5):
        v = check_ex_2_6(ctx(zn(p**3)))
        assert v.status == "pass" and v.witness["ag_chi"] == 2 and v.witness["gamma_chi_lower"] >= p
    assert check_ex_2_6(ctx(zn(16))).status == "inapplicable"


def test_reduced_ring_colorings():
    v = check_cor_2_11(ctx(prod(2, 3, 5)))
    assert v.status == "pass" and v.witness == {"ag_chi": 3, "ag_clique": 3, "minimal_primes": 3}
    v = check_cor_2_12(ctx(prod(2, 2)))
    assert v.status == "pass" and v.witness == {"ag_chi": 2, "gamma_chi": 2}
    v = check_cor_2_11(ctx(zn(6)))
    assert v.witness["ag_chi"] == v.witness["ag_clique"] == 2
    assert check_cor_2_11(ctx(zn(7))).status == "inapplicable"
    assert check_cor_2_12(ctx(zn(8))).status == "inapplicable"


def test_lemma_2_9():
    for r in (zn(12), prod(2, 3, 5), prod(2, 4)):
        assert check_lemma_2_9(ctx(r)).status == "pass"


def test_thm_2_14_records(an_ctx):
    v = check_thm_2_14_consistency(ctx(zn(16)))
    assert v.witness["ag_clique"] == 2
    assert v.witness["square_zero_submodule_counts"] == {"(0)": 1, "(8)": 2, "(4)": 3}
    assert check_thm_2_14_consistency(an_ctx).witness["ag_clique"] == 4
    assert check_thm_2_14_consistency(ctx(prod(2, 3))).witness["square_zero_submodule_counts"] == {"(0)": 1}


def test_conjecture_and_structure(an_ctx):
    v = check_conjecture_0_1(an_ctx)
    assert v.status == "pass" and v.witness == {"ag_chi": 4, "ag_clique": 4}
    assert check_ag_structure(an_ctx).status == "pass"


def test_inexact_chi_gives_inconclusive(an_ring):
    full = RingAnalysis(an_ring)
    c = RingAnalysis(an_ring, node_budget=1)
    # starve only the coloring search; the clique searches get their exact answers
    c.ag_clique, c.gamma_clique = full.ag_clique, full.gamma_clique
    assert not c.gamma_chromatic.exact
    v = check_prop_2_1(c)
    assert v.status == "inconclusive"
    assert v.witness["chi_bounds"][0] == 4


def test_fields_are_inapplicable():
    f4 = make_algebra(algebra_presentation("F4", 2, [("a", 2)], {("a", "a"): "1 + a"}))
    c = ctx(f4)
    graph_checks = ["prop-1.1", "prop-2.2", "thm-2.3", "cor-2.4", "cor-2.11", "cor-2.12", "conj-0.1", "thm-1.9"]
    for t in graph_checks:
        assert CHECKERS[t](c).status == "inapplicable", t


def test_every_fail_carries_a_witness(corpus64):
    for _, r in corpus64.rings():
        for v in run_checks(ctx(r)):
            if v.status == "fail":
                assert v.witness


def test_run_checks_rejects_unknown():
    with pytest.raises(KeyError):
        run_checks(ctx(zn(4)), ["thm-9.9"])


def test_audit_on_samples(an_ctx):
    audit(an_ctx)
    for r in (zn(12), zn(64), prod(2, 4), prod(2, 3, 5)):
        audit(ctx(r))
