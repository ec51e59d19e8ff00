import json

import pytest

from capelli.identities import (PROPOSITIONS, ResourceLimitExceeded, capelli_C, capelli_X,
                                degenerate_check, estimate_terms, first_difference, rhs_operator,
                                symbol_generator_check, verify_classical_capelli, verify_proposition,
                                verify_theorem)
from capelli.pbw import invariance_check
from capelli.weil import CaseConfig, h_basis, k_basis, omega_set
from capelli.weyl import WeylElement

C111, C211, C221 = CaseConfig.C(1, 1, 1), CaseConfig.C(2, 1, 1), CaseConfig.C(2, 2, 1)
R11, H11 = CaseConfig.R(1, 1), CaseConfig.H(1, 1)


def gens(cfg):
    return omega_set(cfg).g_structure


def test_small_capelli_elements():
    G = gens(C111)
    assert capelli_X("C2", C111, 1) == G.gen(0, 0, 0) + G.gen(1, 0, 0)
    assert capelli_X("R2", R11, 1) == gens(R11).gen(0, 0, 0).scale(2)
    GH = gens(H11)
    assert capelli_X("H2", H11, 1) == (GH.gen(0, 0, 0) + GH.gen(0, 1, 1)).scale(2)


def test_small_right_hand_sides():
    x, dx = WeylElement.x(2, 0), WeylElement.d(2, 0)
    y, dy = WeylElement.x(2, 1), WeylElement.d(2, 1)
    assert rhs_operator("C1", C111, 1) == x * dx + dy * y
    X, D = WeylElement.x(1, 0), WeylElement.d(1, 0)
    assert rhs_operator("R1", R11, 1) == X * D + D * X == X * D.scale(2) + 1


def test_c1_shift_readings_cancel_when_p_equals_q():
    assert capelli_C("C1", C111, 1, "m/2") == capelli_C("C1", C111, 1, "n/2")


@pytest.mark.parametrize("theorem,cfg,d", [("C1", C111, 1), ("C2", C211, 2), ("H1", H11, 1),
                                           ("R1", CaseConfig.R(2, 1), 2), ("R2", CaseConfig.R(2, 2), 2),
                                           ("H2", CaseConfig.H(1, 2), 1)])
def test_verify_examples(theorem, cfg, d):
    rep = verify_theorem(theorem, cfg, d)
    assert rep.equal, rep.to_json()
    assert rep.first_difference is None
    assert all(v for k, v in rep.checks.items() if k != "estimate" and "informative" not in k
               and "[n/2]" not in k and "[linear]" not in k)


def test_shift_reading_recorded():
    rep = verify_theorem("C1", C221, 1)
    assert rep.equal
    assert rep.variant["passing"] == ["m/2"]
    forced = verify_theorem("C1", C221, 1, shift="n/2")
    assert not forced.equal and forced.first_difference is not None


def test_h2_denominator_reading():
    rep = verify_theorem("H2", H11, 2)
    assert rep.variant["passing"] == ["factorial"]
    assert not verify_theorem("H2", H11, 2, denominator="linear").equal


def test_h1_splitting_reading():
    rep = verify_theorem("H1", H11, 2)
    assert rep.equal and rep.variant["passing"] == ["distinct"]


@pytest.mark.parametrize("prop", PROPOSITIONS)
@pytest.mark.parametrize("cfg,d", [(C211, 1), (C211, 2), (C221, 2)], ids=["C211-1", "C211-2", "C221-2"])
def test_propositions(prop, cfg, d):
    rep = verify_proposition(prop, cfg, d)
    assert rep.equal, rep.checks


def test_right_half_off_diagonal_pairs():
    rep = verify_proposition("PropC1Right", C211, 1)
    assert rep.equal
    assert any("I=(0,) J=(1,)" in k for k in rep.checks)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classical(n):
    rep = verify_classical_capelli(n)
    assert rep.equal and all(rep.checks.values())


def test_classical_refuses_large():
    with pytest.raises(ResourceLimitExceeded):
        verify_classical_capelli(5)


@pytest.mark.parametrize("theorem,cfg", [("C1", C211), ("C2", C221), ("R1", CaseConfig.R(2, 1)),
                                         ("R2", CaseConfig.R(3, 1)), ("H1", H11), ("H2", CaseConfig.H(2, 1))])
def test_x_invariant_under_k(theorem, cfg):
    for d in (1, 2) if cfg.case != "H" or cfg.m == 1 else (1,):
        assert invariance_check(capelli_X(theorem, cfg, d), k_basis(cfg))


def test_c_invariant_under_h():
    for th in ("C1", "C2"):
        for d in (1, 2):
            assert invariance_check(capelli_C(th, C221, d, "m/2"), h_basis(C221))


def test_non_invariant_element_detected():
    G = gens(C211)
    assert not invariance_check(G.gen(0, 0, 1), k_basis(C211))


@pytest.mark.parametrize("cfg,dmax", [(C211, 2), (CaseConfig.R(2, 1), 2), (H11, 1)],
                         ids=lambda v: v.label() if hasattr(v, "label") else str(v))
def test_symbols(cfg, dmax):
    rep = symbol_generator_check(cfg, dmax)
    assert rep["ok"], rep["checks"]


@pytest.mark.parametrize("theorem,cfg", [("C1", C111), ("C2", C111), ("R1", R11), ("R2", CaseConfig.R(1, 2))])
def test_degenerate_above_rank(theorem, cfg):
    assert degenerate_check(theorem, cfg, cfg.m + 1)


def test_resource_refusal():
    big = CaseConfig.C(9, 9, 9)
    assert estimate_terms("C1", big, 9) > 10 ** 7
    with pytest.raises(ResourceLimitExceeded) as info:
        verify_theorem("C1", big, 9)
    assert info.value.estimate > info.value.limit


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv("CAPELLI_TERM_LIMIT", "10")
    with pytest.raises(ResourceLimitExceeded):
        verify_theorem("C1", C211, 2)


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify_theorem("R1", C211, 1)
    with pytest.raises(ValueError):
        verify_theorem("C1", C211, 0)
    with pytest.raises(ValueError):
        verify_theorem("Z9", C211, 1)


def test_first_difference_and_report_schema():
    a, b = WeylElement.x(1, 0), WeylElement.d(1, 0)
    diff = first_difference(a, b)
    assert set(diff) == {"monomial", "lhs", "rhs"}
    rep = verify_theorem("C1", C211, 1).to_json()
    assert set(rep) == {"theorem", "case", "params", "d", "equal", "lhsTerms", "rhsTerms",
                        "firstDifference", "variant", "checks", "elapsedMs"}
    json.dumps(rep)
