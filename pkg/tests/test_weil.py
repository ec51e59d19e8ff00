from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli.pbw import ue_commutator
from capelli.weil import CaseConfig, build_omega, h_basis, k_basis, omega_hom, verify_homomorphism
from capelli.weyl import WeylElement, commutator

HALF = Fraction(1, 2)


def test_sizes_and_validation():
    assert CaseConfig.R(2, 3).nvars == 6
    assert CaseConfig.C(2, 1, 2).nvars == 6
    assert CaseConfig.H(2, 3).nvars == 12
    for bad in (lambda: CaseConfig.R(0, 1), lambda: CaseConfig.C(1, 0, 1), lambda: CaseConfig("Q", 1, 1)):
        with pytest.raises(ValueError):
            bad()


def test_real_one_by_one():
    om = build_omega(CaseConfig.R(1, 1))
    x, d = WeylElement.x(1, 0), WeylElement.d(1, 0)
    assert om.g_images[0] == x * d + HALF


def test_complex_one_by_one():
    cfg = CaseConfig.C(1, 1, 1)
    om = build_omega(cfg)
    x, dx, y, dy = (WeylElement.x(2, 0), WeylElement.d(2, 0), WeylElement.x(2, 1), WeylElement.d(2, 1))
    st_ = om.g_structure
    assert om.g_images[st_.index(0, 0, 0)] == x * dx + HALF
    assert om.g_images[st_.index(1, 0, 0)] == y * dy + HALF


def test_quaternionic_diag_block():
    om = build_omega(CaseConfig.H(1, 1))
    N = 2
    expected = WeylElement.x(N, 0) * WeylElement.d(N, 0) + WeylElement.x(N, 1) * WeylElement.d(N, 1) + 1
    label, image = om.m_complex[0]
    assert label == ("diag", 0, 0)
    assert image.re == expected and image.im.is_zero()


def test_omega_unital_and_monomial():
    cfg = CaseConfig.R(2, 1)
    om = build_omega(cfg)
    G = om.g_structure
    assert omega_hom(om, G.one()) == WeylElement.one(cfg.nvars)
    e12, e21 = G.gen(0, 0, 1), G.gen(0, 1, 0)
    assert omega_hom(om, e12 * e21) == om.g_images[G.index(0, 0, 1)] * om.g_images[G.index(0, 1, 0)]


@pytest.mark.parametrize("cfg", [CaseConfig.C(1, 1, 1), CaseConfig.C(2, 1, 1), CaseConfig.C(2, 2, 1),
                                 CaseConfig.C(3, 1, 1), CaseConfig.R(1, 1), CaseConfig.R(2, 1),
                                 CaseConfig.R(2, 2), CaseConfig.R(3, 1), CaseConfig.H(1, 1),
                                 CaseConfig.H(1, 2), CaseConfig.H(2, 1)], ids=lambda c: c.label())
def test_homomorphism(cfg):
    rep = verify_homomorphism(cfg)
    assert rep["ok"], rep["failures"]
    assert rep["checks"] and all(rep["checks"].values())


def test_real_sp_sign_note_recorded():
    rep = verify_homomorphism(CaseConfig.R(1, 1))
    assert rep["ok"]
    assert rep["notes"] == {"literal -e-e matrices satisfy relations": False}


@pytest.mark.parametrize("cfg", [CaseConfig.C(2, 1, 1), CaseConfig.R(2, 2), CaseConfig.H(1, 1)],
                         ids=lambda c: c.label())
def test_k_basis_dimension(cfg):
    m = cfg.m
    dim = {"C": m * m, "R": m * (m - 1) // 2, "H": m * (2 * m + 1)}[cfg.case]
    assert len(k_basis(cfg)) == dim


def test_h_basis_case_c():
    cfg = CaseConfig.C(2, 2, 1)
    assert len(h_basis(cfg)) == 2 * 2 + 1 * 1


@st.composite
def degree_one(draw, structure):
    total = structure.zero()
    for g in range(structure.ngens):
        c = draw(st.integers(-2, 2))
        if c:
            total = total + structure.gen(*structure.generators[g]).scale(c)
    return total


@pytest.mark.parametrize("cfg", [CaseConfig.C(2, 1, 1), CaseConfig.R(2, 2), CaseConfig.H(1, 2)],
                         ids=lambda c: c.label())
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_bracket_preserved(cfg, data):
    om = build_omega(cfg)
    a = data.draw(degree_one(om.g_structure))
    b = data.draw(degree_one(om.g_structure))
    assert omega_hom(om, ue_commutator(a, b)) == commutator(omega_hom(om, a), omega_hom(om, b))
    assert omega_hom(om, a * b) == omega_hom(om, a) * omega_hom(om, b)
