from hypothesis import given, settings
from hypothesis import strategies as st

from capelli.pbw import GlStructure, invariance_check, ue_commutator, ue_mul

G2 = GlStructure((2,))
E = lambda i, j: G2.gen(0, i, j)  # noqa: E731


def test_e12_e21_straightening():
    lhs = ue_mul(E(0, 1), E(1, 0))
    rhs = ue_mul(E(1, 0), E(0, 1)) + E(0, 0) - E(1, 1)
    assert lhs == rhs
    # exactly one of the two products is already a PBW monomial
    assert len(ue_mul(E(0, 1), E(1, 0))) + len(ue_mul(E(1, 0), E(0, 1))) == 4


def test_square_is_monomial():
    sq = ue_mul(E(0, 0), E(0, 0))
    assert len(sq) == 1 and sq.degree() == 2


def test_root_vector_weight():
    assert ue_commutator(E(0, 0), E(0, 1)) == E(0, 1)


def test_cross_blocks_commute():
    G = GlStructure((2, 2))
    for s in range(2):
        for t in range(2):
            assert ue_commutator(G.gen(0, s, t), G.gen(1, t, s)).is_zero()


def test_invariance_examples():
    assert not invariance_check(E(0, 1), [E(0, 0)])
    casimir = sum((ue_mul(E(i, j), E(j, i)) for i in range(2) for j in range(2)), G2.zero())
    assert invariance_check(casimir, [E(i, j) for i in range(2) for j in range(2)])


def test_structure_mismatch():
    import pytest
    with pytest.raises(ValueError):
        ue_mul(E(0, 0), GlStructure((3,)).gen(0, 0, 0))


G3 = GlStructure((3,))
gen3 = st.tuples(st.integers(0, 2), st.integers(0, 2)).map(lambda ij: G3.gen(0, *ij))
coef = st.integers(-3, 3)


@st.composite
def elements(draw):
    total = G3.zero()
    for _ in range(draw(st.integers(1, 3))):
        word = G3.scalar(draw(coef))
        for g in draw(st.lists(gen3, max_size=2)):
            word = word * g
        total = total + word
    return total


@settings(max_examples=50, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=50, deadline=None)
@given(elements(), elements(), elements())
def test_jacobi(a, b, c):
    br = ue_commutator
    assert (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_generator_bracket_formula(i, j, k, l):
    expected = G3.zero()
    if j == k:
        expected = expected + G3.gen(0, i, l)
    if l == i:
        expected = expected - G3.gen(0, k, j)
    assert ue_commutator(G3.gen(0, i, j), G3.gen(0, k, l)) == expected
