from fractions import Fraction
from itertools import permutations
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli.nclinalg import (NcMatrix, bcomb, col_det, col_det_param, comb, det_pq, inversion_count,
                              multiset_factorial, multiset_splittings, per, per_param, splittings,
                              submatrix, sym_det, sym_det_param, sym_per)
from capelli.weyl import WeylElement

a, b, c, d = sympy.symbols("a b c d", commutative=False)
u1, u2, b1, b2 = sympy.symbols("u1 u2 b1 b2")
M = NcMatrix([[a, b], [c, d]])


def same(x, y):
    return sympy.expand(x - y) == 0


def test_index_helpers():
    assert comb(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert bcomb(2, 2) == [(0, 0), (0, 1), (1, 1)]
    assert inversion_count((0, 2), (1, 3)) == 1
    assert inversion_count((1,), (0,)) == 1
    assert inversion_count((0, 1), ()) == 0
    with pytest.raises(ValueError):
        inversion_count((0, 1), (1,))
    assert multiset_factorial((0, 0, 1)) == 2
    assert multiset_factorial((0, 1, 2)) == 1
    assert multiset_factorial((1, 1, 1)) == 6
    assert len(splittings((0, 1, 2), 1)) == 3
    assert len(multiset_splittings((0, 0, 1), 1)) == 2


def test_submatrix():
    A = NcMatrix.build(3, 3, lambda i, j: 10 * i + j)
    assert submatrix(A, (0, 2), (1, 2)).entries == ((1, 2), (21, 22))
    assert submatrix(NcMatrix([[a]]), (0, 0), (0, 0)).entries == ((a, a), (a, a))
    assert submatrix(A, range(3), range(3)).entries == A.entries
    with pytest.raises(IndexError):
        submatrix(A, (3,), (0,))


def test_col_det_keeps_column_order():
    assert same(col_det_param(M, (u1, u2)), (a + u1) * (d + u2) - c * b)


def test_col_det_weyl():
    x, dx = WeylElement.x(1, 0), WeylElement.d(1, 0)
    z = WeylElement.zero(1)
    assert col_det(NcMatrix([[dx, z], [z, x]])) == x * dx + 1


def test_sym_det_examples():
    assert same(sym_det(M), (a * d + d * a - b * c - c * b) / 2)
    assert same(sym_det_param(NcMatrix([[a]]), (5,)), a + 5)


def test_det_pq_example():
    B = NcMatrix([[b1, 0], [0, b2]])
    got = det_pq(B, (0, 1), (0, 1), (1, 0), 1, 1)
    assert same(got, ((b1 + 1) * b2 + (b2 - 1) * b1) / 2)


def test_det_pq_collapses():
    assert same(det_pq(M, (0, 1), (0, 1), (0, 0), 1, 1), sym_det(M))
    assert same(det_pq(M, (0, 1), (0, 1), (u1, u2), 2, 0), sym_det_param(M, (u1, u2)))


def test_permanent_examples():
    assert per(NcMatrix([[1, 2], [3, 4]])) == 10
    assert same(per_param(NcMatrix([[a]]), (0, 0), (0, 0)), 2 * a * a)
    assert same(sym_per(M), (a * d + d * a + b * c + c * b) / 2)
    assert same(sym_per(NcMatrix([[a]])), a)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        col_det_param(M, rows=(0, 1), cols=(0,))
    with pytest.raises(ValueError):
        col_det_param(M, u=(1,))


small = st.integers(-4, 4)
mat3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


def brute_det(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inv * prod(rows[i][p[i]] for i in range(n))
    return total


def brute_per(rows):
    n = len(rows)
    return sum(prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


@settings(max_examples=50, deadline=None)
@given(mat3)
def test_commutative_det_and_per(rows):
    A = NcMatrix(rows)
    assert col_det(A) == brute_det(rows)
    assert sym_det(A) == brute_det(rows)
    assert per(A) == brute_per(rows)
    assert sym_per(A) == brute_per(rows)


@settings(max_examples=50, deadline=None)
@given(mat3, small)
def test_column_linearity(rows, k):
    A = NcMatrix(rows)
    scaled = NcMatrix([[r[0] * k] + r[1:] for r in rows])
    assert col_det(scaled) == k * col_det(A)


@settings(max_examples=40, deadline=None)
@given(mat3, mat3)
def test_cauchy_binet_square(r1, r2):
    A, B = NcMatrix(r1), NcMatrix(r2)
    assert col_det(A @ B) == col_det(A) * col_det(B)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=2),
       st.lists(st.lists(small, min_size=2, max_size=2), min_size=3, max_size=3))
def test_cauchy_binet_rectangular(r1, r2):
    A, B = NcMatrix(r1), NcMatrix(r2)
    rhs = sum(col_det_param(A, rows=(0, 1), cols=S) * col_det_param(B, rows=S, cols=(0, 1))
              for S in comb(3, 2))
    assert col_det(A @ B) == rhs


@settings(max_examples=40, deadline=None)
@given(mat3)
def test_laplace_first_row(rows):
    A = NcMatrix(rows)
    expansion = sum((-1) ** j * rows[0][j] * col_det_param(A, rows=(1, 2), cols=tuple(k for k in range(3) if k != j))
                    for j in range(3))
    assert col_det(A) == expansion


def brute_sym_det(rows, u):
    # definition with position-attached parameters, entries commuting
    n = len(rows)
    total = Fraction(0)
    for s in permutations(range(n)):
        for t in permutations(range(n)):
            sign = brute_det([[1 if s[i] == j else 0 for j in range(n)] for i in range(n)]) * \
                brute_det([[1 if t[i] == j else 0 for j in range(n)] for i in range(n)])
            total += sign * prod(rows[s[k]][t[k]] + (u[k] if s[k] == t[k] else 0) for k in range(n))
    return total / prod(range(1, n + 1))


fracs = st.lists(st.fractions(-3, 3, max_denominator=3), min_size=3, max_size=3)


@settings(max_examples=40, deadline=None)
@given(mat3, fracs)
def test_parameters(rows, u):
    A = NcMatrix(rows)
    shifted = [[rows[i][j] + (u[j] if i == j else 0) for j in range(3)] for i in range(3)]
    # column determinant: u_k sits on column k
    assert col_det_param(A, u) == brute_det(shifted)
    assert sym_det_param(A, u) == brute_sym_det(rows, u)
    # a constant parameter is a plain diagonal shift
    cshift = [[rows[i][j] + (u[0] if i == j else 0) for j in range(3)] for i in range(3)]
    assert sym_det_param(A, (u[0],) * 3) == brute_det(cshift)
