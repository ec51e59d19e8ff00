"""Index combinatorics and determinants/permanents over non-commutative rings.

Any entry type works if it supports ``+``, ``-``, ``*`` among itself and
with int/Fraction scalars (WeylElement, UEnvElement, GrassmannElement,
CommutativePolynomial, plain Fractions, sympy expressions).  Products are
always formed left to right, so entry order is preserved.

Index sets are 0-based tuples: strictly increasing for ``comb``, weakly
increasing (multisets) for ``bcomb``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial, prod


def comb(m: int, d: int):
    """Strictly increasing ``d``-tuples from ``range(m)``, lexicographic."""
    return list(combinations(range(m), d))


def bcomb(m: int, d: int):
    """Weakly increasing ``d``-tuples from ``range(m)``, lexicographic."""
    return list(combinations_with_replacement(range(m), d))


def inversion_count(s1, s2) -> int:
    """Inversions of the concatenation ``(s1, s2)`` of two disjoint sorted sets."""
    if set(s1) & set(s2):
        raise ValueError(f"index sets {s1} and {s2} overlap")
    return sum(1 for a in s1 for b in s2 if a > b)


def multiset_factorial(s) -> int:
    return prod(factorial(t) for t in Counter(s).values())


def splittings(s, size):
    """Ways to write the sorted set ``s`` as ``s1 + s2`` with ``len(s1) == size``."""
    out = []
    for s1 in combinations(s, size):
        rest = list(s)
        for a in s1:
            rest.remove(a)
        out.append((s1, tuple(rest)))
    return out


def multiset_splittings(s, size):
    """Distinct multiset decompositions ``s = s1 ∪ s2`` with ``len(s1) == size``."""
    seen = []
    for s1 in combinations(s, size):
        if s1 in (a for a, _ in seen):
            continue
        rest = list(s)
        for a in s1:
            rest.remove(a)
        seen.append((s1, tuple(rest)))
    return seen


@lru_cache(maxsize=None)
def signed_permutations(d: int):
    """``((perm, sign), ...)`` for the symmetric group on ``range(d)``."""
    out = []
    for p in permutations(range(d)):
        inv = sum(1 for a in range(d) for b in range(a + 1, d) if p[a] > p[b])
        out.append((p, -1 if inv % 2 else 1))
    return tuple(out)


class NcMatrix:
    """Rectangular matrix of ring elements (or scalars)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(r) for r in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def build(cls, rows, cols, fn):
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def identity(cls, n, scale=1):
        return cls.build(n, n, lambda i, j: scale if i == j else 0)

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls.build(n, n, lambda i, j: values[i] if i == j else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self):
        return NcMatrix.build(self.cols, self.rows, lambda i, j: self.entries[j][i])

    def map(self, fn):
        return NcMatrix([[fn(e) for e in r] for r in self.entries])

    def sub(self, rows, cols):
        return submatrix(self, rows, cols)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return NcMatrix([a + b for a, b in zip(self.entries, other.entries)])

    def __add__(self, other):
        if isinstance(other, NcMatrix):
            if (self.rows, self.cols) != (other.rows, other.cols):
                raise ValueError("shape mismatch")
            return NcMatrix.build(self.rows, self.cols, lambda i, j: self[i, j] + other[i, j])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, NcMatrix):
            if (self.rows, self.cols) != (other.rows, other.cols):
                raise ValueError("shape mismatch")
            return NcMatrix.build(self.rows, self.cols, lambda i, j: self[i, j] - other[i, j])
        return NotImplemented

    def __neg__(self):
        return self.map(lambda e: -e)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")

        def entry(i, j):
            total = 0
            for k in range(self.cols):
                a, b = self[i, k], other[k, j]
                if _is_zero_scalar(a) or _is_zero_scalar(b):
                    continue
                total = total + a * b
            return total
        return NcMatrix.build(self.rows, other.cols, entry)

    def __repr__(self):
        return f"NcMatrix({self.rows}x{self.cols})"


def _is_zero_scalar(a):
    return isinstance(a, (int, Fraction)) and a == 0


def submatrix(A: NcMatrix, rows, cols) -> NcMatrix:
    """``A_{rows, cols}``; repeated indices duplicate rows/columns."""
    for i in rows:
        if not 0 <= i < A.rows:
            raise IndexError(f"row index {i} out of range")
    for j in cols:
        if not 0 <= j < A.cols:
            raise IndexError(f"column index {j} out of range")
    return NcMatrix([[A[i, j] for j in cols] for i in rows])


def _index_sets(A, rows, cols):
    if rows is None:
        rows = tuple(range(A.rows))
    if cols is None:
        cols = tuple(range(A.cols))
    if len(rows) != len(cols):
        raise ValueError("determinant of a non-square block")
    for i in rows:
        if not 0 <= i < A.rows:
            raise IndexError(f"row index {i} out of range")
    for j in cols:
        if not 0 <= j < A.cols:
            raise IndexError(f"column index {j} out of range")
    return tuple(rows), tuple(cols)


def _params(u, d):
    if u is None:
        return (0,) * d
    if len(u) != d:
        raise ValueError(f"expected {d} diagonal parameters, got {len(u)}")
    return tuple(u)


def _product(factors):
    acc = 1
    for f in factors:
        acc = acc * f
    return acc


def col_det_param(A: NcMatrix, u=None, rows=None, cols=None):
    """Column-determinant with diagonal parameters.

    ``sum_s sgn(s) prod_k (A[r_s(k), c_k] + u_k delta(r_s(k), c_k))``, factors in
    column order.  With ``rows``/``cols`` the delta compares the original
    indices, i.e. the shift matrix is the matching block of the identity.
    """
    rows, cols = _index_sets(A, rows, cols)
    d = len(rows)
    u = _params(u, d)
    total = 0
    for perm, sign in signed_permutations(d):
        factors = []
        for k in range(d):
            r, c = rows[perm[k]], cols[k]
            e = A[r, c]
            if r == c and u[k]:
                e = e + u[k]
            factors.append(e)
        term = _product(factors)
        total = total + term if sign > 0 else total - term
    return total


def col_det(A: NcMatrix):
    return col_det_param(A)


def _sym_sum(A, rows, cols, shifts, signed=True):
    d = len(rows)
    total = 0
    perms = signed_permutations(d)
    for sp, ss in perms:
        for tp, ts in perms:
            factors = []
            for k in range(d):
                r, c = rows[sp[k]], cols[tp[k]]
                e = A[r, c]
                s = shifts(k, r, c)
                if s:
                    e = e + s
                factors.append(e)
            term = _product(factors)
            total = total + term if (not signed or ss * ts > 0) else total - term
    return total * Fraction(1, factorial(d))


def sym_det_param(A: NcMatrix, u=None, rows=None, cols=None):
    """Symmetrized determinant ``(1/d!) sum_{s,t} sgn s sgn t prod_k (A_{s(k),t(k)} + u_k delta)``."""
    rows, cols = _index_sets(A, rows, cols)
    u = _params(u, len(rows))
    return _sym_sum(A, rows, cols, lambda k, r, c: u[k] if r == c else 0)


def sym_det(A: NcMatrix, rows=None, cols=None):
    return sym_det_param(A, None, rows, cols)


def uneven_epsilon(p: int, q: int):
    """Diagonal of ``-I_{p,q}``: -1 on the first p indices, +1 on the last q."""
    return (-1,) * p + (1,) * q


def det_pq(B: NcMatrix, I, J, u, p: int, q: int):
    """Symmetrized determinant with uneven diagonal shift ``B_{ij} - u_k eps_{ij}``."""
    if B.rows != p + q or B.cols != p + q:
        raise ValueError(f"matrix must be {p + q}x{p + q}")
    rows, cols = _index_sets(B, I, J)
    u = _params(u, len(rows))
    eps = uneven_epsilon(p, q)
    return _sym_sum(B, rows, cols, lambda k, r, c: -u[k] * eps[r] if r == c else 0)


def per_param(A: NcMatrix, I=None, J=None, u=None):
    """Column-permanent over multi-indices: ``sum_s prod_k (A_{I(s(k)),J(k)} + u_k delta)``."""
    rows, cols = _index_sets(A, I, J)
    d = len(rows)
    u = _params(u, d)
    total = 0
    for perm, _ in signed_permutations(d):
        factors = []
        for k in range(d):
            r, c = rows[perm[k]], cols[k]
            e = A[r, c]
            if r == c and u[k]:
                e = e + u[k]
            factors.append(e)
        total = total + _product(factors)
    return total


def per(A: NcMatrix):
    return per_param(A)


def sym_per(A: NcMatrix, rows=None, cols=None):
    """Symmetrized permanent ``(1/d!) sum_{s,t} prod_k A_{s(k),t(k)}``."""
    rows, cols = _index_sets(A, rows, cols)
    return _sym_sum(A, rows, cols, lambda k, r, c: 0, signed=False)
