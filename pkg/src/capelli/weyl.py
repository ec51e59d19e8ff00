"""Weyl algebra of polynomial-coefficient differential operators.

Elements are finite sums of normal-ordered monomials ``x^a d^b`` (all
variables to the left of all derivatives) with exact rational coefficients.
A monomial key is a flat tuple ``a + b`` of length ``2 * nvars``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

Scalar = (int, Fraction)


def _as_fraction(c):
    return c if isinstance(c, Fraction) else Fraction(c)


@lru_cache(maxsize=None)
def _contractions(b: int, c: int) -> tuple:
    # d^b x^c = sum_k C(b,k) C(c,k) k! x^(c-k) d^(b-k)
    return tuple((k, comb(b, k) * comb(c, k) * factorial(k)) for k in range(min(b, c) + 1))


@lru_cache(maxsize=1 << 18)
def monomial_product(m1: tuple, m2: tuple) -> tuple:
    """Normal-ordered expansion of ``(x^a d^b)(x^c d^e)`` as ``((key, int), ...)``."""
    n = len(m1) // 2
    a, b = m1[:n], m1[n:]
    c, e = m2[:n], m2[n:]
    base_x = [a[i] + c[i] for i in range(n)]
    base_d = [b[i] + e[i] for i in range(n)]
    active = [i for i in range(n) if b[i] and c[i]]
    if not active:
        return ((tuple(base_x) + tuple(base_d), 1),)
    out = []
    for choice in product(*(_contractions(b[i], c[i]) for i in active)):
        xs = list(base_x)
        ds = list(base_d)
        coef = 1
        for i, (k, w) in zip(active, choice):
            xs[i] -= k
            ds[i] -= k
            coef *= w
        out.append((tuple(xs) + tuple(ds), coef))
    return tuple(out)


class WeylElement:
    """An element of the Weyl algebra in ``nvars`` variables.

    Supports ``+``, ``-``, ``*`` with other elements of the same size and with
    int/Fraction scalars.  Treat instances as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: _as_fraction(v) for k, v in terms.items() if v != 0}

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def scalar(cls, nvars, c):
        c = _as_fraction(c)
        return cls._raw(nvars, {(0,) * (2 * nvars): c} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.scalar(nvars, 1)

    @classmethod
    def x(cls, nvars, i, power=1):
        key = [0] * (2 * nvars)
        key[i] = power
        return cls._raw(nvars, {tuple(key): Fraction(1)})

    @classmethod
    def d(cls, nvars, i, power=1):
        key = [0] * (2 * nvars)
        key[nvars + i] = power
        return cls._raw(nvars, {tuple(key): Fraction(1)})

    @classmethod
    def monomial(cls, xexp, dexp, coef=1):
        if len(xexp) != len(dexp):
            raise ValueError("exponent vectors differ in length")
        return cls(len(xexp), {tuple(xexp) + tuple(dexp): coef})

    # helpers

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            if other.nvars != self.nvars:
                raise ValueError(f"algebra size mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Scalar):
            return WeylElement.scalar(self.nvars, other)
        return None

    def is_zero(self):
        return not self.terms

    def constant(self):
        return self.terms.get((0,) * (2 * self.nvars), Fraction(0))

    def order(self):
        """Highest total derivative order; -1 for zero."""
        n = self.nvars
        return max((sum(k[n:]) for k in self.terms), default=-1)

    def degree(self):
        n = self.nvars
        return max((sum(k[:n]) for k in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeylElement._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = _as_fraction(c)
        if not c:
            return WeylElement.zero(self.nvars)
        return WeylElement._raw(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(f"algebra size mismatch: {self.nvars} vs {other.nvars}")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c12 = c1 * c2
                for key, w in monomial_product(k1, k2):
                    out[key] = out.get(key, 0) + c12 * w
        return WeylElement._raw(self.nvars, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = WeylElement.scalar(self.nvars, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"WeylElement({self.nvars}, {format_weyl(self)!r})"

    def __str__(self):
        return format_weyl(self)


def mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def commutator(a, b):
    """``ab - ba`` for any pair of ring elements."""
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a


# ---------------------------------------------------------------------------
# commutative polynomials


class CommutativePolynomial:
    """Sparse commutative polynomial over Q in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {} if terms is None else {
            tuple(k): _as_fraction(v) for k, v in terms.items() if v != 0}

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, nvars, c):
        c = _as_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        key = [0] * nvars
        key[i] = power
        return cls._raw(nvars, {tuple(key): Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, CommutativePolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, Scalar):
            return CommutativePolynomial.scalar(self.nvars, other)
        return None

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def homogeneous_part(self, deg):
        return CommutativePolynomial._raw(
            self.nvars, {k: v for k, v in self.terms.items() if sum(k) == deg})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CommutativePolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return CommutativePolynomial._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            c = _as_fraction(other)
            if not c:
                return CommutativePolynomial._raw(self.nvars, {})
            return CommutativePolynomial._raw(self.nvars, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(i + j for i, j in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return CommutativePolynomial._raw(self.nvars, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e):
        result = CommutativePolynomial.scalar(self.nvars, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = CommutativePolynomial.scalar(self.nvars, other)
        if not isinstance(other, CommutativePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{v}*{k}" for k, v in sorted(self.terms.items())) or "0"
        return f"CommutativePolynomial({self.nvars}, {body})"


def apply(op: WeylElement, poly: CommutativePolynomial) -> CommutativePolynomial:
    """Act on a polynomial in the x-variables of the algebra."""
    n = op.nvars
    if poly.nvars != n:
        raise ValueError(f"polynomial has {poly.nvars} variables, algebra has {n}")
    out = {}
    for key, c in op.terms.items():
        a, b = key[:n], key[n:]
        for e, pc in poly.terms.items():
            w = 1
            for bi, ei in zip(b, e):
                if bi > ei:
                    w = 0
                    break
                w *= factorial(ei) // factorial(ei - bi)
            if not w:
                continue
            new = tuple(ai + ei - bi for ai, ei, bi in zip(a, e, b))
            out[new] = out.get(new, 0) + c * pc * w
    return CommutativePolynomial._raw(n, {k: v for k, v in out.items() if v})


def principal_symbol(a: WeylElement) -> CommutativePolynomial:
    """Top-order part with each derivative replaced by a commuting symbol.

    The result lives in ``2 * nvars`` variables (x's then xi's).  Zero maps
    to zero.
    """
    n = a.nvars
    top = a.order()
    return CommutativePolynomial._raw(
        2 * n, {k: v for k, v in a.terms.items() if sum(k[n:]) == top})


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree ``<= degree``."""
    if nvars == 0:
        yield ()
        return
    for first in range(degree + 1):
        for rest in monomials_up_to(nvars - 1, degree - first):
            yield (first,) + rest


def equal_by_action(a: WeylElement, b: WeylElement, degree=None) -> bool:
    """Independent equality test: compare actions on all monomials up to ``degree``.

    Operators of order ``<= D`` agree iff they agree on monomials of degree
    ``<= D``; ``degree`` defaults to the larger order.
    """
    if a.nvars != b.nvars:
        raise ValueError("algebra size mismatch")
    if degree is None:
        degree = max(a.order(), b.order(), 0)
    n = a.nvars
    for e in monomials_up_to(n, degree):
        p = CommutativePolynomial(n, {e: 1})
        if apply(a, p) != apply(b, p):
            return False
    return True


# ---------------------------------------------------------------------------
# text form:  "3/2·x[0]^2·d[1] + -1·x[1]"

_SEP = "·"


def _sort_key(n):
    def key(k):
        return (-(sum(k)), tuple(-e for e in k[n:]), tuple(-e for e in k[:n]))
    return key


def format_weyl(a: WeylElement) -> str:
    n = a.nvars
    if not a.terms:
        return "0"
    parts = []
    for k in sorted(a.terms, key=_sort_key(n)):
        c = a.terms[k]
        factors = []
        for i in range(n):
            if k[i]:
                factors.append(f"x[{i}]" + (f"^{k[i]}" if k[i] > 1 else ""))
        for i in range(n):
            if k[n + i]:
                factors.append(f"d[{i}]" + (f"^{k[n + i]}" if k[n + i] > 1 else ""))
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append(_SEP.join(factors))
        else:
            parts.append(_SEP.join([str(c)] + factors))
    return " + ".join(parts)


_FACTOR = re.compile(r"^([xd])\[(\d+)\](?:\^(\d+))?$")


def parse_weyl(text: str, nvars: int) -> WeylElement:
    text = text.strip()
    if text == "0":
        return WeylElement.zero(nvars)
    terms = {}
    for part in text.split(" + "):
        tokens = part.strip().split(_SEP)
        coef = Fraction(1)
        if not _FACTOR.match(tokens[0]):
            coef = Fraction(tokens[0])
            tokens = tokens[1:]
        key = [0] * (2 * nvars)
        for tok in tokens:
            m = _FACTOR.match(tok)
            if not m:
                raise ValueError(f"bad factor {tok!r}")
            kind, idx, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            if idx >= nvars:
                raise ValueError(f"variable index {idx} out of range")
            key[idx + (nvars if kind == "d" else 0)] += power
        key = tuple(key)
        terms[key] = terms.get(key, 0) + coef
    return WeylElement(nvars, terms)
