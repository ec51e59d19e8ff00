"""Universal enveloping algebras of direct sums of gl_n in PBW normal form.

Generators are matrix units ``E[b; i, j]`` of block ``b``, numbered
lexicographically by ``(block, row, col)``; a PBW monomial is a weakly
increasing tuple of generator numbers.  Indices are 0-based in code and
printed 1-based (``E0[1,2]``).

A block may carry a diagonal sign vector ``s`` so that
``[E_ij, E_kl] = s_j d_jk E_il - s_i d_li E_kj``.  All-ones is plain gl_n;
``s = diag(1_p, -1_q)`` is gl_{p+q} written in the basis ``D E D`` with
``D = diag(1_p, -sqrt(-1) 1_q)``, which keeps every coefficient rational.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = (int, Fraction)


class GlStructure:
    """Bracket data and a product cache for ``U(gl_{n_1} + ... + gl_{n_k})``."""

    def __init__(self, sizes, signs=None):
        self.sizes = tuple(sizes)
        if any(n < 1 for n in self.sizes):
            raise ValueError("block sizes must be positive")
        if signs is None:
            signs = tuple((1,) * n for n in self.sizes)
        self.signs = tuple(tuple(s) for s in signs)
        if tuple(len(s) for s in self.signs) != self.sizes:
            raise ValueError("sign vectors must match block sizes")
        self.generators = [(b, i, j) for b, n in enumerate(self.sizes)
                           for i in range(n) for j in range(n)]
        self._index = {g: k for k, g in enumerate(self.generators)}
        self._bracket_cache = {}
        self._mono_gen_cache = {}

    def __eq__(self, other):
        return isinstance(other, GlStructure) and (self.sizes, self.signs) == (other.sizes, other.signs)

    def __hash__(self):
        return hash((self.sizes, self.signs))

    def __repr__(self):
        return f"GlStructure({self.sizes}, signs={self.signs})"

    @property
    def ngens(self):
        return len(self.generators)

    def index(self, block, i, j):
        return self._index[(block, i, j)]

    def gen(self, block, i, j) -> "UEnvElement":
        return UEnvElement._raw(self, {(self.index(block, i, j),): Fraction(1)})

    def one(self):
        return UEnvElement._raw(self, {(): Fraction(1)})

    def zero(self):
        return UEnvElement._raw(self, {})

    def scalar(self, c):
        c = Fraction(c)
        return UEnvElement._raw(self, {(): c} if c else {})

    def matrix(self, block=0):
        """The matrix ``(E_ij)`` of generators of one block."""
        from .nclinalg import NcMatrix
        n = self.sizes[block]
        return NcMatrix([[self.gen(block, i, j) for j in range(n)] for i in range(n)])

    def bracket_gens(self, a: int, b: int) -> dict:
        """``[g_a, g_b]`` as ``{generator: coef}``."""
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        ba, i, j = self.generators[a]
        bb, k, l = self.generators[b]
        out = {}
        if ba == bb:
            s = self.signs[ba]
            if j == k:
                g = self._index[(ba, i, l)]
                out[g] = out.get(g, 0) + s[j]
            if l == i:
                g = self._index[(ba, k, j)]
                out[g] = out.get(g, 0) - s[i]
        out = {g: c for g, c in out.items() if c}
        self._bracket_cache[key] = out
        return out

    def mono_times_gen(self, mono: tuple, g: int) -> dict:
        """PBW normal form of ``mono * g``."""
        key = (mono, g)
        hit = self._mono_gen_cache.get(key)
        if hit is not None:
            return hit
        if not mono or mono[-1] <= g:
            result = {mono + (g,): 1}
        else:
            h = mono[-1]
            w = mono[:-1]
            result = {}
            # w g h
            for t, c in self.mono_times_gen(w, g).items():
                for t2, c2 in self.mono_times_gen(t, h).items():
                    result[t2] = result.get(t2, 0) + c * c2
            # w [h, g]
            for g2, cb in self.bracket_gens(h, g).items():
                for t2, c2 in self.mono_times_gen(w, g2).items():
                    result[t2] = result.get(t2, 0) + cb * c2
            result = {t: c for t, c in result.items() if c}
        self._mono_gen_cache[key] = result
        return result

    def mono_times_mono(self, m1: tuple, m2: tuple) -> dict:
        current = {m1: 1}
        for g in m2:
            nxt = {}
            for t, c in current.items():
                for t2, c2 in self.mono_times_gen(t, g).items():
                    nxt[t2] = nxt.get(t2, 0) + c * c2
            current = {t: c for t, c in nxt.items() if c}
        return current

    def format_mono(self, mono):
        if not mono:
            return "1"
        parts = []
        for g in mono:
            b, i, j = self.generators[g]
            parts.append(f"E{b}[{i + 1},{j + 1}]")
        return "·".join(parts)


class UEnvElement:
    """Element of an enveloping algebra, stored as ``{PBW monomial: Fraction}``."""

    __slots__ = ("structure", "terms")

    def __init__(self, structure: GlStructure, terms=None):
        self.structure = structure
        self.terms = {}
        for mono, c in (terms or {}).items():
            if c == 0:
                continue
            mono = tuple(mono)
            if any(a > b for a, b in zip(mono, mono[1:])):
                raise ValueError(f"monomial {mono} is not PBW-sorted")
            self.terms[mono] = Fraction(c)

    @classmethod
    def _raw(cls, structure, terms):
        obj = cls.__new__(cls)
        obj.structure = structure
        obj.terms = terms
        return obj

    def _coerce(self, other):
        if isinstance(other, UEnvElement):
            if other.structure != self.structure:
                raise ValueError("enveloping algebra structure mismatch")
            return other
        if isinstance(other, Scalar):
            return self.structure.scalar(other)
        return None

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

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
        return UEnvElement._raw(self.structure, out)

    __radd__ = __add__

    def __neg__(self):
        return UEnvElement._raw(self.structure, {k: -v for k, v in self.terms.items()})

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
        c = Fraction(c)
        if not c:
            return self.structure.zero()
        return UEnvElement._raw(self.structure, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, UEnvElement):
            return NotImplemented
        if other.structure != self.structure:
            raise ValueError("enveloping algebra structure mismatch")
        st = self.structure
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, w in st.mono_times_mono(m1, m2).items():
                    out[m] = out.get(m, 0) + c12 * w
        return UEnvElement._raw(st, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = self.structure.scalar(other)
        if not isinstance(other, UEnvElement):
            return NotImplemented
        return self.structure == other.structure and self.terms == other.terms

    __hash__ = None

    def top_symbol(self):
        """Top-degree part as a commutative polynomial in the generators."""
        from .weyl import CommutativePolynomial
        st = self.structure
        top = self.degree()
        out = {}
        for mono, c in self.terms.items():
            if len(mono) != top:
                continue
            key = [0] * st.ngens
            for g in mono:
                key[g] += 1
            key = tuple(key)
            out[key] = out.get(key, 0) + c
        return CommutativePolynomial(st.ngens, out)

    def __str__(self):
        return format_uenv(self)

    def __repr__(self):
        return f"UEnvElement({format_uenv(self)!r})"


def format_uenv(x: UEnvElement) -> str:
    if not x.terms:
        return "0"
    st = x.structure
    parts = []
    for mono in sorted(x.terms, key=lambda m: (-len(m), m)):
        c = x.terms[mono]
        body = st.format_mono(mono)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        else:
            parts.append(f"{c}·{body}")
    return " + ".join(parts)


def ue_mul(a: UEnvElement, b: UEnvElement) -> UEnvElement:
    return a * b


def ue_commutator(a: UEnvElement, b: UEnvElement) -> UEnvElement:
    return a * b - b * a


def invariance_check(x: UEnvElement, basis) -> bool:
    """True iff ``x`` commutes with every element of ``basis``."""
    return all(ue_commutator(x, k).is_zero() for k in basis)


def first_noncommuting(x, basis):
    """Index of the first basis element not commuting with ``x``, else None."""
    for idx, k in enumerate(basis):
        if not ue_commutator(x, k).is_zero():
            return idx
    return None
