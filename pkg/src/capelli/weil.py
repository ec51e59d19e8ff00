"""Weil-representation images of the see-saw Lie algebras as differential operators.

Variable layout (0-based, row-major):

* Case C: ``x[s,i] -> s*p + i`` then ``y[s,i] -> m*p + s*q + i``.
* Case R: ``x[s,i] -> s*n + i`` for an ``m x n`` matrix.
* Case H: ``x[s,i] -> s*n + i`` for a ``2m x n`` matrix.

The 𝔪-side of Case C is modelled in the basis ``B = D B' D`` (see
``pbw.GlStructure``), so all images are rational.  The 𝔪-sides of Cases R
and H, and Case C in the original basis ``B'``, carry explicit sqrt(-1)
factors; those are checked with ``ComplexWeyl`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .nclinalg import NcMatrix
from .pbw import GlStructure, UEnvElement
from .weyl import WeylElement, commutator

CASES = ("C", "R", "H")


@dataclass(frozen=True)
class CaseConfig:
    case: str
    m: int
    n: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.case == "C":
            if self.p < 1 or self.q < 1:
                raise ValueError("Case C needs p, q >= 1")
        elif self.n < 1:
            raise ValueError(f"Case {self.case} needs n >= 1")

    @classmethod
    def C(cls, m, p, q):
        return cls("C", m, p=p, q=q)

    @classmethod
    def R(cls, m, n):
        return cls("R", m, n=n)

    @classmethod
    def H(cls, m, n):
        return cls("H", m, n=n)

    @property
    def nvars(self):
        if self.case == "C":
            return self.m * (self.p + self.q)
        if self.case == "R":
            return self.m * self.n
        return 2 * self.m * self.n

    def params(self):
        if self.case == "C":
            return {"m": self.m, "p": self.p, "q": self.q}
        return {"m": self.m, "n": self.n}

    def label(self):
        return f"{self.case}(" + ",".join(f"{k}={v}" for k, v in self.params().items()) + ")"


class ComplexWeyl:
    """``re + sqrt(-1) im`` with rational Weyl parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: WeylElement, im: WeylElement):
        self.re = re
        self.im = im

    @classmethod
    def real(cls, w):
        return cls(w, WeylElement.zero(w.nvars))

    @classmethod
    def imag(cls, w):
        return cls(WeylElement.zero(w.nvars), w)

    def __add__(self, other):
        return ComplexWeyl(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexWeyl(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        if isinstance(other, ComplexWeyl):
            return ComplexWeyl(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)
        a, b = _complex_parts(other)
        return ComplexWeyl(self.re * a - self.im * b, self.re * b + self.im * a)

    __rmul__ = __mul__

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        return self.re == other.re and self.im == other.im

    __hash__ = None


def _complex_parts(c):
    """Exact real/imaginary parts of an int, Fraction or sympy number."""
    if isinstance(c, (int, Fraction)):
        return Fraction(c), Fraction(0)
    import sympy
    re, im = sympy.nsimplify(c).as_real_imag()
    return Fraction(str(sympy.Rational(re))), Fraction(str(sympy.Rational(im)))


@dataclass
class OmegaImageSet:
    """Operator images of the generators for one case/size."""

    config: CaseConfig
    P: NcMatrix
    Q: NcMatrix
    g_structure: GlStructure
    g_images: list
    m_structure: GlStructure | None = None
    m_images: list | None = None
    m_complex: list = field(default_factory=list)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def nvars(self):
        return self.config.nvars

    def omega_matrix(self, structure=None, block=0):
        """``omega`` applied entrywise to the generator matrix of a block."""
        st = structure or self.g_structure
        images = self.g_images if st is self.g_structure else self.m_images
        n = st.sizes[block]
        return NcMatrix.build(n, n, lambda i, j: images[st.index(block, i, j)])


# ---------------------------------------------------------------------------
# builders


def _var_maps(cfg: CaseConfig):
    N = cfg.nvars

    def x(i):
        return WeylElement.x(N, i)

    def dx(i):
        return WeylElement.d(N, i)
    return N, x, dx


def _sum(items, N):
    total = WeylElement.zero(N)
    for it in items:
        total = total + it
    return total


def _build_C(cfg: CaseConfig) -> OmegaImageSet:
    m, p, q = cfg.m, cfg.p, cfg.q
    N, var, der = _var_maps(cfg)

    def xi(s, i):
        return s * p + i

    def yi(s, i):
        return m * p + s * q + i

    X = NcMatrix.build(m, p, lambda s, i: var(xi(s, i)))
    dX = NcMatrix.build(m, p, lambda s, i: der(xi(s, i)))
    Y = NcMatrix.build(m, q, lambda s, i: var(yi(s, i)))
    dY = NcMatrix.build(m, q, lambda s, i: der(yi(s, i)))
    P = X.hstack(dY)
    Q = dX.hstack(Y)

    g = GlStructure((m, m))
    g_images = [None] * g.ngens
    half_p, half_q = Fraction(p, 2), Fraction(q, 2)
    for s in range(m):
        for t in range(m):
            ex = _sum((var(xi(s, i)) * der(xi(t, i)) for i in range(p)), N)
            ey = _sum((var(yi(s, i)) * der(yi(t, i)) for i in range(q)), N)
            if s == t:
                ex = ex + half_p
                ey = ey + half_q
            g_images[g.index(0, s, t)] = ex
            g_images[g.index(1, s, t)] = ey

    n = p + q
    Ipq = [1] * p + [-1] * q
    mst = GlStructure((n,), signs=(tuple(Ipq),))
    tPQ = P.T @ Q
    half_m = Fraction(m, 2)
    m_images = [None] * mst.ngens
    for i in range(n):
        for j in range(n):
            e = tPQ[i, j]
            if i == j:
                e = e + half_m * Ipq[i]
            m_images[mst.index(0, i, j)] = e

    # the same algebra in the plain matrix-unit basis B', with sqrt(-1) factors
    m_complex = [None] * (n * n)
    for i in range(n):
        for j in range(n):
            if i < p and j < p:
                w = _sum((var(xi(s, i)) * der(xi(s, j)) for s in range(m)), N)
                if i == j:
                    w = w + half_m
                img = ComplexWeyl.real(w)
            elif i >= p and j >= p:
                a, b = i - p, j - p
                w = -_sum((var(yi(s, b)) * der(yi(s, a)) for s in range(m)), N)
                if i == j:
                    w = w - half_m
                img = ComplexWeyl.real(w)
            elif i < p:
                b = j - p
                img = ComplexWeyl.imag(_sum((var(xi(s, i)) * var(yi(s, b)) for s in range(m)), N))
            else:
                a = i - p
                img = ComplexWeyl.imag(_sum((der(xi(s, j)) * der(yi(s, a)) for s in range(m)), N))
            m_complex[i * n + j] = img

    return OmegaImageSet(cfg, P, Q, g, g_images, mst, m_images, m_complex)


def _build_R(cfg: CaseConfig) -> OmegaImageSet:
    m, n = cfg.m, cfg.n
    N, var, der = _var_maps(cfg)
    X = NcMatrix.build(m, n, lambda s, i: var(s * n + i))
    D = NcMatrix.build(m, n, lambda s, i: der(s * n + i))
    P = X.hstack(D)
    Q = D.hstack(X)
    g = GlStructure((m,))
    half_n = Fraction(n, 2)
    g_images = [None] * g.ngens
    for s in range(m):
        for t in range(m):
            e = _sum((X[s, i] * D[t, i] for i in range(n)), N)
            if s == t:
                e = e + half_n
            g_images[g.index(0, s, t)] = e

    half_m = Fraction(m, 2)
    m_complex = []
    for i in range(n):
        for j in range(n):
            w = _sum((X[s, i] * D[s, j] for s in range(m)), N)
            if i == j:
                w = w + half_m
            m_complex.append((("e-e", i, j), ComplexWeyl.real(w)))
    for i in range(n):
        for j in range(i, n):
            m_complex.append((("+e+e", i, j), ComplexWeyl.real(_sum((X[s, i] * X[s, j] for s in range(m)), N))))
            m_complex.append((("-e-e", i, j), ComplexWeyl.real(_sum((D[s, i] * D[s, j] for s in range(m)), N))))
    return OmegaImageSet(cfg, P, Q, g, g_images, None, None, m_complex)


def symplectic_J(m: int) -> NcMatrix:
    return NcMatrix.build(2 * m, 2 * m, lambda s, t: 1 if t == s + m else (-1 if s == t + m else 0))


def _build_H(cfg: CaseConfig) -> OmegaImageSet:
    m, n = cfg.m, cfg.n
    N, var, der = _var_maps(cfg)
    X = NcMatrix.build(2 * m, n, lambda s, i: var(s * n + i))
    D = NcMatrix.build(2 * m, n, lambda s, i: der(s * n + i))
    J = symplectic_J(m)
    P = X.hstack(J @ D)
    Q = D.hstack(J @ X)
    g = GlStructure((2 * m,))
    half_n = Fraction(n, 2)
    g_images = [None] * g.ngens
    for s in range(2 * m):
        for t in range(2 * m):
            e = _sum((X[s, i] * D[t, i] for i in range(n)), N)
            if s == t:
                e = e + half_n
            g_images[g.index(0, s, t)] = e

    m_complex = []
    for i in range(n):
        for j in range(n):
            w = _sum((X[s, i] * D[s, j] for s in range(2 * m)), N)
            if i == j:
                w = w + m
            m_complex.append((("diag", i, j), ComplexWeyl.real(w)))
    for i in range(n):
        for j in range(i + 1, n):
            up = _sum((X[s, i] * X[s + m, j] - X[s + m, i] * X[s, j] for s in range(m)), N)
            lo = _sum((D[s, i] * D[s + m, j] - D[s + m, i] * D[s, j] for s in range(m)), N)
            m_complex.append((("upper", i, j), ComplexWeyl.imag(up)))
            m_complex.append((("lower", i, j), ComplexWeyl.imag(lo)))
    return OmegaImageSet(cfg, P, Q, g, g_images, None, None, m_complex)


def build_omega(cfg: CaseConfig) -> OmegaImageSet:
    return {"C": _build_C, "R": _build_R, "H": _build_H}[cfg.case](cfg)


_OMEGA_CACHE: dict = {}


def omega_set(cfg: CaseConfig) -> OmegaImageSet:
    """Memoized ``build_omega``."""
    hit = _OMEGA_CACHE.get(cfg)
    if hit is None:
        hit = _OMEGA_CACHE[cfg] = build_omega(cfg)
    return hit


# ---------------------------------------------------------------------------
# the homomorphism


def omega_hom(om: OmegaImageSet, x: UEnvElement) -> WeylElement:
    """Image of a PBW element: ordered product of generator images, extended linearly."""
    st = x.structure
    if st == om.g_structure:
        images = om.g_images
    elif om.m_structure is not None and st == om.m_structure:
        images = om.m_images
    else:
        raise ValueError(f"structure {st} does not belong to {om.config.label()}")
    cache = om._cache.setdefault(st, {(): WeylElement.one(om.nvars)})

    def mono_image(mono):
        hit = cache.get(mono)
        if hit is None:
            hit = mono_image(mono[:-1]) * images[mono[-1]]
            cache[mono] = hit
        return hit

    total = WeylElement.zero(om.nvars)
    for mono, c in x.terms.items():
        total = total + mono_image(mono) * c
    return total


# ---------------------------------------------------------------------------
# subalgebra bases


def k_basis(cfg: CaseConfig, om: OmegaImageSet | None = None):
    """Spanning set of the complexified compact subalgebra inside U(g)."""
    st = (om or omega_set(cfg)).g_structure
    m = cfg.m
    if cfg.case == "C":
        return [st.gen(0, s, t) - st.gen(1, t, s) for s in range(m) for t in range(m)]
    if cfg.case == "R":
        return [st.gen(0, s, t) - st.gen(0, t, s) for s in range(m) for t in range(s + 1, m)]
    out = []
    for Z in sp_basis_matrices(m):
        el = st.zero()
        for s in range(2 * m):
            for t in range(2 * m):
                if Z[s][t]:
                    el = el + st.gen(0, s, t) * Z[s][t]
        out.append(el)
    return out


def sp_basis_matrices(m: int):
    """Rational basis of ``{Z : Z^T J + J Z = 0}`` from the nullspace of the linear condition."""
    import sympy
    n = 2 * m
    J = sympy.Matrix(n, n, lambda s, t: 1 if t == s + m else (-1 if s == t + m else 0))
    rows = []
    for a in range(n):
        for b in range(n):
            row = []
            for s in range(n):
                for t in range(n):
                    E = sympy.zeros(n, n)
                    E[s, t] = 1
                    row.append((E.T * J + J * E)[a, b])
            rows.append(row)
    null = sympy.Matrix(rows).nullspace()
    basis = []
    for vec in null:
        vec = vec * sympy.ilcm(*[sympy.fraction(v)[1] for v in vec])
        basis.append([[int(vec[s * n + t]) for t in range(n)] for s in range(n)])
    if len(basis) != m * (2 * m + 1):
        raise AssertionError("unexpected dimension for sp_2m")
    return basis


def h_basis(cfg: CaseConfig, om: OmegaImageSet | None = None):
    """Block-diagonal gl_p + gl_q inside U(gl_{p+q}) (Case C only)."""
    if cfg.case != "C":
        raise ValueError("h basis is only modelled for Case C")
    st = (om or omega_set(cfg)).m_structure
    p, q = cfg.p, cfg.q
    out = [st.gen(0, i, j) for i in range(p) for j in range(p)]
    out += [st.gen(0, p + i, p + j) for i in range(q) for j in range(q)]
    return out


# ---------------------------------------------------------------------------
# soundness checks


def _check_gl_images(st: GlStructure, images, mul=None, sub=None):
    """Compare ``[w(a), w(b)]`` with ``w([a, b])`` over all generator pairs."""
    bad = []
    for a in range(st.ngens):
        for b in range(st.ngens):
            lhs = images[a] * images[b] - images[b] * images[a]
            rhs = None
            for g, c in st.bracket_gens(a, b).items():
                term = images[g] * c
                rhs = term if rhs is None else rhs + term
            if rhs is None:
                rhs = images[a] * 0
            if not (lhs == rhs):
                bad.append((st.format_mono((a,)), st.format_mono((b,))))
    return bad


def _matrix_bracket_closure(mats, images):
    """Express each matrix commutator in the basis ``mats`` and compare images."""
    import sympy
    flat = sympy.Matrix([[e for row in M for e in row] for M in mats]).T
    if flat.rank() != len(mats):
        return ["basis matrices are linearly dependent"]
    bad = []
    for a, Ma in enumerate(mats):
        for b, Mb in enumerate(mats):
            A, B = sympy.Matrix(Ma), sympy.Matrix(Mb)
            C = A * B - B * A
            target = sympy.Matrix([e for e in C])
            sol, params = flat.gauss_jordan_solve(target)
            if params.shape[0]:
                return ["non-unique expansion"]
            lhs = images[a] * images[b] - images[b] * images[a]
            rhs = images[a] * 0
            for c, coef in enumerate(sol):
                coef = sympy.nsimplify(coef)
                if coef != 0:
                    rhs = rhs + images[c] * coef
            if not lhs == rhs:
                bad.append((a, b))
    return bad


def _sp_matrices(n, literal=False):
    """Root-vector basis; the ``-e-e`` vectors are negated unless ``literal``.

    With the displayed matrices the operator images satisfy the bracket
    relations only after ``X_{-ei-ej} -> -X_{-ei-ej}``; ``literal=True``
    reproduces the mismatch.
    """
    import sympy
    I = sympy.I

    def E(i, j):
        M = sympy.zeros(n, n)
        M[i, j] = 1
        return M

    def block(a, b, c, d):
        return sympy.Matrix(sympy.BlockMatrix([[a, b], [c, d]]))

    out = []
    for i in range(n):
        for j in range(n):
            F, G = E(i, j) - E(j, i), E(i, j) + E(j, i)
            out.append(block(F, I * G, -I * G, F) / 2)
    for i in range(n):
        for j in range(i, n):
            G = E(i, j) + E(j, i)
            out.append(block(G, -I * G, -I * G, -G) / 2)
            minus = block(G, I * G, I * G, -G) / 2
            out.append(minus if literal else -minus)
    return [M.tolist() for M in out]


def _o_matrices(n):
    import sympy

    def E(i, j):
        M = sympy.zeros(n, n)
        M[i, j] = 1
        return M
    Z = sympy.zeros(n, n)

    def block(a, b, c, d):
        return sympy.Matrix(sympy.BlockMatrix([[a, b], [c, d]]))

    out = []
    for i in range(n):
        for j in range(n):
            out.append(block(E(i, j), Z, Z, -E(j, i)))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(block(Z, E(i, j) - E(j, i), Z, Z))
            out.append(block(Z, Z, E(j, i) - E(i, j), Z))
    return [M.tolist() for M in out]


def pq_commutators(om: OmegaImageSet):
    """Scalar matrix ``[P_{s,i}, Q_{t,j}]`` indexed ``[(s, i)][(t, j)]``."""
    P, Q = om.P, om.Q
    out = {}
    for s in range(P.rows):
        for i in range(P.cols):
            for t in range(Q.rows):
                for j in range(Q.cols):
                    c = commutator(P[s, i], Q[t, j])
                    if any(sum(k) for k in c.terms):
                        raise AssertionError("[P, Q] is not a scalar")
                    out[(s, i, t, j)] = c.constant()
    return out


def verify_homomorphism(cfg: CaseConfig) -> dict:
    """Bracket preservation of the 𝔤-side and 𝔪-side images, plus matrix-form identities."""
    om = omega_set(cfg)
    checks = {}
    checks["g-brackets"] = _check_gl_images(om.g_structure, om.g_images)
    if cfg.case == "C":
        checks["m-brackets(B basis)"] = _check_gl_images(om.m_structure, om.m_images)
        plain = GlStructure((cfg.p + cfg.q,))
        checks["m-brackets(B' basis)"] = _check_gl_images(plain, om.m_complex)
        checks["B = D B' D"] = _check_conjugation(cfg, om)
        checks["matrix forms"] = _check_matrix_forms_C(cfg, om)
    elif cfg.case == "R":
        mats = _sp_matrices(cfg.n)
        imgs = [img for _, img in om.m_complex]
        checks["m-brackets(sp)"] = _matrix_bracket_closure(mats, imgs)
        literal = _matrix_bracket_closure(_sp_matrices(cfg.n, literal=True), imgs)
        checks["matrix forms"] = _check_matrix_form_sum(om, _transpose_partner_R)
    else:
        mats = _o_matrices(cfg.n)
        checks["m-brackets(o)"] = _matrix_bracket_closure(mats, [img for _, img in om.m_complex])
        checks["matrix forms"] = _check_matrix_form_sum(om, _transpose_partner_H)
    eps = [-1] * (om.P.cols // 2) if cfg.case != "C" else [-1] * cfg.p
    eps = eps + [1] * (om.P.cols - len(eps))
    pq = pq_commutators(om)
    checks["[P,Q] = eps delta"] = [k for k, v in pq.items()
                                   if v != (eps[k[1]] if (k[0] == k[2] and k[1] == k[3]) else 0)]
    out = {"case": cfg.label(), "ok": all(not v for v in checks.values()),
           "checks": {k: (not v) for k, v in checks.items()},
           "failures": {k: [str(x) for x in v[:5]] for k, v in checks.items() if v}}
    if cfg.case == "R":
        out["notes"] = {"literal -e-e matrices satisfy relations": not literal}
    return out


def _check_conjugation(cfg, om):
    p, n = cfg.p, cfg.p + cfg.q
    # D = diag(1_p, -i 1_q): B_ij = d_i d_j B'_ij
    d = [(1, 0)] * p + [(0, -1)] * cfg.q
    bad = []
    for i in range(n):
        for j in range(n):
            (a1, b1), (a2, b2) = d[i], d[j]
            c = (a1 * a2 - b1 * b2, a1 * b2 + b1 * a2)
            img = om.m_complex[i * n + j] * Fraction(c[0]) + \
                ComplexWeyl(om.m_complex[i * n + j].im * (-c[1]), om.m_complex[i * n + j].re * c[1])
            if not (img.re == om.m_images[om.m_structure.index(0, i, j)] and img.im.is_zero()):
                bad.append((i, j))
    return bad


def _check_matrix_forms_C(cfg, om):
    m, p, q = cfg.m, cfg.p, cfg.q
    EX = om.omega_matrix(om.g_structure, 0)
    EY = om.omega_matrix(om.g_structure, 1)
    X = NcMatrix.build(m, p, lambda s, i: om.P[s, i])
    dX = NcMatrix.build(m, p, lambda s, i: om.Q[s, i])
    Y = NcMatrix.build(m, q, lambda s, i: om.Q[s, p + i])
    dY = NcMatrix.build(m, q, lambda s, i: om.P[s, p + i])
    bad = []
    lhs1 = X @ dX.T
    lhs2 = dY @ Y.T
    PtQ = om.P @ om.Q.T
    for s in range(m):
        for t in range(m):
            sh = 1 if s == t else 0
            if not EX[s, t] == lhs1[s, t] + Fraction(p, 2) * sh:
                bad.append(("E^X", s, t))
            if not EY[t, s] == lhs2[s, t] - Fraction(q, 2) * sh:
                bad.append(("tE^Y", s, t))
            if not EX[s, t] + EY[t, s] == PtQ[s, t] + Fraction(p - q, 2) * sh:
                bad.append(("E^X+tE^Y", s, t))
    tPQ = om.P.T @ om.Q
    for i in range(p + q):
        for j in range(p + q):
            sh = (1 if i < p else -1) if i == j else 0
            if not om.m_images[om.m_structure.index(0, i, j)] == tPQ[i, j] + Fraction(m, 2) * sh:
                bad.append(("B", i, j))
    return bad


def _transpose_partner_R(om, s, t):
    return om.g_images[om.g_structure.index(0, t, s)]


def _transpose_partner_H(om, s, t):
    # (J tE J^{-1})_{st} = sum_{a,b} J_sa E_ba (J^{-1})_bt
    m = om.config.m
    J = symplectic_J(m)
    Jinv = -J
    total = WeylElement.zero(om.nvars)
    for a in range(2 * m):
        if not J[s, a]:
            continue
        for b in range(2 * m):
            if not Jinv[b, t]:
                continue
            total = total + om.g_images[om.g_structure.index(0, b, a)] * (J[s, a] * Jinv[b, t])
    return total


def _check_matrix_form_sum(om, partner):
    """``omega(E + partner(E)) == P tQ`` entrywise."""
    PtQ = om.P @ om.Q.T
    size = om.g_structure.sizes[0]
    bad = []
    for s in range(size):
        for t in range(size):
            lhs = om.g_images[om.g_structure.index(0, s, t)] + partner(om, s, t)
            if not lhs == PtQ[s, t]:
                bad.append((s, t))
    return bad
