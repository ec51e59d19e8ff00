"""Integer coefficients c^d_{a,b}, b^d_{u,v} and eps(a,b;u,v) of the Capelli identities.

``b`` has a recurrence and two closed forms; ``cbe_sum`` is the bridge
``sum_{u+v=a+b} b^d_{u,v} eps(a,b;u,v)`` which must reproduce ``c``.
Binomials vanish outside ``0 <= k <= n`` and ``0**0 == 1`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

METHODS = ("recurrence", "closed1", "closed2")


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def c_coeff(d: int, alpha: int, beta: int) -> int:
    """``sum_k C(a+b, k) (b-k)^d (-1)^k``."""
    if d < 0 or alpha < 0 or beta < 0:
        raise ValueError("c_coeff needs non-negative arguments")
    n = alpha + beta
    return sum(comb(n, k) * (beta - k) ** d * (-1) ** k for k in range(n + 1))


def c_of_index_set(d: int, J, p: int) -> int:
    """``c^d_J`` with alpha/beta counted from the 0-based index set ``J``."""
    alpha, beta = split_counts(J, p)
    return c_coeff(d, alpha, beta)


def split_counts(J, p: int):
    alpha = sum(1 for j in J if j < p)
    return alpha, len(J) - alpha


class _BTable:
    """Memoized table of the recurrence; grows on demand."""

    def __init__(self):
        self.rows = [{(0, 0): 1}]

    def get(self, d, u, v):
        while len(self.rows) <= d:
            prev = self.rows[-1]
            nd = len(self.rows)
            row = {}
            for uu in range(nd + 1):
                for vv in range(nd + 1 - uu):
                    val = (prev.get((uu - 1, vv), 0)
                           + (uu + 1) * prev.get((uu + 1, vv - 1), 0)
                           + (vv + 1) * prev.get((uu - 1, vv + 1), 0))
                    if val:
                        row[(uu, vv)] = val
            self.rows.append(row)
        return self.rows[d].get((u, v), 0)


_TABLE = _BTable()


def b_recurrence(d: int, u: int, v: int) -> int:
    if d < 0 or u < 0 or v < 0:
        return 0
    return _TABLE.get(d, u, v)


def b_closed1(d: int, u: int, v: int) -> Fraction:
    """Closed form summed over ``m, mu, nu``."""
    if d < 0 or u < 0 or v < 0:
        return Fraction(0)
    total = Fraction(0)
    for m in range(v + 1):
        for mu in range(v - m + 1):
            for nu in range(u + 1):
                w = binom(u, nu) * binom(v, m) * binom(v - m, mu)
                if not w:
                    continue
                sign = -1 if (m + nu) % 2 else 1
                total += Fraction(sign * w * (u - v + m + 2 * mu - 2 * nu) ** d, 2 ** (u + v - m))
    return total / (factorial(u) * factorial(v))


def b_closed2(d: int, u: int, v: int) -> Fraction:
    """Closed form summed over ``k, l``."""
    if d < 0 or u < 0 or v < 0:
        return Fraction(0)
    total = 0
    for k in range(2 * v + 1):
        for l in range(u + 1):
            sign = -1 if (k + l) % 2 else 1
            total += sign * binom(2 * v, k) * binom(u, l) * (u + v - k - 2 * l) ** d
    return Fraction(total, 2 ** (u + v) * factorial(u) * factorial(v))


def b_coeff(d: int, u: int, v: int, method: str = "recurrence"):
    if method == "recurrence":
        return Fraction(b_recurrence(d, u, v))
    if method == "closed1":
        return b_closed1(d, u, v)
    if method == "closed2":
        return b_closed2(d, u, v)
    raise ValueError(f"unknown method {method!r}")


def epsilon_coeff(alpha: int, beta: int, u: int, v: int) -> int:
    """``u! v! sum_{a+b=v} (-1)^a C(alpha, a) C(beta, b)``; zero for negative u or v."""
    if u < 0 or v < 0 or alpha < 0 or beta < 0:
        return 0
    s = sum((-1) ** a * binom(alpha, a) * binom(beta, v - a) for a in range(v + 1))
    return factorial(u) * factorial(v) * s


def epsilon_bruteforce(J, u: int, v: int, p: int, q: int) -> int:
    """Sum over permutations of the last ``v`` diagonal signs of ``-I_{p,q}``."""
    if u < 0 or v < 0:
        return 0
    if len(J) != u + v:
        raise ValueError(f"|J| = {len(J)} but u + v = {u + v}")
    if any(not 0 <= j < p + q for j in J):
        raise ValueError("index outside range(p + q)")
    eps = [-1] * p + [1] * q
    total = 0
    for perm in permutations(range(u + v)):
        term = 1
        for k in range(u, u + v):
            term *= eps[J[perm[k]]]
        total += term
    return total


def cbe_sum(d: int, alpha: int, beta: int, method: str = "recurrence") -> Fraction:
    """``sum_{u+v=alpha+beta} b^d_{u,v} eps(alpha, beta; u, v)``."""
    w = alpha + beta
    return sum((b_coeff(d, u, w - u, method) * epsilon_coeff(alpha, beta, u, w - u)
                for u in range(w + 1)), Fraction(0))


def cbe_intermediate(d: int, alpha: int, beta: int) -> Fraction:
    """The four-fold sum over ``a, b, k, l`` reached after substituting the closed forms."""
    w = alpha + beta
    total = 0
    for a in range(alpha + 1):
        for b in range(beta + 1):
            for k in range(2 * a + 2 * b + 1):
                for l in range(w - a - b + 1):
                    sign = -1 if (k + l + a) % 2 else 1
                    total += (sign * binom(alpha, a) * binom(beta, b) * binom(2 * a + 2 * b, k)
                              * binom(w - a - b, l) * (w - k - 2 * l) ** d)
    return Fraction(total, 2 ** w)


@dataclass
class CoeffReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {"name": self.name, "checked": self.checked, "ok": self.ok,
                "failures": [list(map(str, f)) for f in self.failures[:10]]}


def verify_cbe_identity(d_max: int) -> CoeffReport:
    """``c^d_{a,b} == sum b^d_{u,v} eps(a,b;u,v)`` for ``d, a+b <= d_max``."""
    rep = CoeffReport("cbe-identity")
    for d in range(d_max + 1):
        for w in range(d_max + 1):
            for alpha in range(w + 1):
                beta = w - alpha
                lhs = c_coeff(d, alpha, beta)
                rhs = cbe_sum(d, alpha, beta)
                rep.checked += 1
                if lhs != rhs:
                    rep.failures.append((d, alpha, beta, lhs, rhs))
    return rep


def verify_b_methods(d_max: int, uv_max: int) -> CoeffReport:
    rep = CoeffReport("b-three-way")
    for d in range(d_max + 1):
        for u in range(-uv_max, uv_max + 1):
            for v in range(-uv_max, uv_max + 1):
                vals = [b_coeff(d, u, v, m) for m in METHODS]
                rep.checked += 1
                if len(set(vals)) != 1 or vals[0].denominator != 1:
                    rep.failures.append((d, u, v, *vals))
    return rep


def verify_epsilon(pq_max: int) -> CoeffReport:
    from itertools import combinations
    rep = CoeffReport("epsilon-bruteforce")
    for n in range(pq_max + 1):
        for p in range(n + 1):
            q = n - p
            for w in range(n + 1):
                for J in combinations(range(n), w):
                    alpha, beta = split_counts(J, p)
                    for u in range(w + 1):
                        v = w - u
                        rep.checked += 1
                        a = epsilon_bruteforce(J, u, v, p, q)
                        b = epsilon_coeff(alpha, beta, u, v)
                        if a != b:
                            rep.failures.append((p, q, J, u, v, a, b))
    return rep


def verify_intermediate(d_max: int) -> CoeffReport:
    rep = CoeffReport("cbe-intermediate")
    for d in range(d_max + 1):
        for w in range(d_max + 1):
            for alpha in range(w + 1):
                beta = w - alpha
                rep.checked += 1
                mid = cbe_intermediate(d, alpha, beta)
                if not (mid == cbe_sum(d, alpha, beta) == c_coeff(d, alpha, beta)):
                    rep.failures.append((d, alpha, beta, mid))
    return rep


@lru_cache(maxsize=None)
def falling(n: int, k: int) -> int:
    """``n (n-1) ... (n-k+1)``; this is ``n!/(n-k)!`` and vanishes for ``0 <= n < k``."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


def table(kind: str, max_n: int):
    """Rows of ``(key..., value)`` for the CLI table dump."""
    rows = []
    if kind == "c":
        for d in range(max_n + 1):
            for w in range(max_n + 1):
                for alpha in range(w + 1):
                    rows.append({"d": d, "alpha": alpha, "beta": w - alpha,
                                 "value": c_coeff(d, alpha, w - alpha)})
    elif kind == "b":
        for d in range(max_n + 1):
            for u in range(d + 1):
                for v in range(d + 1 - u):
                    rows.append({"d": d, "u": u, "v": v, "value": b_recurrence(d, u, v)})
    elif kind == "eps":
        for w in range(max_n + 1):
            for alpha in range(w + 1):
                for u in range(w + 1):
                    rows.append({"alpha": alpha, "beta": w - alpha, "u": u, "v": w - u,
                                 "value": epsilon_coeff(alpha, w - alpha, u, w - u)})
    else:
        raise ValueError(f"unknown table {kind!r}")
    return rows
