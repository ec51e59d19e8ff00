"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or ``python scripts/run_acceptance.py``.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from capelli.coeffs import verify_b_methods, verify_cbe_identity, verify_epsilon
from capelli.exterior import LEMMAS, verify_all
from capelli.identities import symbol_generator_check, verify_classical_capelli, verify_theorem
from capelli.weil import CaseConfig, verify_homomorphism
from capelli.weyl import CommutativePolynomial, WeylElement, apply, monomials_up_to

C_SIZES = [(1, 1, 1, 1), (2, 1, 1, 1), (2, 1, 1, 2), (2, 2, 1, 1), (2, 2, 1, 2), (3, 1, 1, 2)]
R_SIZES = [(1, 1, 1), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 2)]
H_SIZES = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]

RESULTS = {}


@lru_cache(maxsize=None)
def report(theorem, case, *sizes):
    d = sizes[-1]
    cfg = CaseConfig.C(*sizes[:3]) if case == "C" else CaseConfig(case, sizes[0], n=sizes[1])
    return verify_theorem(theorem, cfg, d)


def all_reports(theorems):
    out = []
    for th in theorems:
        sizes = {"C": C_SIZES, "R": R_SIZES, "H": H_SIZES}[th[0]]
        out += [report(th, th[0], *s) for s in sizes]
    return out


def record(num, ok, budget, elapsed, detail):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"{status} criterion {num}: {detail} [{elapsed:.2f} s, budget {budget} s]"
    RESULTS[num] = line
    print(line)
    return status == "PASS"


def criterion_1():
    t0 = time.perf_counter()
    ok = all(verify_classical_capelli(n).equal for n in (1, 2, 3))
    return record(1, ok, 10, time.perf_counter() - t0, "classical Capelli n = 1, 2, 3")


def _case_c(theorem):
    reps = all_reports([theorem])
    readings = sorted({r for rep in reps for r in rep.variant["passing"]})
    three_way = all(rep.equal and rep.checks["omega(X) = rhs"] and rep.variant["passing"] for rep in reps)
    common = [r for r in ("m/2", "n/2") if all(r in rep.variant["passing"] for rep in reps)]
    return three_way, readings, common


def criterion_2():
    t0 = time.perf_counter()
    ok, readings, common = _case_c("C1")
    detail = f"C1 three-way at {len(C_SIZES)} sizes; readings passing everywhere: {common}"
    return record(2, ok and bool(common), 120, time.perf_counter() - t0, detail)


def criterion_3():
    t0 = time.perf_counter()
    ok, readings, common = _case_c("C2")
    sym_ok = True
    for m, p, q in sorted({s[:3] for s in C_SIZES}):
        rep = symbol_generator_check(CaseConfig.C(m, p, q), 2)
        sym_ok &= rep["ok"]
    detail = f"C2 three-way, readings passing everywhere: {common}; C1/C2 symbols d <= 2: {sym_ok}"
    return record(3, ok and bool(common) and sym_ok, 120, time.perf_counter() - t0, detail)


def criterion_4():
    t0 = time.perf_counter()
    reps = all_reports(["R1", "R2"])
    return record(4, all(r.equal for r in reps), 120, time.perf_counter() - t0,
                  f"R1 and R2 at {len(R_SIZES)} sizes")


def criterion_5():
    t0 = time.perf_counter()
    reps = all_reports(["H1", "H2"])
    h2 = [r for r in reps if r.theorem == "H2"]
    common = [x for x in ("factorial", "linear") if all(x in r.variant["passing"] for r in h2)]
    ok = all(r.equal for r in reps) and bool(common)
    return record(5, ok, 300, time.perf_counter() - t0,
                  f"H1 and H2 at {len(H_SIZES)} sizes; H2 denominator passing everywhere: {common}")


def criterion_6():
    t0 = time.perf_counter()
    reps = [verify_cbe_identity(8), verify_b_methods(8, 8), verify_epsilon(5)]
    n = sum(r.checked for r in reps)
    return record(6, all(r.ok for r in reps), 10, time.perf_counter() - t0,
                  f"c = sum b eps, three-way b, eps brute force ({n} exact cases)")


def criterion_7():
    t0 = time.perf_counter()
    ok, count, bad = True, 0, []
    for m in (1, 2, 3):
        for p in (1, 2):
            for q in (1, 2):
                for rep in verify_all(CaseConfig.C(m, p, q)):
                    count += rep.checked
                    if not rep.ok:
                        ok = False
                        bad.append((rep.lemma, m, p, q))
    detail = f"{len(LEMMAS)} lemma families at m <= 3, p, q <= 2 ({count} checks)"
    if bad:
        detail += f"; failing {bad[:3]}"
    return record(7, ok, 120, time.perf_counter() - t0, detail)


def criterion_8():
    t0 = time.perf_counter()
    reps = all_reports(["C1", "C2", "R1", "R2", "H1", "H2"])
    inv = [(r.theorem, r.params, k, v) for r in reps for k, v in r.checks.items() if "invariant" in k]
    has_x = all(any(k.startswith("X invariant") for k in r.checks) for r in reps)
    has_c = all(any(k.startswith("C invariant") for k in r.checks) for r in reps if r.case == "C")
    ok = has_x and has_c and all(v for *_, v in inv)
    return record(8, ok, 300, time.perf_counter() - t0, f"{len(inv)} invariance checks over criteria 2-5 sizes")


def _random_weyl(rng, n):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = tuple(rng.randint(0, 2) for _ in range(2 * n))
        terms[key] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return WeylElement(n, terms)


def criterion_9():
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    ok = True
    for _ in range(200):
        n = rng.randint(1, 2)
        a, b, c = (_random_weyl(rng, n) for _ in range(3))
        ok &= (a * b) * c == a * (b * c)
        deg = a.order() + b.order() + 1
        for e in monomials_up_to(n, deg):
            p = CommutativePolynomial(n, {e: 1})
            ok &= apply(a * b, p) == apply(a, apply(b, p))
    cfgs = sorted({CaseConfig.C(*s[:3]) for s in C_SIZES} | {CaseConfig.R(*s[:2]) for s in R_SIZES}
                  | {CaseConfig.H(*s[:2]) for s in H_SIZES}, key=lambda c: c.label())
    hom = all(verify_homomorphism(c)["ok"] for c in cfgs)
    return record(9, ok and hom, 60, time.perf_counter() - t0,
                  f"200 random Weyl cases; homomorphism at {len(cfgs)} sizes: {hom}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    assert criterion(), RESULTS[int(criterion.__name__.split("_")[1])]
