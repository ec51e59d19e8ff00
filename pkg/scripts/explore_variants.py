"""Tabulate which documented readings pass, size by size.

Covers the C_d shift (m/2 vs n/2), the H2 denominator (factorial vs linear)
and the H1 splitting convention (distinct vs positional).
"""

import argparse

from capelli.identities import verify_theorem
from capelli.weil import CaseConfig


def shift_rows(max_m):
    for m in range(1, max_m + 1):
        for p in (1, 2):
            for q in (1, 2):
                for d in range(1, min(m, 2) + 1):
                    cfg = CaseConfig.C(m, p, q)
                    for th in ("C1", "C2"):
                        rep = verify_theorem(th, cfg, d, check_invariance=False)
                        yield th, cfg.label(), d, rep.variant["passing"]


def h_rows(max_m, max_n):
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for d in (1, 2):
                if m == 2 and d == 2:
                    continue
                cfg = CaseConfig.H(m, n)
                for th in ("H1", "H2"):
                    rep = verify_theorem(th, cfg, d, check_invariance=False)
                    yield th, cfg.label(), d, rep.variant["passing"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=2)
    args = ap.parse_args(argv)
    for th, label, d, passing in list(shift_rows(args.max_m)) + list(h_rows(min(args.max_m, 2), args.max_n)):
        print(f"{th:3} {label:18} d={d}  passing: {', '.join(passing) or 'none'}")


if __name__ == "__main__":
    main()
