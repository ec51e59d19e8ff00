"""Command-line front end.

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage error,
3 refused by the term-count guard.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import coeffs
from .identities import (DENOMINATOR_READINGS, PROPOSITIONS, SHIFT_READINGS, THEOREM_IDS,
                         ResourceLimitExceeded, default_limit, estimate_terms, symbol_generator_check,
                         verify_theorem)
from .weil import CaseConfig, verify_homomorphism

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3

# (theorem, case, sizes, d) for every configuration named in the acceptance criteria
DESK_C = [(1, 1, 1, 1), (2, 1, 1, 1), (2, 1, 1, 2), (2, 2, 1, 1), (2, 2, 1, 2), (3, 1, 1, 2)]
DESK_R = [(1, 1, 1), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 2)]
DESK_H = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]


def desk_tasks():
    tasks = [("Classical", None, n) for n in (1, 2, 3)]
    for th in ("C1", "C2"):
        tasks += [(th, ("C", m, p, q), d) for m, p, q, d in DESK_C]
    for th in ("R1", "R2"):
        tasks += [(th, ("R", m, n), d) for m, n, d in DESK_R]
    for th in ("H1", "H2"):
        tasks += [(th, ("H", m, n), d) for m, n, d in DESK_H]
    return tasks


@dataclass
class RunConfig:
    command: str
    theorem: str | None = None
    case: str | None = None
    m: int | None = None
    n: int | None = None
    p: int | None = None
    q: int | None = None
    d: int | None = None
    fmt: str = "text"
    out: str | None = None
    limit: int = field(default_factory=default_limit)
    shift: str | None = None
    denominator: str | None = None
    invariance: bool = True
    timing: bool = True
    jobs: int = 0
    preset: str | None = None

    def case_config(self) -> CaseConfig:
        case = self.case or (self.theorem[0] if self.theorem and self.theorem[0] in "CRH" else "C")
        if self.theorem in PROPOSITIONS:
            case = "C"
        if case == "C":
            return CaseConfig.C(_need(self.m, "m"), _need(self.p, "p"), _need(self.q, "q"))
        return CaseConfig(case, _need(self.m, "m"), n=_need(self.n, "n"))


class UsageError(Exception):
    pass


def _need(v, name):
    if v is None:
        raise UsageError(f"--{name} is required")
    return v


def _make_cfg(sizes):
    if sizes is None:
        return None
    if sizes[0] == "C":
        return CaseConfig.C(*sizes[1:])
    return CaseConfig(sizes[0], sizes[1], n=sizes[2])


def _run_task(task, shift=None, denominator=None, limit=None, invariance=True):
    theorem, sizes, d = task
    try:
        rep = verify_theorem(theorem, _make_cfg(sizes), d, shift=shift, denominator=denominator,
                             limit=limit, check_invariance=invariance)
        return rep.to_json(), rep.summary()
    except ResourceLimitExceeded as exc:
        return {"theorem": theorem, "refused": True, "estimate": exc.estimate, "limit": exc.limit}, \
            f"REFUSED {theorem} {sizes} d={d}: {exc}"


def _emit(rc: RunConfig, payload, lines):
    if rc.fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if rc.out:
        with open(rc.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: (0 if k == "elapsedMs" else _strip_timing(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def cmd_verify(rc: RunConfig) -> int:
    if rc.preset:
        if rc.preset != "desk":
            raise UsageError(f"unknown preset {rc.preset!r}")
        tasks = desk_tasks()
        jobs = rc.jobs or os.cpu_count() or 1
        kw = dict(shift=rc.shift, denominator=rc.denominator, limit=rc.limit, invariance=rc.invariance)
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = list(pool.map(_run_task, tasks, *[[v] * len(tasks) for v in kw.values()]))
        else:
            results = [_run_task(t, **kw) for t in tasks]
        payload = [r[0] for r in results]
        lines = [r[1] for r in results]
    else:
        if not rc.theorem:
            raise UsageError("--theorem or --preset is required")
        if rc.theorem == "Classical":
            task = ("Classical", None, _need(rc.n, "n"))
        else:
            cfg = rc.case_config()
            sizes = ("C", cfg.m, cfg.p, cfg.q) if cfg.case == "C" else (cfg.case, cfg.m, cfg.n)
            task = (rc.theorem, sizes, _need(rc.d, "d"))
        payload, line = _run_task(task, rc.shift, rc.denominator, rc.limit, rc.invariance)
        lines = [line]
        results = [(payload, line)]
    if not rc.timing:
        payload = _strip_timing(payload)
        lines = [re.sub(r" \[\d+ ms\]$", "", ln) for ln in lines]
    _emit(rc, payload, lines)
    if any(r[0].get("refused") for r in results):
        return EXIT_REFUSED
    return EXIT_OK if all(r[0].get("equal") for r in results) else EXIT_FAIL


def cmd_lemmas(rc: RunConfig, args) -> int:
    suite = args.suite
    reports = []
    if suite == "coeffs":
        dmax = args.max_d
        reports = [coeffs.verify_cbe_identity(dmax), coeffs.verify_b_methods(dmax, dmax),
                   coeffs.verify_epsilon(args.pq_max), coeffs.verify_intermediate(min(dmax, 6))]
        payload = [r.to_dict() for r in reports]
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.checked} cases)" for r in reports]
    elif suite == "exterior":
        from .exterior import verify_all
        cfg = CaseConfig.C(rc.m or 2, rc.p or 1, rc.q or 1)
        reports = verify_all(cfg)
        payload = [r.to_dict() for r in reports]
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.lemma} {cfg.label()} ({r.checked} checks)" for r in reports]
    elif suite == "weil":
        if rc.case:
            cfgs = [rc.case_config()]
        else:
            cfgs = [CaseConfig.C(2, 1, 1), CaseConfig.R(2, 2), CaseConfig.H(1, 2)]
        payload = [verify_homomorphism(c) for c in cfgs]
        lines = [f"{'PASS' if r['ok'] else 'FAIL'} homomorphism {r['case']}" for r in payload]
        reports = payload
    elif suite == "symbols":
        cfg = rc.case_config()
        payload = [symbol_generator_check(cfg, args.max_d)]
        lines = [f"{'PASS' if payload[0]['ok'] else 'FAIL'} symbols {cfg.label()} {payload[0]['checks']}"]
        reports = payload
    else:
        raise UsageError(f"unknown suite {suite!r}")
    _emit(rc, payload, lines)
    ok = all((r["ok"] if isinstance(r, dict) else r.ok) for r in reports)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tables(rc: RunConfig, args) -> int:
    rows = coeffs.table(args.table, args.max)
    if rc.fmt == "json":
        _emit(rc, rows, [])
    else:
        keys = [k for k in rows[0] if k != "value"] if rows else []
        lines = [" ".join(f"{k}={r[k]}" for k in keys) + f"  {r['value']}" for r in rows]
        _emit(rc, rows, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="capelli", description="Exact verification of Capelli identities for symmetric pairs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        p.add_argument("--out")
        p.add_argument("--no-timing", dest="timing", action="store_false",
                       help="zero elapsedMs so reports are byte-reproducible")

    def sizes(p):
        p.add_argument("--case", choices=("C", "R", "H"))
        for name in ("m", "n", "p", "q"):
            p.add_argument(f"--{name}", type=int)

    v = sub.add_parser("verify", help="verify a theorem, proposition or the classical identity")
    v.add_argument("--theorem", choices=THEOREM_IDS + ("classical",))
    sizes(v)
    v.add_argument("--d", type=int)
    v.add_argument("--limit", type=int, default=None, help="term-count guard (env CAPELLI_TERM_LIMIT)")
    v.add_argument("--shift", choices=SHIFT_READINGS, help="C_d shift reading; default tries both")
    v.add_argument("--denominator", choices=DENOMINATOR_READINGS, help="H2 weight reading; default tries both")
    v.add_argument("--no-invariance", dest="invariance", action="store_false")
    v.add_argument("--jobs", type=int, default=0)
    v.add_argument("--preset", choices=("desk",))
    common(v)

    lm = sub.add_parser("lemmas", help="run a lemma or coefficient suite")
    lm.add_argument("--suite", required=True, choices=("exterior", "coeffs", "weil", "symbols"))
    sizes(lm)
    lm.add_argument("--max-d", type=int, default=8)
    lm.add_argument("--pq-max", type=int, default=5)
    common(lm)

    tb = sub.add_parser("tables", help="dump coefficient tables")
    tb.add_argument("--table", required=True, choices=("c", "b", "eps"))
    tb.add_argument("--max", type=int, default=4)
    common(tb)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    theorem = getattr(args, "theorem", None)
    if theorem == "classical":
        theorem = "Classical"
    rc = RunConfig(command=args.command, theorem=theorem, case=getattr(args, "case", None),
                   m=getattr(args, "m", None), n=getattr(args, "n", None), p=getattr(args, "p", None),
                   q=getattr(args, "q", None), d=getattr(args, "d", None), fmt=args.fmt, out=args.out,
                   timing=args.timing, shift=getattr(args, "shift", None),
                   denominator=getattr(args, "denominator", None),
                   invariance=getattr(args, "invariance", True), jobs=getattr(args, "jobs", 0),
                   preset=getattr(args, "preset", None))
    if getattr(args, "limit", None) is not None:
        rc.limit = args.limit
    try:
        if args.command == "verify":
            return cmd_verify(rc)
        if args.command == "lemmas":
            return cmd_lemmas(rc, args)
        return cmd_tables(rc, args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"capelli: error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitExceeded as exc:
        sys.stderr.write(f"capelli: refused: {exc}\n")
        return EXIT_REFUSED


__all__ = ["main", "build_parser", "RunConfig", "desk_tasks", "estimate_terms", "asdict"]
