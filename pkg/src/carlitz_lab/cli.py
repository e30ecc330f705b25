"""Command-line entry point: ``carlitz-lab <subcommand> ...``.

Exit codes: 0 when every check holds, 1 when a mathematical check fails,
2 for usage errors and guard violations.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import parse_poly
from .census import (
    EnumerationTooLarge,
    analytic_rank,
    l_function,
    rank_census,
    support_equality_check,
    support_points,
    worker_count,
)
from .charpoly import OrderTooLarge
from .coefficients import d_family, h_table
from .identities import (
    PERM_LIMIT,
    Report,
    trivial_factor_symbolic,
    verify_b_lemmas,
    verify_ehbauer,
    verify_known_gl16,
    verify_lemma11,
    verify_perm_counting,
    verify_perm_identity,
    verify_h112_paths,
    verify_sarraf,
    verify_trivial_factor,
)
from .matrices import NonTrivialPartUndefined
from .membership import ideal_membership_linear

SUITES = ("sarraf", "ehbauer", "blemmas", "permident", "known", "trivial-factor")
GENERIC_PERM_LIMIT = 5
TRIVIAL_POINTS = 50


class UsageError(Exception):
    pass


# -- verification jobs --------------------------------------------------------

def _suite_domain(suite: str, m: int) -> bool:
    if suite == "sarraf":
        return m >= 3
    if suite in ("ehbauer", "blemmas"):
        return m >= 2
    if suite == "permident":
        return 2 <= m <= PERM_LIMIT + 1
    return m >= 1


def _trivial_reports(m: int, seed: int) -> list[Report]:
    out = [trivial_factor_symbolic(2, n, m) for n in range(3)]
    for q in (2, 3):
        for n in range(3):
            if (m + n) % (q - 1):
                continue
            rng = random.Random(f"{seed}:{q}:{n}:{m}")
            failed = []
            for _ in range(TRIVIAL_POINTS):
                point = tuple(rng.randrange(q) for _ in range(m + 1))
                if not verify_trivial_factor(q, n, m, point).holds:
                    failed.append("".join(map(str, point)))
            out.append(Report("trivial_factor", {"q": q, "n": n, "m": m, "mode": "points",
                                                 "points": TRIVIAL_POINTS, "seed": seed},
                              not failed, details=failed))
    return out


def run_suite(suite: str, m: int, seed: int = 0) -> list[Report]:
    """All reports for one (suite, m) pair."""
    if suite == "sarraf":
        return [verify_sarraf(m)]
    if suite == "ehbauer":
        return [verify_ehbauer(m)]
    if suite == "blemmas":
        return verify_b_lemmas(m) + [verify_h112_paths(m)]
    if suite == "permident":
        out = [verify_perm_identity(m - 1, "carlitz", m=m), verify_perm_counting(m), verify_lemma11(m)]
        if m - 1 <= GENERIC_PERM_LIMIT:
            out.append(verify_perm_identity(m - 1, "generic-random", trials=100, seed=seed))
        return out
    if suite == "known":
        return [r for n in (1, 2, 3) for r in verify_known_gl16(m, n)]
    if suite == "trivial-factor":
        return _trivial_reports(m, seed)
    raise UsageError(f"unknown suite {suite!r}")


def _run_job(job):
    return run_suite(*job)


def run_batch(jobs: list[tuple], workers: int | None = None) -> list[Report]:
    """Run jobs, in parallel when asked; results keep the job order."""
    workers = workers or worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_run_job, jobs))
    else:
        parts = [_run_job(j) for j in jobs]
    return [r for part in parts for r in part]


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if lo > hi or lo < 0:
        raise UsageError(f"bad range {text!r}")
    return range(lo, hi + 1)


# -- output helpers -----------------------------------------------------------

def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _fmt(args, default: str) -> str:
    return args.format or default


# -- subcommands --------------------------------------------------------------

def cmd_hpoly(args) -> int:
    if args.m < 1 or args.n < 0:
        raise UsageError(f"need m >= 1 and n >= 0 (k = m + n - 1 = {args.m + args.n - 1})")
    table = h_table(args.m, args.n)
    if args.i is None and args.j is None:
        if _fmt(args, "json") == "json":
            _emit(table.to_dict())
        else:
            for i, j in table.indices():
                print(f"H[{i},{j}] = {table.get(i, j).render()}")
        return 0
    if args.i is None or args.j is None:
        raise UsageError("--i and --j go together")
    if not 0 <= args.i <= table.k or not 0 <= args.j <= args.n * (table.k - args.i):
        raise UsageError(f"(i, j) = ({args.i}, {args.j}) outside 0 <= i <= {table.k}, 0 <= j <= n(k - i)")
    poly = table.get(args.i, args.j).render()
    if _fmt(args, "text") == "json":
        _emit({"m": args.m, "n": args.n, "i": args.i, "j": args.j, "poly": poly})
    else:
        print(poly)
    return 0


def cmd_dpoly(args) -> int:
    if args.m < 1:
        raise UsageError("need m >= 1")
    D = d_family(args.m)
    if args.i is not None:
        if not 0 <= args.i < args.m:
            raise UsageError(f"i must lie in 0..{args.m - 1}")
        if _fmt(args, "text") == "json":
            _emit({"m": args.m, "i": args.i, "poly": D(args.i).render(), "eps": D.eps[args.i]})
        else:
            print(D(args.i).render())
        return 0
    if _fmt(args, "json") == "json":
        _emit(D.to_dict())
    else:
        for i in range(args.m):
            print(f"D[{i}] = {D(i).render()}")
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    if any(s not in SUITES for s in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    ms = parse_range(args.m_range)
    jobs = [(s, m, args.seed) for s in names for m in ms if _suite_domain(s, m)]
    if not jobs:
        raise UsageError(f"no m in {args.m_range} is valid for suite {args.suite}")
    reports = run_batch(jobs)
    ok = all(r.holds for r in reports)
    if _fmt(args, "text") == "json":
        _emit({"suite": args.suite, "m_range": args.m_range, "all_hold": ok,
               "reports": [r.to_dict(args.verbose) for r in reports]})
    else:
        for r in reports:
            print(r.line())
            if r.resolved_signs and args.verbose:
                print(f"  signs {json.dumps(r.resolved_signs)}")
        print(f"{'ALL PASS' if ok else 'FAILURES'}: {sum(r.holds for r in reports)}/{len(reports)}")
    return 0 if ok else 1


def cmd_census(args) -> int:
    census = rank_census(args.q, args.n, args.m, exact_degree=args.exact_degree)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(census.to_csv())
    if _fmt(args, "text") == "json":
        _emit({"q": census.q, "n": census.n, "m": census.m, "exact_degree": census.exact_degree,
               "total": census.total, "histogram": {str(r): c for r, c in census.histogram.items()}})
    else:
        print(f"q={census.q} n={census.n} m={census.m} points={census.total}"
              + (" exact-degree" if census.exact_degree else ""))
        for r, c in census.histogram.items():
            print(f"rank {r}: {c}")
    return 0


def cmd_support(args) -> int:
    if args.m < 1:
        raise UsageError("need m >= 1")
    if args.compare:
        report = support_equality_check(args.m, args.n, args.l)
        if _fmt(args, "text") == "json":
            _emit(report.to_dict(verbose=True))
        else:
            print(report.line())
            for key, val in report.details[0].items():
                print(f"  {key}: {val}")
        return 0 if report.holds else 1
    sset = support_points(args.kind, args.p, args.m, args.l, args.n)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(sset.to_json() + "\n")
    if _fmt(args, "json") == "json":
        print(sset.to_json())
    else:
        print(f"{len(sset)} points")
        for label in sset.labels():
            print(label)
    return 0


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"bad coefficient list {text!r}; expected e.g. 1,0,1") from None


def cmd_lfun(args) -> int:
    coeffs = _parse_coeffs(args.coeffs)
    L = l_function(args.q, args.n, coeffs)
    rank = analytic_rank(args.q, args.n, coeffs)
    if _fmt(args, "text") == "json":
        _emit({"q": args.q, "n": args.n, "coeffs": list(coeffs),
               "L": [c.render() for c in L.coeffs], "rank": rank})
    else:
        print(f"L = {L.render()}")
        print(f"rank = {rank}")
    return 0


def _member_problem(args):
    if args.preset:
        if args.m is None or args.m < 1:
            raise UsageError("--preset needs --m >= 1")
        D = d_family(args.m)
        if args.preset == "h0j":
            if args.j is None or not 0 <= args.j <= args.m:
                raise UsageError(f"--preset h0j needs 0 <= --j <= {args.m}")
            return h_table(args.m, 1).get(0, args.j), [D(0)], 1
        if args.preset == "ehbauer":
            if args.m < 2:
                raise UsageError("--preset ehbauer needs m >= 2")
            return h_table(args.m, 2).proof_convention(1, 1), [D(0), D(1)], 2
        return D(0), [D(0)], 0
    if not args.target or not args.basis:
        raise UsageError("give --target and --basis, or --preset")
    try:
        target = parse_poly(args.target)
        basis = [parse_poly(b) for b in args.basis]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return target, basis, args.max_deg


def cmd_member(args) -> int:
    target, basis, max_deg = _member_problem(args)
    if args.max_deg is not None:
        max_deg = args.max_deg
    cert = ideal_membership_linear(target, basis, max_deg)
    if _fmt(args, "text") == "json":
        _emit({"target": target.render(), "basis": [b.render() for b in basis], "max_deg": max_deg,
               "found": cert is not None,
               "cofactors": cert.render() if cert else None,
               "syzygies": [[c.render() for c in s] for s in cert.syzygies] if cert else None})
    elif cert is None:
        print("no certificate")
    else:
        for b, c in zip(basis, cert.cofactors):
            print(f"({c.render()}) * ({b.render()})")
        if cert.syzygies:
            print(f"solution not unique: {len(cert.syzygies)} syzygies")
    return 0 if cert is not None else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="carlitz-lab", description="Carlitz twist L-function toolkit")
    p.add_argument("--format", choices=("json", "text"), default=None,
                   help="output format (each command has its own default)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--verbose", action="store_true", help="include both sides of every identity")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hpoly", parents=[common], help="H_{i,j,n}(m) polynomials")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int)
    s.add_argument("--j", type=int)
    s.set_defaults(func=cmd_hpoly)

    s = sub.add_parser("dpoly", parents=[common], help="D(m, i) polynomials")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--i", type=int)
    s.set_defaults(func=cmd_dpoly)

    s = sub.add_parser("verify", parents=[common], help="run identity suites")
    s.add_argument("--suite", required=True)
    s.add_argument("--m-range", default="2..6")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", parents=[common], help="analytic-rank histogram over F_q")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--exact-degree", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("support", parents=[common], help="F_p points of X(2,n,m,l) or X(m,l)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--kind", choices=("xq", "xm"), default="xm")
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--compare", action="store_true", help="compare X(2,n,m,l) with X(m,l) over F_2")
    s.add_argument("--out")
    s.set_defaults(func=cmd_support)

    s = sub.add_parser("lfun", parents=[common], help="L-function and rank of one twist")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--coeffs", required=True, help="a_0,...,a_m")
    s.set_defaults(func=cmd_lfun)

    s = sub.add_parser("member", parents=[common], help="linear ideal-membership certificate")
    s.add_argument("--target")
    s.add_argument("--basis", action="append")
    s.add_argument("--max-deg", type=int)
    s.add_argument("--preset", choices=("h0j", "ehbauer", "reflexive"))
    s.add_argument("--m", type=int)
    s.add_argument("--j", type=int)
    s.set_defaults(func=cmd_member)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "member" and not args.preset and args.max_deg is None:
        args.max_deg = 2
    try:
        return args.func(args)
    except (UsageError, EnumerationTooLarge, NonTrivialPartUndefined, OrderTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
