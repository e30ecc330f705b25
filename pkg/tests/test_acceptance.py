"""Acceptance criteria 1-10, checked literally.

Each test records one line in RESULTS; the conftest hook prints them after
the run, and ``python3 tests/test_acceptance.py`` prints them directly.

Pinned tolerances: every symbolic comparison is exact (zero tolerance);
wall-clock limits are 60 s per m for criterion 1 and 120 s per m for
criterion 2; random draws use the fixed seeds below.
"""

from __future__ import annotations

import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from carlitz_lab.algebra import MultiPoly, parse_poly  # noqa: E402
from carlitz_lab.census import rank_census, support_equality_check, support_points  # noqa: E402
from carlitz_lab.charpoly import det, det_oracle_cofactor  # noqa: E402
from carlitz_lab.cli import main as cli_main  # noqa: E402
from carlitz_lab.coefficients import d_family, h_table  # noqa: E402
from carlitz_lab.identities import (  # noqa: E402
    b11_21,
    b1u_1,
    ehbauer_lhs,
    trivial_factor_symbolic,
    verify_b_lemmas,
    verify_ehbauer,
    verify_known_gl16,
    verify_lemma11,
    verify_perm_identity,
    verify_h112_paths,
    verify_sarraf,
    verify_trivial_factor,
)
from carlitz_lab.matrices import PolyMatrix, TwistSpec, build_B, build_M_nt  # noqa: E402
from carlitz_lab.membership import ideal_membership_linear  # noqa: E402
from fixtures import B_TABLE, M_P24, QUADRUPLE  # noqa: E402

SARRAF_LIMIT_S = 60.0
EHBAUER_LIMIT_S = 120.0
PERM_SEED = 0
ORACLE_SEED = 20240101
POINT_SEED = 7
POINTS_PER_FIELD = 50

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, note: str) -> None:
    RESULTS[n] = (ok, note)


def summary_lines() -> list[str]:
    return [f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {note}" for n, (ok, note) in sorted(RESULTS.items())]


def _fresh_caches():
    h_table.cache_clear()
    d_family.cache_clear()


# 1 ---------------------------------------------------------------------------

def test_criterion_01_sarraf(capsys):
    _fresh_caches()
    times, failed = {}, []
    for m in range(3, 13):
        start = time.perf_counter()
        if not verify_sarraf(m).holds:
            failed.append(m)
        times[m] = time.perf_counter() - start
    code = cli_main(["verify", "--suite", "sarraf", "--m-range", "3..12"])
    out = capsys.readouterr().out
    passes = sum(line.startswith("PASS sarraf") for line in out.splitlines())
    slow = [m for m, s in times.items() if s >= SARRAF_LIMIT_S]
    ok = not failed and not slow and code == 0 and passes == 10
    record(1, ok, f"m=3..12 exact; slowest m=12 {times[12]:.1f}s (limit {SARRAF_LIMIT_S:.0f}s); "
                  f"cli exit {code}, {passes} PASS lines")
    assert ok, (failed, slow, code, passes)


# 2 ---------------------------------------------------------------------------

def test_criterion_02_ehbauer():
    _fresh_caches()
    times, failed = {}, []
    for m in range(2, 11):
        start = time.perf_counter()
        if not verify_ehbauer(m).holds:
            failed.append(m)
        times[m] = time.perf_counter() - start
    slow = [m for m, s in times.items() if s >= EHBAUER_LIMIT_S]
    ok = not failed and not slow
    record(2, ok, f"m=2..10 exact; m=10 took {times[10]:.1f}s (limit {EHBAUER_LIMIT_S:.0f}s)")
    assert ok, (failed, slow)


# 3 ---------------------------------------------------------------------------

def test_criterion_03_b_machinery():
    failed = []
    for m in range(2, 9):
        for r in verify_b_lemmas(m) + [verify_h112_paths(m)]:
            if not r.holds:
                failed.append(r.line())
    ok = not failed
    record(3, ok, "six B-matrix identities and h112_via_B = H_{1,1,2} for m=2..8"
                  + ("" if ok else f"; failures {failed}"))
    assert ok, failed


# 4 ---------------------------------------------------------------------------

def test_criterion_04_table_fixtures():
    mismatched = [f"B{key}" for key, rows in sorted(B_TABLE.items()) if build_B(3, *key).render() != rows]
    if build_M_nt(TwistSpec(2, 2, 3)).render() != M_P24:
        mismatched.append("M(P,2,4)")
    quad_ok = b11_21(4).render() == QUADRUPLE["b11_21"] and all(
        b1u_1(4, u).render() == QUADRUPLE[u] for u in (2, 3, 4))
    lhs = det_oracle_cofactor(PolyMatrix.from_strings(QUADRUPLE["b11_21"]))
    rhs = sum((det_oracle_cofactor(PolyMatrix.from_strings(QUADRUPLE[u])) for u in (2, 3, 4)), MultiPoly.zero())
    quad_ok = quad_ok and lhs == rhs
    ok = not mismatched and quad_ok
    note = f"12 B matrices + M(P,2,4): {13 - len(mismatched)}/13 match; m=4 quadruple {'matches' if quad_ok else 'differs'}"
    if mismatched:
        note += (f"; mismatch {mismatched}: displayed entry (2,3)=a3, construction gives 0, "
                 "as does the displayed M(P,2,4)_3; both determinants equal a0^2*a2")
    record(4, ok, note)
    assert ok, mismatched


# 5 ---------------------------------------------------------------------------

def test_criterion_05_permutation_identity():
    failed = []
    for n in range(1, 6):
        r = verify_perm_identity(n, "generic-random", trials=100, seed=PERM_SEED + n)
        if not r.holds:
            failed.append(f"generic n={n}")
    for m in range(2, 8):
        if not verify_perm_identity(m - 1, "carlitz", m=m).holds:
            failed.append(f"carlitz m={m}")
        if not verify_lemma11(m).holds:
            failed.append(f"perm_shapes m={m}")
    ok = not failed
    record(5, ok, "generic n=1..5 x 100 seeded trials; carlitz_alpha m=2..7 all sigma; M(r,sigma)/M(c,sigma) shapes m=2..7"
                  + ("" if ok else f"; failures {failed}"))
    assert ok, failed


# 6 ---------------------------------------------------------------------------

def test_criterion_06_known_identities():
    h0j_signs, failed = set(), []
    for m in range(1, 10):
        for n in (1, 2, 3):
            for r in verify_known_gl16(m, n):
                if not r.holds:
                    failed.append(r.line())
                if r.identity == "known_h0j":
                    for key, found in r.resolved_signs.items():
                        j = int(key.split("=")[1])
                        if len(found) != 1:
                            failed.append(f"h0j m={m} {key} ambiguous {found}")
                        else:
                            h0j_signs.add((j % 2, found[0]))
    consistent = h0j_signs == {(0, "+"), (1, "-")}
    ok = not failed and consistent
    record(6, ok, "H_{0,j,1} = (-1)^j a_j D(m,0) for every m<=9, j<=m; low/top identities resolved for m<=9, n<=3 "
                  "(per-index signs via `carlitz-lab verify --suite known --format json`)"
                  + ("" if ok else f"; problems {failed[:5]} signs {sorted(h0j_signs)}"))
    assert ok


# 7 ---------------------------------------------------------------------------

def _random_matrix(rng, order):
    names = ["t", "a0", "a1", "a2"]
    rows = []
    for _ in range(order):
        row = []
        for _ in range(order):
            acc = MultiPoly.zero()
            for _ in range(rng.randint(0, 3)):
                mono = MultiPoly.const(rng.randint(-3, 3))
                for v in names:
                    mono = mono * MultiPoly.var(v) ** rng.randint(0, 1)
                acc = acc + mono
            row.append(acc)
        rows.append(row)
    return PolyMatrix(rows)


def test_criterion_07_determinant_oracle():
    rng = random.Random(ORACLE_SEED)
    bad = []
    for trial in range(100):
        M = _random_matrix(rng, rng.randint(1, 6))
        if det(M) != det_oracle_cofactor(M):
            bad.append(trial)
    ok = not bad
    record(7, ok, f"100 seeded matrices (seed {ORACLE_SEED}) of order 1..6: {100 - len(bad)} agree")
    assert ok, bad


# 8 ---------------------------------------------------------------------------

def test_criterion_08_trivial_factor():
    failed = []
    for n in range(3):
        for m in range(0, 7):
            if m + n == 0:
                continue
            if not trivial_factor_symbolic(2, n, m).holds:
                failed.append(f"symbolic n={n} m={m}")
    rng = random.Random(POINT_SEED)
    for q in (2, 3):
        done = 0
        while done < POINTS_PER_FIELD:
            n, m = rng.randint(0, 2), rng.randint(0, 6)
            if m + n == 0 or (m + n) % (q - 1):
                continue
            point = tuple(rng.randrange(q) for _ in range(m + 1))
            if not verify_trivial_factor(q, n, m, point).holds:
                failed.append(f"q={q} n={n} m={m} point={point}")
            done += 1
    ok = not failed
    record(8, ok, f"symbolic q=2 n<=2 m<=6; {POINTS_PER_FIELD} seeded points each over F2, F3 (seed {POINT_SEED})"
                  + ("" if ok else f"; failures {failed[:5]}"))
    assert ok, failed


# 9 ---------------------------------------------------------------------------

def test_criterion_09_census_coherence():
    census_bad, support_bad = [], []
    exact_ok, proj_n1_ok, contain_ok = True, True, True
    for m in range(1, 9):
        for n in (1, 2):
            full = rank_census(2, n, m)
            exact = rank_census(2, n, m, exact_degree=True)
            for l in range(0, m + 1):
                pts = support_points("xq", 2, m, l, n).points
                if full.count_at_least(l) != len(pts):
                    census_bad.append((m, n, l))
                if exact.count_at_least(l) != sum(1 for p in pts if p[-1] == 1):
                    exact_ok = False
                if l == 0:
                    continue
                r = support_equality_check(m, n, l)
                if not r.holds:
                    support_bad.append((m, n, l))
                if n == 1 and not r.details[0]["projective_equal"]:
                    proj_n1_ok = False
                if not r.details[0]["xm_subset_xq"]:
                    contain_ok = False
    n2 = sum(1 for c in support_bad if c[1] == 2)
    n1 = [c for c in support_bad if c[1] == 1]
    ok = not census_bad and not support_bad
    note = (f"rank-count vs |X(2,n,m,l)| mismatches {len(census_bad)} of {sum(2 * (m + 1) for m in range(1, 9))}; "
            f"support inequality at {len(support_bad)} (m,n,l): {n2} with n=2, n=1 only at l=m {sorted(n1)[:3]}...; "
            f"exact-degree counts agree: {exact_ok}; n=1 projective equality: {proj_n1_ok}; "
            f"X(m,l) inside X(2,n,m,l): {contain_ok}")
    record(9, ok, note)
    assert ok, note


# 10 --------------------------------------------------------------------------

def test_criterion_10_membership():
    failed = []
    expected = [parse_poly("-2*a0 - 2*a1"), parse_poly("-2*a0^2")]
    for m in range(1, 7):
        D = d_family(m)
        for j in range(m + 1):
            cert = ideal_membership_linear(h_table(m, 1).get(0, j), [D(0)], 1)
            if cert is None or cert.cofactors[0] not in (MultiPoly.a(j), -MultiPoly.a(j)):
                failed.append(f"h0j m={m} j={j}")
        if m >= 2:
            cert = ideal_membership_linear(ehbauer_lhs(m), [D(0), D(1)], 2)
            if cert is None or list(cert.cofactors) != expected:
                failed.append(f"thm3 m={m}")
    ok = not failed
    record(10, ok, "H_{0,j,1} cofactor +/-a_j for m=1..6; cofactors (-2*a0 - 2*a1, -2*a0^2) for m=2..6 "
                   "(unique for m>=4)" + ("" if ok else f"; failures {failed}"))
    assert ok, failed


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
