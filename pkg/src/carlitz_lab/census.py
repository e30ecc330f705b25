"""L-functions of concrete twists over F_q, analytic ranks and vanishing loci."""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import CharPoly, MultiPoly, PrimeField, is_prime, unpack
from .charpoly import char_poly_rev
from .coefficients import d_family, h_table
from .identities import Report
from .matrices import TwistSpec, build_M

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 1 << 22
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class EnumerationTooLarge(ValueError):
    pass


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CARLITZ_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _guard(p: int, m: int) -> None:
    if p ** (m + 1) > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"{p}^{m + 1} points exceeds the enumeration limit 2^22")


def l_function(q: int, n: int, coeffs) -> CharPoly:
    """L(C^n_P, T) = det(I - M T) over F_q[t] for P = sum coeffs[i] theta^i."""
    if not is_prime(q):
        raise ValueError(f"q={q} must be prime")
    coeffs = tuple(coeffs)
    spec = TwistSpec(q, n, len(coeffs) - 1, coeffs, allow_zero_top=True)
    return char_poly_rev(build_M(spec))


def analytic_rank(q: int, n: int, coeffs) -> int:
    """kbar minus the T-degree of the L-function."""
    coeffs = tuple(coeffs)
    kbar = (len(coeffs) - 1 + n) // (q - 1)
    deg = l_function(q, n, coeffs).degree()
    if deg < 0:
        raise ArithmeticError("L-function vanished identically")
    return kbar - deg


def _points(p: int, m: int, exact_degree: bool = False):
    # a_0 varies slowest
    for pt in itertools.product(range(p), repeat=m + 1):
        if exact_degree and pt[-1] == 0:
            continue
        yield pt


def point_label(point, p: int) -> str:
    if p <= len(_DIGITS):
        return "".join(_DIGITS[c] for c in point)
    return ",".join(str(c) for c in point)


@dataclass
class RankCensus:
    q: int
    n: int
    m: int
    exact_degree: bool
    histogram: dict
    ranks: dict | None = field(default=None, repr=False)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    def count_at_least(self, l: int) -> int:
        return sum(c for r, c in self.histogram.items() if r >= l)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["q", "n", "m", "rank", "count"])
        for r in sorted(self.histogram):
            w.writerow([self.q, self.n, self.m, r, self.histogram[r]])
        return buf.getvalue()


def _rank_chunk(args):
    q, n, pts = args
    return [(pt, analytic_rank(q, n, pt)) for pt in pts]


def rank_census(q: int, n: int, m: int, *, exact_degree: bool = False, record: bool = False,
                workers: int | None = None) -> RankCensus:
    """Histogram of analytic ranks over every coefficient vector in F_q^{m+1}."""
    if not is_prime(q):
        raise ValueError(f"q={q} must be prime")
    _guard(q, m)
    pts = list(_points(q, m, exact_degree))
    workers = workers or worker_count()
    if workers > 1 and len(pts) > 64:
        size = -(-len(pts) // (workers * 4))
        chunks = [(q, n, pts[i:i + size]) for i in range(0, len(pts), size)]
        with ProcessPoolExecutor(workers) as ex:
            results = [r for part in ex.map(_rank_chunk, chunks) for r in part]
    else:
        results = _rank_chunk((q, n, pts))
    ranks = dict(results)
    hist = dict(sorted(Counter(ranks.values()).items()))
    return RankCensus(q, n, m, exact_degree, hist, ranks if record else None)


# -- vanishing loci -----------------------------------------------------------

@dataclass(frozen=True)
class SupportSet:
    m: int
    p: int
    points: frozenset

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points

    def labels(self) -> list[str]:
        return sorted(point_label(pt, self.p) for pt in self.points)

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "p": self.p, "points": self.labels()})

    @classmethod
    def from_json(cls, text: str) -> "SupportSet":
        data = json.loads(text)
        p = data["p"]
        pts = set()
        for label in data["points"]:
            if p <= len(_DIGITS):
                pts.add(tuple(_DIGITS.index(ch) for ch in label))
            else:
                pts.add(tuple(int(x) for x in label.split(",")))
        return cls(data["m"], p, frozenset(pts))


def defining_polys(kind: str, m: int, l: int, n: int | None = None) -> list[MultiPoly]:
    """Equations of X(2,n,m,l) (kind 'xq') or X(m,l) (kind 'xm')."""
    if kind == "xq":
        if n is None:
            raise ValueError("kind 'xq' needs n")
        table = h_table(m, n)
        return [table.get(i, j) for i in range(min(l, table.k + 1))
                for j in range(n * (table.k - i) + 1)]
    if kind == "xm":
        D = d_family(m)
        return [D(i) for i in range(l)]
    raise ValueError(f"unknown kind {kind!r}")


def _zeros_gf2(polys: list[MultiPoly], m: int) -> np.ndarray:
    """Boolean mask over point indices (bit i of the index is a_i) of common zeros."""
    size = 1 << (m + 1)
    alive = np.ones(size, dtype=bool)
    for poly in polys:
        # over F_2 only the support of each monomial matters (x^e = x)
        table = np.zeros(size, dtype=np.uint8)
        for key, c in poly.terms.items():
            if c % 2 == 0:
                continue
            exps = unpack(key)
            if 0 in exps:
                raise ValueError("defining polynomials must be free of t")
            mask = 0
            for slot in exps:
                if slot - 1 > m:
                    raise ValueError(f"variable a{slot - 1} outside a0..a{m}")
                mask |= 1 << (slot - 1)
            table[mask] ^= 1
        # subset-sum (zeta) transform mod 2: value at x = sum over s subset of x
        for bit in range(m + 1):
            step = 1 << bit
            view = table.reshape(-1, 2 * step)
            view[:, step:] ^= view[:, :step]
        alive &= table == 0
    return alive


def _zeros_gfp(polys: list[MultiPoly], m: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    pts = np.array(list(itertools.product(range(p), repeat=m + 1)), dtype=np.int64).reshape(-1, m + 1)
    alive = np.ones(len(pts), dtype=bool)
    field_ = PrimeField(p)
    for poly in polys:
        vals = np.zeros(len(pts), dtype=np.int64)
        for key, c in poly.terms.items():
            c = field_(c)
            if not c:
                continue
            term = np.full(len(pts), c, dtype=np.int64)
            for slot, e in unpack(key).items():
                if slot == 0:
                    raise ValueError("defining polynomials must be free of t")
                col = pts[:, slot - 1]
                for _ in range(e):
                    term = term * col % p
            vals = (vals + term) % p
        alive &= vals == 0
    return pts, alive


def common_zeros(polys: list[MultiPoly], m: int, p: int) -> frozenset:
    _guard(p, m)
    if p == 2:
        alive = _zeros_gf2(polys, m)
        return frozenset(tuple((idx >> i) & 1 for i in range(m + 1)) for idx in np.flatnonzero(alive))
    pts, alive = _zeros_gfp(polys, m, p)
    return frozenset(tuple(int(x) for x in row) for row in pts[alive])


def support_points(kind: str, p: int, m: int, l: int, n: int | None = None) -> SupportSet:
    if kind == "xq" and p != 2:
        raise ValueError("X(2,n,m,l) is only enumerated over F_2")
    if not is_prime(p):
        raise ValueError(f"p={p} must be prime")
    _guard(p, m)
    return SupportSet(m, p, common_zeros(defining_polys(kind, m, l, n), m, p))


def support_equality_check(m: int, n: int, l: int) -> Report:
    """Compare X(2,n,m,l)(F_2) with X(m,l)(F_2); a difference is logged loudly."""
    xq = support_points("xq", 2, m, l, n)
    xm = support_points("xm", 2, m, l)
    equal = xq.points == xm.points
    origin = tuple([0] * (m + 1))
    # both loci are cones; compare them away from the zero vector as well
    projective = (xq.points - {origin}) == (xm.points - {origin})
    details = [{"projective_equal": projective, "xm_subset_xq": xm.points <= xq.points}]
    if not equal:
        only_q = sorted(point_label(pt, 2) for pt in xq.points - xm.points)
        only_m = sorted(point_label(pt, 2) for pt in xm.points - xq.points)
        details[0].update(only_in_xq=only_q[:20], only_in_xm=only_m[:20])
        log.warning("SUPPORT MISMATCH m=%d n=%d l=%d: |X(2,n,m,l)|=%d |X(m,l)|=%d",
                    m, n, l, len(xq), len(xm))
    return Report("support_equality", {"m": m, "n": n, "l": l, "size_xq": len(xq), "size_xm": len(xm)},
                  equal, details=details)
