"""The coefficient families H_{i,j,n}(m) and D(m, i) (always q = 2).

H_{i,j,n}(m) is the coefficient of t^j T^(k-i) in det(I - M_nt T), where
M_nt is the k x k non-trivial block for tensor power n and k = m + n - 1.

D(m, i) is defined as the coefficient of (-U)^i in det(M_nt(n=0) - U I).
That differs from H_{i,0,0}(m) by the sign (-1)^(m-1-i); the measured sign
is reported in ``DFamily.eps`` rather than assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import ZZ, MultiPoly
from .charpoly import char_poly_rev
from .matrices import TwistSpec, build_M_nt


@dataclass(frozen=True)
class HTable:
    m: int
    n: int
    k: int
    entries: dict = field(repr=False)

    def get(self, i: int, j: int) -> MultiPoly:
        """H_{i,j,n}(m); zero for (i, j) outside the stored range."""
        return self.entries.get((i, j), MultiPoly.zero())

    def proof_convention(self, i: int, j: int) -> MultiPoly:
        """t^j part of the coefficient of (-U)^i in det(M_nt - U I)."""
        h = self.get(i, j)
        return h if (self.k - i) % 2 == 0 else -h

    def row(self, i: int) -> list[MultiPoly]:
        return [self.get(i, j) for j in range(self.n * (self.k - i) + 1)]

    def indices(self):
        return sorted(self.entries)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "entries": [{"i": i, "j": j, "poly": self.entries[(i, j)].render()}
                        for i, j in self.indices()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "HTable":
        from .algebra import parse_poly

        data = json.loads(text)
        entries = {(e["i"], e["j"]): parse_poly(e["poly"]) for e in data["entries"]}
        return cls(data["m"], data["n"], data["k"], entries)


@lru_cache(maxsize=64)
def h_table(m: int, n: int) -> HTable:
    if m < 1 or n < 0:
        raise ValueError(f"h_table needs m >= 1 and n >= 0 (got m={m}, n={n})")
    k = m + n - 1
    cp = char_poly_rev(build_M_nt(TwistSpec(2, n, m)))
    entries = {}
    for i in range(k + 1):
        parts = cp[k - i].t_coefficients()
        for j in range(n * (k - i) + 1):
            entries[(i, j)] = parts[j] if j < len(parts) else MultiPoly.zero()
        if len(parts) > n * (k - i) + 1:
            raise AssertionError(f"T^{k - i} coefficient has t-degree above n(k-i)")
    return HTable(m, n, k, entries)


@dataclass(frozen=True)
class DFamily:
    m: int
    polys: tuple
    eps: tuple  # eps[i] * D(m,i) == H_{i,0,0}(m)

    def __call__(self, i: int) -> MultiPoly:
        if 0 <= i < self.m:
            return self.polys[i]
        return MultiPoly.zero()

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "D": [{"i": i, "poly": p.render(), "eps": e}
                  for i, (p, e) in enumerate(zip(self.polys, self.eps))],
        }


@lru_cache(maxsize=64)
def d_family(m: int) -> DFamily:
    if m < 1:
        raise ValueError("d_family needs m >= 1")
    table = h_table(m, 0)
    polys, eps = [], []
    for i in range(m):
        d = table.proof_convention(i, 0)
        h = table.get(i, 0)
        polys.append(d)
        if d == h:
            eps.append(1)
        elif d == -h:
            eps.append(-1)
        else:
            raise AssertionError(f"D({m},{i}) is not a signed copy of H_{{{i},0,0}}")
    return DFamily(m, tuple(polys), tuple(eps))


def d_m3_formula(m: int) -> MultiPoly:
    """sum over 1 <= j < k <= m-1 of a_j a_k - a_{2j-k} a_{2k-j}."""
    a = lambda r: MultiPoly.a(r) if 0 <= r <= m else MultiPoly.zero()
    acc = MultiPoly.zero()
    for j in range(1, m):
        for k in range(j + 1, m):
            acc = acc + a(j) * a(k) - a(2 * j - k) * a(2 * k - j)
    return acc


def d_m3_formula_check(m: int) -> bool:
    if m < 3:
        raise ValueError("needs m >= 3")
    return d_family(m)(m - 3) == d_m3_formula(m)


def d_m2_formula(m: int) -> MultiPoly:
    acc = MultiPoly.zero(ZZ)
    for i in range(1, m):
        acc = acc + MultiPoly.a(i)
    return acc
