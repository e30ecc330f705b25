"""Matrix families attached to twisted tensor powers of the Carlitz module.

All public indices are 1-based.  Subscripts of ``a`` outside ``0..m`` denote
zero.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import ZZ, MultiPoly, PrimeField, is_prime, parse_poly


class NonTrivialPartUndefined(ValueError):
    pass


class PolyMatrix:
    """Dense square matrix of MultiPoly entries sharing one coefficient ring."""

    __slots__ = ("rows", "ring")

    def __init__(self, rows: Sequence[Sequence[MultiPoly]], ring=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        if ring is None:
            ring = rows[0][0].ring if n else ZZ
        for r in rows:
            for e in r:
                if e.ring != ring:
                    raise ValueError("entries must share one coefficient ring")
        self.rows = rows
        self.ring = ring

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int, int], MultiPoly], ring=ZZ) -> "PolyMatrix":
        return cls([[fn(i, j) for j in range(1, order + 1)] for i in range(1, order + 1)], ring)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], ring=ZZ) -> "PolyMatrix":
        return cls([[parse_poly(s, ring) for s in r] for r in rows], ring)

    @classmethod
    def identity(cls, order: int, ring=ZZ) -> "PolyMatrix":
        one, zero = MultiPoly.one(ring), MultiPoly.zero(ring)
        return cls([[one if i == j else zero for j in range(order)] for i in range(order)], ring)

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.rows[i - 1][j - 1]

    def __getitem__(self, ij) -> MultiPoly:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(col) for col in zip(*self.rows)], self.ring)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.order
        zero = MultiPoly.zero(self.ring)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.ring)

    def map(self, fn: Callable[[MultiPoly], MultiPoly], ring=None) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in r] for r in self.rows], ring)

    def subs(self, assignment) -> "PolyMatrix":
        return self.map(lambda e: e.subs(assignment), self.ring)

    def reduce_mod(self, p: int) -> "PolyMatrix":
        return self.map(lambda e: e.reduce_mod(p), PrimeField(p))

    def render(self) -> list[list[str]]:
        return [[e.render() for e in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "entries": self.render()})

    @classmethod
    def from_json(cls, text: str, ring=ZZ) -> "PolyMatrix":
        data = json.loads(text)
        m = cls.from_strings(data["entries"], ring)
        if m.order != data["order"]:
            raise ValueError("order field disagrees with entries")
        return m

    def __repr__(self):
        body = "; ".join(", ".join(r) for r in self.render())
        return f"PolyMatrix([{body}])"


@dataclass(frozen=True)
class TwistSpec:
    """Twist parameters: the field size q, tensor power n, degree m of P.

    With ``coeffs=None`` the coefficients a_0..a_m are indeterminates over ZZ.
    Otherwise ``coeffs`` lists concrete values in F_q (q prime) and P must
    have exact degree m unless ``allow_zero_top`` is set.
    """

    q: int
    n: int
    m: int
    coeffs: tuple[int, ...] | None = None
    allow_zero_top: bool = False

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be non-negative")
        if self.coeffs is not None:
            if not is_prime(self.q):
                raise ValueError("field mode needs a prime q")
            coeffs = tuple(int(c) % self.q for c in self.coeffs)
            object.__setattr__(self, "coeffs", coeffs)
            if len(coeffs) != self.m + 1:
                raise ValueError(f"expected {self.m + 1} coefficients, got {len(coeffs)}")
            if coeffs[-1] == 0 and not self.allow_zero_top:
                raise ValueError("leading coefficient a_m must be nonzero")

    @property
    def symbolic(self) -> bool:
        return self.coeffs is None

    @property
    def ring(self):
        return ZZ if self.coeffs is None else PrimeField(self.q)

    @property
    def kbar(self) -> int:
        return (self.m + self.n) // (self.q - 1)

    @property
    def has_nontrivial_part(self) -> bool:
        return (self.m + self.n) % (self.q - 1) == 0

    def coeff(self, r: int) -> MultiPoly:
        if r < 0 or r > self.m:
            return MultiPoly.zero(self.ring)
        if self.coeffs is None:
            return MultiPoly.a(r)
        return MultiPoly.const(self.coeffs[r], self.ring)


def carlitz_entry(spec: TwistSpec, i: int, j: int) -> MultiPoly:
    ring = spec.ring
    t = MultiPoly.t(ring)
    acc = MultiPoly.zero(ring)
    n, q = spec.n, spec.q
    for l in range(n + 1):
        a = spec.coeff(j * q - i - l)
        if a.is_zero():
            continue
        term = a.scale((-1) ** l * comb(n, l))
        if n - l:
            term = term * t ** (n - l)
        acc = acc + term
    return acc


def build_M(spec: TwistSpec) -> PolyMatrix:
    """The kbar x kbar matrix whose reversed characteristic polynomial is the L-function."""
    return PolyMatrix.from_function(spec.kbar, lambda i, j: carlitz_entry(spec, i, j), spec.ring)


def build_M_nt(spec: TwistSpec) -> PolyMatrix:
    """Leading (kbar-1) x (kbar-1) block: drop the last row and column of build_M."""
    if not spec.has_nontrivial_part:
        raise NonTrivialPartUndefined(
            f"non-trivial part undefined: (m+n)={spec.m + spec.n} not divisible by q-1={spec.q - 1}")
    k = spec.kbar - 1
    if k < 0:
        raise NonTrivialPartUndefined("non-trivial part undefined: kbar = 0")
    return PolyMatrix.from_function(k, lambda i, j: carlitz_entry(spec, i, j), spec.ring)


def nt_matrix(m: int) -> PolyMatrix:
    """The (m-1) x (m-1) t-free matrix with entries a_{2j-i} (q=2, n=0)."""
    return build_M_nt(TwistSpec(2, 0, m))


def t_decompose(M: PolyMatrix, n: int) -> list[PolyMatrix]:
    """Return C_0..C_n with M = sum_l C_l t^l."""
    ring = M.ring
    zero = MultiPoly.zero(ring)
    parts = [[[zero] * M.order for _ in range(M.order)] for _ in range(n + 1)]
    for i, row in enumerate(M.rows):
        for j, e in enumerate(row):
            cs = e.t_coefficients()
            if len(cs) > n + 1:
                raise ValueError(f"entry ({i + 1},{j + 1}) has t-degree {len(cs) - 1} > {n}")
            for l, c in enumerate(cs):
                parts[l][i][j] = c
    return [PolyMatrix(p, ring) for p in parts]


def submatrix_minor(M: PolyMatrix, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> PolyMatrix:
    """Delete the given (1-based) rows and columns, keeping the remaining order."""
    rows, cols = set(rows), set(cols)
    n = M.order
    for x in rows | cols:
        if not 1 <= x <= n:
            raise IndexError(f"index {x} out of range 1..{n}")
    if len(rows) != len(cols):
        raise ValueError("must delete as many rows as columns")
    keep_r = [i for i in range(1, n + 1) if i not in rows]
    keep_c = [j for j in range(1, n + 1) if j not in cols]
    return PolyMatrix([[M.entry(i, j) for j in keep_c] for i in keep_r], M.ring)


def build_B(m: int, l: int, u: int) -> PolyMatrix:
    """B(l, u) for q=2, n=2: an m x m matrix over ZZ[a_*].

    Delete row and column l from the (m+1) x (m+1) n=2 matrix; column u takes
    -1/2 times the t^1 coefficients, every other column the t^0 coefficients.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 1 <= l <= m + 1:
        raise IndexError(f"l={l} outside 1..{m + 1}")
    if not 1 <= u <= m:
        raise IndexError(f"u={u} outside 1..{m}")
    big = build_M_nt(TwistSpec(2, 2, m))
    sub = submatrix_minor(big, [l], [l])
    c0, c1, _ = t_decompose(sub, 2)
    rows = []
    for i in range(1, m + 1):
        row = []
        for c in range(1, m + 1):
            row.append(c1.entry(i, c).exact_div_scalar(-2) if c == u else c0.entry(i, c))
        rows.append(row)
    return PolyMatrix(rows, ZZ)


@dataclass(frozen=True)
class PermMatrixSpec:
    """Data for M(r, sigma) / M(c, sigma); ``sigma[i-1]`` is sigma(i)."""

    order: int
    kind: str
    sigma: tuple[int, ...]
    alpha: Callable[[int, int, int], MultiPoly]

    def __post_init__(self):
        if self.kind not in ("rows", "columns"):
            raise ValueError("kind must be 'rows' or 'columns'")
        if sorted(self.sigma) != list(range(1, self.order + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{self.order}")


def build_perm_matrix(spec: PermMatrixSpec) -> PolyMatrix:
    sigma = spec.sigma
    if spec.kind == "rows":
        fn = lambda i, j: spec.alpha(i, j, sigma[i - 1])
    else:
        fn = lambda i, j: spec.alpha(i, j, sigma[j - 1])
    return PolyMatrix.from_function(spec.order, fn)


def carlitz_alpha(m: int) -> Callable[[int, int, int], MultiPoly]:
    """alpha(i,j,k) = a_{2j-i+1} when k == 1, else a_{2j-i}; defined for n = m-1."""
    if m < 2:
        raise ValueError("carlitz_alpha needs m >= 2")

    def alpha(i: int, j: int, k: int) -> MultiPoly:
        r = 2 * j - i + 1 if k == 1 else 2 * j - i
        return MultiPoly.a(r) if 0 <= r <= m else MultiPoly.zero()

    return alpha


def table_alpha(values: Mapping[tuple[int, int, int], int]) -> Callable[[int, int, int], MultiPoly]:
    return lambda i, j, k: MultiPoly.const(values[(i, j, k)])


def permutations(n: int) -> Iterable[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))
