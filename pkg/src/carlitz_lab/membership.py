"""Degree-bounded linear ideal-membership certificates.

Given homogeneous ``target`` and ``basis`` in ZZ[a_*], look for cofactors
c_b with target = sum c_b * b.  Homogeneity pins each c_b to the single
degree deg(target) - deg(b); its unknown coefficients form a linear system
over the monomials of the target degree, solved exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import EXP_BITS, QQ, ZZ, MultiPoly, poly_sum


@dataclass(frozen=True)
class Certificate:
    cofactors: tuple  # one MultiPoly per basis element
    syzygies: tuple  # basis of the homogeneous solutions, same shape as cofactors

    @property
    def unique(self) -> bool:
        return not self.syzygies

    def expand(self, basis) -> MultiPoly:
        ring = self.cofactors[0].ring if self.cofactors else ZZ
        return poly_sum((c * b.change_ring(ring) for c, b in zip(self.cofactors, basis)), ring)

    def render(self) -> list[str]:
        return [c.render() for c in self.cofactors]


def _homogeneous_degree(p: MultiPoly) -> int:
    if p.t_degree() > 0:
        raise ValueError("membership works in ZZ[a_*]; polynomial involves t")
    if not p.is_homogeneous_in_a():
        raise ValueError(f"{p.render()} is not homogeneous")
    return p.a_degree()


def _monomials(nvars: int, degree: int) -> list[int]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        key = 0
        for v in combo:
            key += 1 << (EXP_BITS * (v + 1))
        out.append(key)
    return out


def solve_exact(rows: list[list[int]], rhs: list[int]):
    """Solve rows @ x = rhs over QQ.

    Forward elimination is fraction-free (Bareiss) on the integer augmented
    matrix; back-substitution uses Fractions.  Returns ``(x, nullspace)`` with
    free variables set to zero in ``x``, or ``None`` if inconsistent.
    """
    ncols = len(rows[0]) if rows else 0
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows = len(A)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, nrows):
            lead = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, ncols + 1):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if any(A[i][ncols] for i in range(r, nrows)):
        return None
    free = [c for c in range(ncols) if c not in set(pivots)]

    def back(rhs_col, fixed):
        x = [Fraction(0)] * ncols
        for c, v in fixed.items():
            x[c] = Fraction(v)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            acc = Fraction(rhs_col[i])
            for j in range(c + 1, ncols):
                if A[i][j] and x[j]:
                    acc -= A[i][j] * x[j]
            x[c] = acc / A[i][c]
        return x

    x = back([A[i][ncols] for i in range(len(pivots))], {})
    null = [back([0] * len(pivots), {f: 1}) for f in free]
    return x, null


def ideal_membership_linear(target: MultiPoly, basis: list[MultiPoly], max_deg: int) -> Certificate | None:
    """Cofactors of degree <= max_deg expressing target in the ideal of basis, or None."""
    basis = list(basis)
    if not basis:
        return None if target else Certificate((), ())
    nvars = max([target.max_a_index()] + [b.max_a_index() for b in basis]) + 1
    nvars = max(nvars, 1)
    d_target = _homogeneous_degree(target) if target else None
    columns = []  # (basis index, monomial key)
    for idx, b in enumerate(basis):
        if not b:
            continue
        e = (d_target if d_target is not None else 0) - _homogeneous_degree(b)
        if d_target is None or e < 0 or e > max_deg:
            continue
        columns.extend((idx, mono) for mono in _monomials(nvars, e))
    zero = MultiPoly.zero(ZZ)
    if not target:
        return Certificate(tuple(zero for _ in basis), ())
    if not columns:
        return None

    row_index: dict[int, int] = {}
    entries: list[dict[int, int]] = []
    for col, (idx, mono) in enumerate(columns):
        for key, c in basis[idx].terms.items():
            k = key + mono
            if k not in row_index:
                row_index[k] = len(row_index)
            entries.append((row_index[k], col, c))
    for key in target.terms:
        if key not in row_index:
            row_index[key] = len(row_index)
    rows = [[0] * len(columns) for _ in range(len(row_index))]
    for i, j, c in entries:
        rows[i][j] += c
    rhs = [0] * len(row_index)
    for key, c in target.terms.items():
        rhs[row_index[key]] = int(c)

    solved = solve_exact(rows, rhs)
    if solved is None:
        return None
    x, null = solved

    def assemble(vec):
        parts = [dict() for _ in basis]
        for (idx, mono), v in zip(columns, vec):
            if v:
                parts[idx][mono] = v
        integral = all(v.denominator == 1 for p in parts for v in p.values())
        ring = ZZ if integral else QQ
        return tuple(MultiPoly({k: ring(v) for k, v in p.items()}, ring) for p in parts)

    return Certificate(assemble(x), tuple(assemble(v) for v in null))


def is_certificate(target: MultiPoly, basis, cofactors) -> bool:
    """True when sum cofactors[b] * basis[b] reproduces target exactly."""
    total = poly_sum((c.change_ring(QQ) * b.change_ring(QQ) for c, b in zip(cofactors, basis)), QQ)
    return total == target.change_ring(QQ)
