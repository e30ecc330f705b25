"""Division-free determinants and reversed characteristic polynomials.

Two engines, both using only ring additions and multiplications, so both are
valid over ZZ[a_*, t] and over F_p[t] alike:

* ``"minors"`` (default): row-by-row Laplace expansion of det(I - M T),
  memoised on the set of columns already used.  Every multiplication pairs a
  matrix entry (a handful of terms) with an accumulated minor, which is what
  keeps the symbolic Carlitz matrices cheap; the number of live column sets
  stays small because those matrices are sparse.
* ``"berkowitz"``: Berkowitz's Toeplitz recurrence over leading principal
  submatrices.  Cubic in ring operations, but it multiplies large
  polynomials by large polynomials, so it is only used for cross-checks.
"""

from __future__ import annotations

from .algebra import CharPoly, MultiPoly, poly_sum
from .matrices import PolyMatrix

COFACTOR_LIMIT = 7


class OrderTooLarge(ValueError):
    pass


def _berkowitz(M: PolyMatrix) -> list[MultiPoly]:
    """Coefficients c_0..c_n of det(xI - M) = sum c_s x^{n-s}  (c_0 = 1)."""
    ring = M.ring
    n = M.order
    one = MultiPoly.one(ring)
    A = M.rows
    prev = [one]
    for r in range(n):
        # leading (r+1) x (r+1) block: [[A_r, C], [R, a_rr]]
        a_rr = A[r][r]
        col = [A[i][r] for i in range(r)]
        row = [A[r][j] for j in range(r)]
        toeplitz = [one, -a_rr]
        vec = col
        for _ in range(r):
            toeplitz.append(-poly_sum((x * y for x, y in zip(row, vec) if x and y), ring))
            vec = [poly_sum((A[i][j] * vec[j] for j in range(r) if A[i][j] and vec[j]), ring)
                   for i in range(r)]
        cur = []
        for s in range(r + 2):
            cur.append(poly_sum(
                (toeplitz[s - i] * prev[i] for i in range(max(0, s - r - 1), min(s, r) + 1)
                 if toeplitz[s - i] and prev[i]),
                ring))
        prev = cur
    return prev


def _minor_expansion(M: PolyMatrix, with_identity: bool = True) -> list[MultiPoly]:
    """Coefficients of det(I*[with_identity] - M T) by T-degree, length n + 1."""
    ring = M.ring
    n = M.order
    normalize = ring.normalize_terms
    layer: dict[int, list[dict]] = {0: [{0: ring(1)}]}
    for r in range(n):
        row = [(c, M.rows[r][c].terms) for c in range(n)]
        nxt: dict[int, list[dict]] = {}
        for used, vec in layer.items():
            for c, entry in row:
                diag = with_identity and c == r
                if (used >> c) & 1 or not (entry or diag):
                    continue
                sign = -1 if bin(used >> (c + 1)).count("1") & 1 else 1
                tgt = nxt.get(used | (1 << c))
                if tgt is None:
                    tgt = nxt[used | (1 << c)] = [{} for _ in range(r + 2)]
                if diag:
                    for d, poly in enumerate(vec):
                        acc = tgt[d]
                        get = acc.get
                        for k, v in poly.items():
                            acc[k] = get(k, 0) + sign * v
                if entry:
                    for d, poly in enumerate(vec):
                        if not poly:
                            continue
                        acc = tgt[d + 1]
                        get = acc.get
                        for k1, c1 in entry.items():
                            c1 = -sign * c1
                            if c1 == 1:
                                for k2, c2 in poly.items():
                                    k = k1 + k2
                                    acc[k] = get(k, 0) + c2
                            elif c1 == -1:
                                for k2, c2 in poly.items():
                                    k = k1 + k2
                                    acc[k] = get(k, 0) - c2
                            else:
                                for k2, c2 in poly.items():
                                    k = k1 + k2
                                    acc[k] = get(k, 0) + c1 * c2
        layer = {}
        for used, vec in nxt.items():
            vec = [normalize(p) for p in vec]
            if any(vec):
                layer[used] = vec
    final = layer.get((1 << n) - 1)
    if final is None:
        final = [{}] * (n + 1)
    return [MultiPoly(p, ring, _canonical=True) for p in final]


def _coefficients(M: PolyMatrix, method: str) -> list[MultiPoly]:
    if method == "minors":
        return _minor_expansion(M)
    if method == "berkowitz":
        return _berkowitz(M)
    raise ValueError(f"unknown method {method!r}")


def char_poly_rev(M: PolyMatrix, method: str = "minors") -> CharPoly:
    """det(I - M T) as a CharPoly; the T^s coefficient is (-1)^s e_s(M)."""
    return CharPoly(_coefficients(M, method))


def det(M: PolyMatrix, method: str = "minors") -> MultiPoly:
    """Exact determinant, division-free.  The empty matrix has determinant 1."""
    n = M.order
    if n == 0:
        return MultiPoly.one(M.ring)
    if method == "minors":
        c_n = _minor_expansion(M, with_identity=False)[n]
        return c_n if n % 2 == 0 else -c_n
    c_n = _berkowitz(M)[n]
    return c_n if n % 2 == 0 else -c_n


def principal_minor_sums(M: PolyMatrix, method: str = "minors") -> list[MultiPoly]:
    """e_0..e_n: e_s is the sum of the principal s x s minors of M."""
    cs = _coefficients(M, method)
    return [c if s % 2 == 0 else -c for s, c in enumerate(cs)]


def det_oracle_cofactor(M: PolyMatrix) -> MultiPoly:
    """Laplace expansion along the first row.  Orders above 7 are refused."""
    n = M.order
    if n > COFACTOR_LIMIT:
        raise OrderTooLarge(f"cofactor oracle limited to order {COFACTOR_LIMIT}, got {n}")
    return _cofactor(M.rows, M.ring)


def _cofactor(rows, ring) -> MultiPoly:
    n = len(rows)
    if n == 0:
        return MultiPoly.one(ring)
    if n == 1:
        return rows[0][0]
    acc = MultiPoly.zero(ring)
    for j, e in enumerate(rows[0]):
        if e.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = e * _cofactor(minor, ring)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
