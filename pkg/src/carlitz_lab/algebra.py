"""Exact coefficient rings and sparse multivariate polynomials.

Polynomials live in R[a_0, a_1, ..., t] where R is either the integers, a
prime field F_p, or the rationals.  Every polynomial carries exactly one
coefficient ring; mixing rings is an error.

Monomials are packed into a single Python int: the exponent of ``t`` sits in
the lowest field, the exponent of ``a_i`` in field ``i + 1``.  Each field is
``EXP_BITS`` wide.  Monomial multiplication is then integer addition, and a
polynomial written for a_0..a_m is a valid polynomial for any larger m.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1
MAX_EXP = EXP_MASK


class RingMismatchError(TypeError):
    pass


class MissingAssignmentError(KeyError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class IntegerRing:
    """The ring of integers; elements are plain Python ints."""

    characteristic = 0
    name = "ZZ"

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def normalize_terms(self, terms: dict) -> dict:
        return {k: c for k, c in terms.items() if c}

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


class RationalField:
    """Exact rationals as :class:`fractions.Fraction` (always in lowest terms)."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def normalize_terms(self, terms: dict) -> dict:
        return {k: Fraction(c) for k, c in terms.items() if c}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p; elements are ints in ``range(p)``."""

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        return int(value) % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(value, -1, self.p)

    def normalize_terms(self, terms: dict) -> dict:
        p = self.p
        out = {}
        for k, c in terms.items():
            c %= p
            if c:
                out[k] = c
        return out

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


ZZ = IntegerRing()
QQ = RationalField()


# -- monomial packing -------------------------------------------------------

def _slot(name: str) -> int:
    if name == "t":
        return 0
    m = re.fullmatch(r"a_?(\d+)", name)
    if m is None:
        raise ValueError(f"unknown variable {name!r}")
    return int(m.group(1)) + 1


def _slot_name(slot: int) -> str:
    return "t" if slot == 0 else f"a{slot - 1}"


def pack(exponents: Mapping[int, int]) -> int:
    """Pack ``{slot: exponent}`` into a monomial key."""
    key = 0
    for slot, e in exponents.items():
        if e < 0 or e > MAX_EXP:
            raise OverflowError(f"exponent {e} outside [0, {MAX_EXP}]")
        key |= e << (EXP_BITS * slot)
    return key


def unpack(key: int) -> dict[int, int]:
    out = {}
    slot = 0
    while key:
        e = key & EXP_MASK
        if e:
            out[slot] = e
        key >>= EXP_BITS
        slot += 1
    return out


def mono_degree(key: int) -> int:
    d = 0
    while key:
        d += key & EXP_MASK
        key >>= EXP_BITS
    return d


def t_degree_of(key: int) -> int:
    return key & EXP_MASK


def var_key(name: str) -> int:
    return 1 << (EXP_BITS * _slot(name))


T_KEY = 1  # the monomial t


def _sort_key(key: int, width: int) -> tuple:
    # graded; ties: higher power of t first, then ascending in (a_m, ..., a_0)
    exps = unpack(key)
    deg = sum(exps.values())
    a_part = tuple(exps.get(s, 0) for s in range(width, 0, -1))
    return (-deg, -exps.get(0, 0), a_part)


# -- polynomials --------------------------------------------------------------

class MultiPoly:
    """Immutable sparse polynomial in a_0, a_1, ..., t over one coefficient ring."""

    __slots__ = ("terms", "ring", "_deg")

    def __init__(self, terms: Mapping[int, object] | None = None, ring=ZZ, *, _canonical=False, _deg=None):
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _canonical:
            self.terms = terms
        else:
            self.terms = ring.normalize_terms(dict(terms))
        self._deg = _deg

    # constructors
    @classmethod
    def const(cls, value, ring=ZZ) -> "MultiPoly":
        value = ring(value)
        return cls({0: value} if value else {}, ring, _canonical=True)

    @classmethod
    def zero(cls, ring=ZZ) -> "MultiPoly":
        return cls({}, ring, _canonical=True)

    @classmethod
    def one(cls, ring=ZZ) -> "MultiPoly":
        return cls.const(1, ring)

    @classmethod
    def var(cls, name: str, ring=ZZ) -> "MultiPoly":
        return cls({var_key(name): ring(1)}, ring, _canonical=True)

    @classmethod
    def a(cls, i: int, ring=ZZ) -> "MultiPoly":
        """The indeterminate a_i, or zero when i < 0 (out-of-range convention)."""
        if i < 0:
            return cls.zero(ring)
        return cls({1 << (EXP_BITS * (i + 1)): ring(1)}, ring, _canonical=True)

    @classmethod
    def t(cls, ring=ZZ) -> "MultiPoly":
        return cls({T_KEY: ring(1)}, ring, _canonical=True)

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[int, object]]:
        return iter(self.terms.items())

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(k) for k in self.terms)

    def _degree_bound(self) -> int:
        if self._deg is None:
            self._deg = max(self.total_degree(), 0)
        return self._deg

    def degree_in(self, name: str) -> int:
        slot = _slot(name)
        shift = EXP_BITS * slot
        if not self.terms:
            return -1
        return max((k >> shift) & EXP_MASK for k in self.terms)

    def t_degree(self) -> int:
        if not self.terms:
            return -1
        return max(k & EXP_MASK for k in self.terms)

    def a_degree(self) -> int:
        """Total degree in the a-variables alone; -1 for zero."""
        if not self.terms:
            return -1
        return max(mono_degree(k) - (k & EXP_MASK) for k in self.terms)

    def is_homogeneous_in_a(self, degree: int | None = None) -> bool:
        degs = {mono_degree(k) - (k & EXP_MASK) for k in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def variables(self) -> list[str]:
        slots = set()
        for k in self.terms:
            slots.update(unpack(k))
        return [_slot_name(s) for s in sorted(slots)]

    def max_a_index(self) -> int:
        idx = -1
        for k in self.terms:
            slot = (k.bit_length() - 1) // EXP_BITS if k else 0
            idx = max(idx, slot - 1)
        return idx

    def constant_term(self):
        return self.terms.get(0, self.ring(0))

    # arithmetic
    def _check(self, other: "MultiPoly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        get = out.get
        for k, c in small.items():
            out[k] = get(k, 0) + c
        return MultiPoly(self.ring.normalize_terms(out), self.ring, _canonical=True,
                         _deg=max(self._degree_bound(), other._degree_bound()))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring.normalize_terms({k: -c for k, c in self.terms.items()}),
                         self.ring, _canonical=True, _deg=self._deg)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        get = out.get
        for k, c in other.terms.items():
            out[k] = get(k, 0) - c
        return MultiPoly(self.ring.normalize_terms(out), self.ring, _canonical=True,
                         _deg=max(self._degree_bound(), other._degree_bound()))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.ring)
        deg = self._degree_bound() + other._degree_bound()
        if deg > MAX_EXP:
            raise OverflowError("product degree exceeds the packed exponent width")
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for k1, c1 in a.items():
            if c1 == 1:
                for k2, c2 in b.items():
                    k = k1 + k2
                    out[k] = get(k, 0) + c2
            elif c1 == -1:
                for k2, c2 in b.items():
                    k = k1 + k2
                    out[k] = get(k, 0) - c2
            else:
                for k2, c2 in b.items():
                    k = k1 + k2
                    out[k] = get(k, 0) + c1 * c2
        return MultiPoly(self.ring.normalize_terms(out), self.ring, _canonical=True, _deg=deg)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = self.ring(c)
        if not c:
            return MultiPoly.zero(self.ring)
        return MultiPoly(self.ring.normalize_terms({k: v * c for k, v in self.terms.items()}),
                         self.ring, _canonical=True, _deg=self._deg)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div_scalar(self, c) -> "MultiPoly":
        """Divide every coefficient by the integer ``c``; the division must be exact."""
        out = {}
        for k, v in self.terms.items():
            q, r = divmod(v, c)
            if r:
                raise ArithmeticError(f"coefficient {v} not divisible by {c}")
            out[k] = q
        return MultiPoly(out, self.ring, _canonical=True, _deg=self._deg)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.ring)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # t-structure
    def t_coefficients(self) -> list["MultiPoly"]:
        """Split into ``[c_0, c_1, ...]`` with ``self = sum c_j t^j`` and c_j free of t."""
        if not self.terms:
            return []
        parts: dict[int, dict] = {}
        for k, c in self.terms.items():
            j = k & EXP_MASK
            parts.setdefault(j, {})[k - j] = c
        top = max(parts)
        return [MultiPoly(parts.get(j, {}), self.ring, _canonical=True) for j in range(top + 1)]

    def t_coefficient(self, j: int) -> "MultiPoly":
        return MultiPoly({k - j: c for k, c in self.terms.items() if (k & EXP_MASK) == j},
                         self.ring, _canonical=True)

    def times_t(self, j: int) -> "MultiPoly":
        if j > MAX_EXP:
            raise OverflowError("t exponent too large")
        return MultiPoly({k + j: c for k, c in self.terms.items()}, self.ring, _canonical=True)

    # ring changes and evaluation
    def reduce_mod(self, p: int) -> "MultiPoly":
        """Coefficient-wise image in F_p[a_*, t]."""
        if self.ring.characteristic != 0:
            raise RingMismatchError("reduction is defined for integer or rational polynomials")
        field = PrimeField(p)
        return MultiPoly({k: field(c) for k, c in self.terms.items()}, field)

    def change_ring(self, ring) -> "MultiPoly":
        return MultiPoly({k: ring(c) for k, c in self.terms.items()}, ring)

    def subs(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Substitute ring elements for some variables, leaving the rest symbolic."""
        slots = {_slot(name): self.ring(v) for name, v in assignment.items()}
        out: dict = {}
        for k, c in self.terms.items():
            rest, coef = 0, c
            slot, kk = 0, k
            while kk:
                e = kk & EXP_MASK
                if e:
                    if slot in slots:
                        coef = coef * slots[slot] ** e
                        if not coef:
                            break
                    else:
                        rest |= e << (EXP_BITS * slot)
                kk >>= EXP_BITS
                slot += 1
            if coef:
                out[rest] = out.get(rest, 0) + coef
        return MultiPoly(out, self.ring)

    def evaluate(self, assignment: Mapping[str, object]):
        """Evaluate at a full assignment of every occurring variable."""
        needed = self.variables()
        missing = [v for v in needed if v not in assignment]
        if missing:
            raise MissingAssignmentError(f"no value for {', '.join(missing)}")
        result = self.subs({v: assignment[v] for v in needed})
        return result.constant_term()

    # text format
    def render(self) -> str:
        if not self.terms:
            return "0"
        width = max(self.max_a_index() + 1, 0)
        keys = sorted(self.terms, key=lambda k: _sort_key(k, width))
        pieces = []
        for n, k in enumerate(keys):
            c = self.terms[k]
            neg = c < 0 if self.ring.characteristic == 0 else False
            mag = -c if neg else c
            exps = unpack(k)
            factors = []
            for slot in sorted((s for s in exps if s), ):
                e = exps[slot]
                factors.append(_slot_name(slot) + (f"^{e}" if e > 1 else ""))
            if 0 in exps:
                factors.append("t" + (f"^{exps[0]}" if exps[0] > 1 else ""))
            body = "*".join(factors)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if n == 0:
                pieces.append(("-" if neg else "") + text)
            else:
                pieces.append((" - " if neg else " + ") + text)
        return "".join(pieces)

    __str__ = render

    def __repr__(self):
        return f"MultiPoly({self.render()!r}, {self.ring!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(a_?\d+|t)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_poly(text: str, ring=ZZ) -> MultiPoly:
    """Parse the canonical text form (e.g. ``a1*a2 - 2*a0*t^2``)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    pos = 0
    first = True
    for match in _TERM_RE.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = match.end()
        sign, body = match.group(1), match.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        first = False
        coef = Fraction(1)
        exps: dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(3) is not None:
                coef *= Fraction(fm.group(3))
            else:
                slot = _slot(fm.group(1))
                exps[slot] = exps.get(slot, 0) + int(fm.group(2) or 1)
        if sign == "-":
            coef = -coef
        key = pack(exps)
        terms[key] = terms.get(key, 0) + coef
    if pos != len(text):
        raise ValueError(f"trailing input in {text!r}")
    return MultiPoly({k: ring(c) for k, c in terms.items()}, ring)


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p * q


def poly_eval(p: MultiPoly, assignment: Mapping[str, object]):
    return p.evaluate(assignment)


def poly_reduce_mod(p: MultiPoly, prime: int) -> MultiPoly:
    return p.reduce_mod(prime)


def poly_sum(polys: Iterable[MultiPoly], ring=ZZ) -> MultiPoly:
    out: dict = {}
    get = out.get
    deg = 0
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError(f"ring mismatch: {ring!r} vs {p.ring!r}")
        deg = max(deg, p._degree_bound())
        for k, c in p.terms.items():
            out[k] = get(k, 0) + c
    return MultiPoly(ring.normalize_terms(out), ring, _canonical=True, _deg=deg)


class CharPoly:
    """A polynomial in T whose coefficients are MultiPolys.

    ``coeffs[s]`` is the coefficient of T^s.  Trailing zero coefficients are
    kept, so ``len(coeffs)`` is the order of the matrix plus one.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[MultiPoly]):
        self.coeffs = tuple(coeffs)

    @property
    def ring(self):
        return self.coeffs[0].ring

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, s: int) -> MultiPoly:
        return self.coeffs[s]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        a, b = list(self.coeffs), list(other.coeffs)
        while a and a[-1].is_zero():
            a.pop()
        while b and b[-1].is_zero():
            b.pop()
        return a == b

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def degree(self) -> int:
        """Degree in T; -1 for the zero polynomial."""
        for s in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[s].is_zero():
                return s
        return -1

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        n = len(self.coeffs) + len(other.coeffs) - 1
        ring = self.ring
        out = [MultiPoly.zero(ring) for _ in range(n)]
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for j, d in enumerate(other.coeffs):
                if not d.is_zero():
                    out[i + j] = out[i + j] + c * d
        return CharPoly(out)

    def reduce_mod(self, p: int) -> "CharPoly":
        return CharPoly(c.reduce_mod(p) for c in self.coeffs)

    def subs(self, assignment) -> "CharPoly":
        return CharPoly(c.subs(assignment) for c in self.coeffs)

    def render(self) -> str:
        parts = []
        for s, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            parts.append(f"({c.render()})*T^{s}" if s else f"({c.render()})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CharPoly({self.render()})"
