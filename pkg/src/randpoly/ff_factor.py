"""Polynomials over prime fields and their factor-degree statistics.

Coefficient vectors run from the constant term upward; the zero polynomial
is the empty tuple.  The hot loops work on plain lists of ints; the
Frobenius map (``h -> h**p mod g``) is linear over F_p, so it is applied as
a matrix product with numpy whenever the products fit in int64.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .arith import divisors, is_prime, mobius
from .errors import UsageError

MAX_MODULUS = 1 << 62


@dataclass(frozen=True, slots=True)
class FieldPoly:
    """Dense polynomial over F_p; ``coeffs[i]`` is the coefficient of X^i."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        if not (2 <= p < MAX_MODULUS and is_prime(p)):
            raise UsageError(f"modulus must be a prime below 2^62, got {p}")
        cs = self.coeffs
        if any(not 0 <= c < p for c in cs):
            object.__setattr__(self, "coeffs", _strip([c % p for c in cs]))
        elif cs and cs[-1] == 0:
            object.__setattr__(self, "coeffs", _strip(list(cs)))
        elif not isinstance(cs, tuple):
            object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int) -> FieldPoly:
        return cls(p, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> FieldPoly:
        if not self.coeffs:
            return self
        return FieldPoly(self.modulus, tuple(_monic(list(self.coeffs), self.modulus)))

    def __mul__(self, other: FieldPoly) -> FieldPoly:
        _same_field(self, other)
        return FieldPoly(self.modulus, tuple(_mul(list(self.coeffs), list(other.coeffs), self.modulus)))

    def __pow__(self, e: int) -> FieldPoly:
        out = FieldPoly(self.modulus, (1,))
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"FieldPoly(p={self.modulus}: {' + '.join(reversed(terms)) or '0'})"


@dataclass(frozen=True, slots=True)
class DegreeMultiset:
    """Counts ``m_i`` of parts of size ``i`` (factor degrees or cycle lengths).

    ``parts`` is the sorted tuple of ``(i, m_i)`` with ``m_i >= 1``.
    """

    n: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = 0
        last = 0
        for i, m in self.parts:
            if i <= last or m < 1:
                raise UsageError(f"malformed parts {self.parts!r}")
            last = i
            total += i * m
        if total != self.n:
            raise UsageError(f"parts {self.parts!r} have weight {total}, not {self.n}")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> DegreeMultiset:
        parts = tuple(sorted((i, m) for i, m in counts.items() if m))
        return cls(sum(i * m for i, m in parts), parts)

    @classmethod
    def from_parts(cls, sizes: Iterable[int]) -> DegreeMultiset:
        counts: dict[int, int] = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        return cls.from_counts(counts)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.parts)

    def __getitem__(self, i: int) -> int:
        for j, m in self.parts:
            if j == i:
                return m
        return 0

    def sizes(self) -> list[int]:
        """Part sizes with multiplicity, ascending."""
        return [i for i, m in self.parts for _ in range(m)]

    def __str__(self) -> str:
        return "{" + ", ".join(f"m_{i}: {m}" for i, m in self.parts) + "}"


# ---------------------------------------------------------------------------
# list-level arithmetic (coefficients already reduced mod p)

def _strip(a: list[int]) -> tuple[int, ...]:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic(a: list[int], p: int) -> list[int]:
    lc = a[-1]
    if lc == 1:
        return a
    inv = pow(lc, -1, p)
    return [c * inv % p for c in a]


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _trim([c % p for c in out])


def _rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by nonzero b."""
    db = len(b) - 1
    if len(a) <= db:
        return a[:]
    if db == 0:
        return []
    r = a[:]
    inv = 1 if b[-1] == 1 else pow(b[-1], -1, p)
    low = b[:db]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = c * inv % p
            s = i - db
            r[s:i] = [(x - c * y) % p for x, y in zip(r[s:i], low)]
    del r[db:]
    return _trim(r)


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    db = len(b) - 1
    if len(a) <= db:
        return [], a[:]
    r = a[:]
    q = [0] * (len(a) - db)
    inv = 1 if b[-1] == 1 else pow(b[-1], -1, p)
    low = b[:db]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = c * inv % p
            s = i - db
            q[s] = c
            r[s:i] = [(x - c * y) % p for x, y in zip(r[s:i], low)]
    del r[db:]
    return q, _trim(r)


def _div_exact(a: list[int], b: list[int], p: int) -> list[int]:
    q, r = _divmod(a, b, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd (empty list when both are zero)."""
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p) if a else a


def _deriv(a: list[int], p: int) -> list[int]:
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _pth_root(a: list[int], p: int) -> list[int]:
    """Inverse Frobenius of a polynomial whose only nonzero terms are X^{kp}.

    Over a prime field c^p = c, so the root just subsamples the exponents.
    """
    return a[::p]


def _is_one(a: list[int]) -> bool:
    return len(a) == 1


# ---------------------------------------------------------------------------
# Frobenius machinery for distinct-degree factorization

def _int64_safe(p: int, n: int) -> bool:
    return (p - 1) ** 2 * max(n, 1) < (1 << 62)


class _FrobeniusContext:
    """Linear-algebra view of F_p[X]/(g) for monic squarefree g of degree r >= 2."""

    def __init__(self, g: list[int], p: int):
        self.p = p
        self.g = g
        r = self.r = len(g) - 1
        self.dtype = np.int64 if _int64_safe(p, 2 * r) else object
        # rows x^k mod g for k = r .. 2r-2, used to fold products back down
        fold = []
        row = [(-c) % p for c in g[:r]]
        for _ in range(max(r - 1, 0)):
            fold.append(row)
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                row = [(x - top * c) % p for x, c in zip(row, g)]
        self.fold = np.array(fold, dtype=self.dtype).reshape(max(r - 1, 0), r)
        # mult_xp[j] = x^{p+j} mod g, i.e. multiplication by x^p as a matrix
        xp = self._power_of_x(p)
        shifted = np.zeros((r, 2 * r - 1), dtype=self.dtype)
        for j in range(r):
            shifted[j, j:j + r] = xp
        mult_xp = (shifted[:, :r] + shifted[:, r:] @ self.fold) % p
        # Frobenius matrix: row i is x^{ip} mod g
        frob = np.empty((r, r), dtype=self.dtype)
        cur = np.zeros(r, dtype=self.dtype)
        cur[0] = 1
        for i in range(r):
            frob[i] = cur
            if i + 1 < r:
                cur = (cur @ mult_xp) % p
        self.frob = frob

    def reduce(self, prod: np.ndarray) -> np.ndarray:
        r = self.r
        if len(prod) <= r:
            out = np.zeros(r, dtype=self.dtype)
            out[: len(prod)] = prod
            return out % self.p
        return (prod[:r] + prod[r:] @ self.fold[: len(prod) - r]) % self.p

    def mulmod(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.dtype is object:
            prod = np.array(_mul(list(a), list(b), self.p) or [0], dtype=object)
        else:
            prod = np.convolve(a, b) % self.p
        return self.reduce(prod)

    def _power_of_x(self, e: int) -> np.ndarray:
        x = np.zeros(self.r, dtype=self.dtype)
        x[1] = 1
        out = None
        base = x
        while e:
            if e & 1:
                out = base if out is None else self.mulmod(out, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return out

    def x(self) -> np.ndarray:
        v = np.zeros(self.r, dtype=self.dtype)
        v[1] = 1
        return v

    def frobenius(self, h: np.ndarray) -> np.ndarray:
        return (h @ self.frob) % self.p


def _to_list(v: np.ndarray) -> list[int]:
    return _trim([int(c) for c in v])


_BLOCK = 6


def _ddf_counts(g: list[int], p: int) -> dict[int, int]:
    """Distinct-degree factorization of monic squarefree ``g``: degree -> #factors.

    Iterates h_d = x^{p^d} mod g.  Irreducible factors of degree d divide
    h_d - x and no earlier term once smaller factors are split off.  To save
    gcds, the differences h_j - x are multiplied together in blocks and a
    single gcd with g decides whether the block needs splitting.
    """
    counts: dict[int, int] = {}
    rest = g
    r = len(rest) - 1
    if r <= 0:
        return counts
    d = 0
    while 2 * (d + 1) <= r:
        ctx = _FrobeniusContext(rest, p)
        h = ctx.x()
        for _ in range(d):
            h = ctx.frobenius(h)
        changed = False
        while not changed and 2 * (d + 1) <= r:
            block = []
            acc = None
            while len(block) < _BLOCK and 2 * (d + 1) <= r:
                d += 1
                h = ctx.frobenius(h)
                diff = h.copy()
                diff[1] = (diff[1] - 1) % p
                block.append((d, diff))
                acc = diff if acc is None else ctx.mulmod(acc, diff)
            common = _gcd(rest, _to_list(acc), p)
            if len(common) <= 1:
                continue
            for j, diff in block:
                part = _gcd(common, _rem(_to_list(diff), common, p), p)
                if len(part) > 1:
                    counts[j] = (len(part) - 1) // j
                    common = _div_exact(common, part, p)
                    rest = _div_exact(rest, part, p)
            r = len(rest) - 1
            changed = True
        if r < 2:
            break
    if r >= 1:
        counts[r] = counts.get(r, 0) + 1
    return counts


def _ddf_counts_small(g: list[int], p: int) -> dict[int, int]:
    """Pure-list DDF; cheaper than the matrix route for tiny degrees."""
    counts: dict[int, int] = {}
    rest = g
    h = [0, 1]
    d = 0
    while 2 * (d + 1) <= len(rest) - 1:
        d += 1
        h = _powmod(h, p, rest, p)
        diff = h + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        common = _gcd(rest, _trim(diff), p)
        if len(common) > 1:
            counts[d] = (len(common) - 1) // d
            rest = _div_exact(rest, common, p)
            h = _rem(h, rest, p)
    if len(rest) > 1:
        r = len(rest) - 1
        counts[r] = counts.get(r, 0) + 1
    return counts


def _powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    base = _rem(a, m, p)
    while e:
        if e & 1:
            out = _rem(_mul(out, base, p), m, p)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, p), m, p)
    return out


_SMALL_DEGREE = 12


def _sqf_list(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic ``f`` (characteristic-p aware)."""
    out: list[tuple[list[int], int]] = []
    if len(f) <= 1:
        return out
    c = _gcd(f, _deriv(f, p), p)
    w = _div_exact(f, c, p) if c else [1]
    if not c:
        # f' = 0: f is a p-th power
        c = f
        w = [1]
    i = 1
    while not _is_one(w):
        y = _gcd(w, c, p)
        fac = _div_exact(w, y, p)
        if not _is_one(fac):
            out.append((fac, i))
        w = y
        c = _div_exact(c, y, p)
        i += 1
    if not _is_one(c):
        for g, j in _sqf_list(_pth_root(c, p), p):
            out.append((g, j * p))
    return out


def _factor_counts(f: list[int], p: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g, mult in _sqf_list(f, p):
        deg = len(g) - 1
        if deg == 1:
            part = {1: 1}
        elif deg < _SMALL_DEGREE:
            part = _ddf_counts_small(g, p)
        else:
            part = _ddf_counts(g, p)
        for d, k in part.items():
            counts[d] = counts.get(d, 0) + k * mult
    return counts


# ---------------------------------------------------------------------------
# public operations

def _same_field(a: FieldPoly, b: FieldPoly) -> None:
    if a.modulus != b.modulus:
        raise UsageError(f"modulus mismatch: {a.modulus} vs {b.modulus}")


def poly_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly:
    """Monic gcd; gcd(a, 0) = monic(a) and gcd(0, 0) = 0."""
    _same_field(a, b)
    return FieldPoly(a.modulus, tuple(_gcd(list(a.coeffs), list(b.coeffs), a.modulus)))


def _require_monic(f: FieldPoly) -> None:
    if f.is_zero():
        raise UsageError("zero polynomial has no factorization")
    if not f.is_monic():
        raise UsageError("polynomial must be monic")


def squarefree_decomposition(f: FieldPoly) -> list[tuple[FieldPoly, int]]:
    """Pairs ``(g_j, j)`` with f = prod g_j^j, each g_j monic, squarefree, coprime.

    Sorted by multiplicity.  ``f = 1`` gives the empty list.
    """
    _require_monic(f)
    p = f.modulus
    parts = _sqf_list(list(f.coeffs), p)
    return [(FieldPoly(p, tuple(g)), j) for g, j in sorted(parts, key=lambda t: t[1])]


def factor_degree_multiset(f: FieldPoly) -> DegreeMultiset:
    """Degrees of the irreducible factors of ``f``, counted with multiplicity."""
    _require_monic(f)
    if f.degree < 1:
        raise UsageError("degree must be at least 1")
    return DegreeMultiset.from_counts(_factor_counts(list(f.coeffs), f.modulus))


def factor_counts_raw(coeffs: list[int], p: int) -> dict[int, int]:
    """Fast path for callers holding a reduced monic coefficient list."""
    return _factor_counts(coeffs, p)


def is_irreducible_ff(f: FieldPoly) -> bool:
    _require_monic(f)
    if f.degree < 1:
        raise UsageError("degree must be at least 1")
    return factor_degree_multiset(f).parts == ((f.degree, 1),)


def count_irreducibles(p: int, i: int) -> int:
    """Number of monic irreducible polynomials of degree ``i`` over F_p."""
    if i < 1:
        raise UsageError("degree must be positive")
    total = sum(mobius(i // j) * p**j for j in divisors(i))
    q, r = divmod(total, i)
    assert r == 0
    return q


def alpha(p: int, i: int, m: int) -> Fraction:
    """Probability weight of choosing m unordered monic irreducibles of degree i.

    ``C(N + m - 1, m) / p^{i m}`` with N the number of degree-i irreducibles.
    """
    if i < 1 or m < 0:
        raise UsageError("need i >= 1 and m >= 0")
    return Fraction(comb(count_irreducibles(p, i) + m - 1, m), p ** (i * m))
