"""Resultants and discriminants of integer polynomials.

The default route is the subresultant polynomial remainder sequence, which
keeps intermediate coefficients small through exact divisions.  The
Sylvester-matrix determinant is kept alongside as an independent check.
"""

from __future__ import annotations

from math import gcd

from ..det_lab import IntMatrix, det_exact
from ..errors import UsageError
from .intpoly import IntPoly


def _content(a: list[int]) -> int:
    return gcd(*a)


def prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b (coefficient lists)."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a[:]
    lb = b[-1]
    low = b[:db]
    r = a[:]
    for i in range(da, db - 1, -1):
        c = r[i]
        s = i - db
        # r <- lb * r - c * x^s * b, dropping the (now zero) top term
        r = [lb * x for x in r[:i]]
        if c:
            r[s:i] = [x - c * y for x, y in zip(r[s:i], low)]
    while r and r[-1] == 0:
        r.pop()
    return r


def resultant(a: list[int], b: list[int]) -> int:
    """Res(a, b) by the subresultant PRS (Collins / Brown, as in Cohen's Alg. 3.3.7)."""
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h**delta
        b = [x // div for x in r]
        g = a[-1]
        h = g**delta // h ** (delta - 1) if delta else h
        da, db = db, len(b) - 1
        if db == 0:
            h = b[0] ** da // h ** (da - 1)
            return s * t * h


def _derivative(a: list[int]) -> list[int]:
    return [i * a[i] for i in range(1, len(a))]


def discriminant_coeffs(coeffs: list[int]) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f) for a coefficient list of degree n >= 1."""
    n = len(coeffs) - 1
    if n < 1:
        raise UsageError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(coeffs, _derivative(coeffs))
    lc = coeffs[-1]
    q, r = divmod(res, lc)
    assert r == 0
    return -q if (n * (n - 1) // 2) % 2 else q


def discriminant(f: IntPoly) -> int:
    if f.degree < 2:
        raise UsageError("discriminant needs degree >= 2")
    return discriminant_coeffs(list(f.coeffs))


def sylvester_matrix(a: list[int], b: list[int]) -> IntMatrix:
    """(deg a + deg b)-square Sylvester matrix, rows of a then rows of b, leading terms first."""
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    rows = []
    ra = list(reversed(a))
    rb = list(reversed(b))
    for i in range(db):
        rows.append([0] * i + ra + [0] * (size - i - da - 1))
    for i in range(da):
        rows.append([0] * i + rb + [0] * (size - i - db - 1))
    return IntMatrix(size, tuple(x for row in rows for x in row))


def resultant_sylvester(a: list[int], b: list[int]) -> int:
    if len(a) == 1:
        return a[0] ** (len(b) - 1)
    if len(b) == 1:
        return b[0] ** (len(a) - 1)
    return det_exact(sylvester_matrix(a, b))


def discriminant_sylvester(f: IntPoly) -> int:
    """Discriminant via the fraction-free determinant of the Sylvester matrix of f, f'."""
    n = f.degree
    if n < 2:
        raise UsageError("discriminant needs degree >= 2")
    a = list(f.coeffs)
    res = resultant_sylvester(a, _derivative(a))
    q, r = divmod(res, a[-1])
    assert r == 0
    return -q if (n * (n - 1) // 2) % 2 else q
