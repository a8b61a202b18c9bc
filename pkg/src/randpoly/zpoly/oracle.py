"""Exact irreducibility over Q for small degree, by complex-root recombination.

Every monic factor of f over Z is the product of (x - r) over some subset of
the complex roots.  We locate the roots to high precision, screen all root
subsets of size <= n/2 by whether their sum and product are integers, build
the surviving candidates at full precision, round, and confirm by exact
integer division.  Independent of the mod-p machinery by construction.
"""

from __future__ import annotations

import itertools
from math import comb, gcd, isqrt

import mpmath
import numpy as np

from ..errors import PrecisionError, UsageError
from ..ff_factor import DegreeMultiset
from ..perm_lab import achievable_sums
from .intpoly import IntPoly
from .resultant import discriminant_coeffs, prem

MAX_ORACLE_DEGREE = 12
_MAX_DPS = 400


def _factor_coeff_bound(coeffs: list[int]) -> int:
    """Upper bound on |coefficient| of any monic integer factor (Mignotte-style)."""
    n = len(coeffs) - 1
    norm = isqrt(sum(c * c for c in coeffs)) + 1
    return max(comb(n, j) for j in range(n + 1)) * norm


def _divides(g: list[int], f: list[int]) -> bool:
    """Exact division test for monic g."""
    r = f[:]
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            s = i - dg
            for j in range(dg + 1):
                r[s + j] -= c * g[j]
    return not any(r[:dg])


def _roots(coeffs: list[int], dps: int) -> list[mpmath.mpc]:
    """All roots to ~dps digits, validated by disjoint inclusion disks."""
    n = len(coeffs) - 1
    with mpmath.workdps(dps + 10):
        fc = [mpmath.mpf(c) for c in reversed(coeffs)]
        dc = [mpmath.mpf(c * i) for i, c in reversed(list(enumerate(coeffs))) if i]
        approx = np.roots(np.array(list(reversed(coeffs)), dtype=float))
        roots = [mpmath.mpc(complex(z)) for z in approx]
        tol = mpmath.mpf(10) ** (-dps)
        for _ in range(60):
            worst = mpmath.mpf(0)
            for k, z in enumerate(roots):
                fz = mpmath.polyval(fc, z)
                dz = mpmath.polyval(dc, z)
                if dz == 0:
                    break
                step = fz / dz
                roots[k] = z - step
                worst = max(worst, abs(step))
            if worst < tol:
                break
        radii = []
        for z in roots:
            dz = mpmath.polyval(dc, z)
            if dz == 0:
                radii = None
                break
            radii.append(n * abs(mpmath.polyval(fc, z) / dz))
        ok = radii is not None and all(r < tol for r in radii) and all(
            abs(roots[i] - roots[j]) > radii[i] + radii[j]
            for i, j in itertools.combinations(range(n), 2))
        if not ok:
            roots, err = mpmath.polyroots(fc, maxsteps=400, extraprec=2 * dps, error=True)
            if err > tol:
                raise PrecisionError(f"roots not resolved at {dps} digits")
            roots = list(roots)
    return roots


def _candidate(roots, z, subset, dps):
    """Integer coefficients of prod (x - r) over ``subset``, or None if clearly not integral."""
    zs = z[list(subset)]
    s = zs.sum()
    prod = zs.prod()
    if abs(s.imag) > 1e-6 * (1 + abs(s)) or abs(s.real - round(s.real)) > 1e-6 * (1 + abs(s)):
        return None
    if abs(prod - round(prod.real)) > 1e-6 * (1 + abs(prod)):
        return None
    with mpmath.workdps(dps):
        integral_tol = mpmath.mpf(10) ** (-(dps // 2))
        cand = [mpmath.mpc(1)]
        for k in subset:
            r = roots[k]
            cand = [mpmath.mpc(0)] + cand
            for j in range(len(cand) - 1):
                cand[j] -= r * cand[j + 1]
        rounded = []
        ambiguous = False
        for c in cand:
            nearest = int(mpmath.nint(c.real))
            dist = abs(c - nearest)
            if dist > mpmath.mpf("1e-4"):
                return None
            if dist > integral_tol:
                ambiguous = True
            rounded.append(nearest)
    if ambiguous:
        raise PrecisionError("candidate factor is neither clearly integral nor clearly not")
    return rounded


def _recombine(coeffs: list[int], dps: int) -> bool:
    n = len(coeffs) - 1
    roots = _roots(coeffs, dps)
    z = np.array([complex(r) for r in roots])
    for size in range(1, n // 2 + 1):
        for subset in itertools.combinations(range(n), size):
            cand = _candidate(roots, z, subset, dps)
            if cand is None:
                continue
            if _divides(cand, coeffs):
                return False
            raise PrecisionError("near-integral candidate failed exact division")
    return True


def _split_degrees(coeffs: list[int], dps: int) -> list[int]:
    """Irreducible factor degrees of a squarefree monic polynomial.

    Repeatedly peels off the smallest root subset giving an integer factor;
    minimality makes that factor irreducible.
    """
    roots = _roots(coeffs, dps)
    z = np.array([complex(r) for r in roots])
    current = coeffs[:]
    remaining = list(range(len(coeffs) - 1))
    degrees: list[int] = []
    while remaining:
        m = len(remaining)
        found = None
        for size in range(1, m // 2 + 1):
            for subset in itertools.combinations(remaining, size):
                cand = _candidate(roots, z, subset, dps)
                if cand is None:
                    continue
                if not _divides(cand, current):
                    raise PrecisionError("near-integral candidate failed exact division")
                found = subset, cand
                break
            if found:
                break
        if found is None:
            degrees.append(m)
            break
        subset, cand = found
        degrees.append(len(subset))
        current = _quotient(current, cand)
        remaining = [k for k in remaining if k not in subset]
    return sorted(degrees)


def _quotient(f: list[int], g: list[int]) -> list[int]:
    """f / g for monic g dividing f exactly."""
    r = f[:]
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        q[i - dg] = c
        if c:
            s = i - dg
            for j in range(dg + 1):
                r[s + j] -= c * g[j]
    if any(r[:dg]):
        raise ArithmeticError("inexact division")
    return q


def _primitive(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a = a[:-1]
    if not a:
        return []
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _zgcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(prem(a, b))
    return a


def _derivative(a: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(a)][1:]


def _yun(coeffs: list[int]) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic integer polynomial (Yun)."""
    df = _derivative(coeffs)
    a = _zgcd(coeffs, df)
    b = _quotient(coeffs, a)
    c = _quotient(df, a) if len(a) > 1 else df
    d = [x - y for x, y in itertools.zip_longest(c, _derivative(b), fillvalue=0)]
    out = []
    i = 1
    while len(b) > 1:
        g = _zgcd(b, d) if any(d) else b
        if len(g) > 1:
            out.append((g, i))
        b = _quotient(b, g)
        c = _quotient(d, g) if any(d) else []
        d = [x - y for x, y in itertools.zip_longest(c, _derivative(b), fillvalue=0)]
        i += 1
    return out


def rational_factor_degrees(f: IntPoly) -> DegreeMultiset:
    """Degrees (with multiplicity) of the irreducible factors of monic ``f`` over Q."""
    n = f.degree
    if not f.monic:
        raise UsageError("oracle expects a monic polynomial")
    if not 1 <= n <= MAX_ORACLE_DEGREE:
        raise UsageError(f"oracle handles degrees 1..{MAX_ORACLE_DEGREE}, got {n}")
    counts: dict[int, int] = {}
    for g, mult in _yun(list(f.coeffs)):
        if len(g) == 2:
            degs = [1]
        else:
            digits = len(str(_factor_coeff_bound(g)))
            dps = max(40, 2 * digits + 10)
            while True:
                try:
                    degs = _split_degrees(g, dps)
                    break
                except PrecisionError:
                    if dps >= _MAX_DPS:
                        raise
                    dps *= 2
        for d in degs:
            counts[d] = counts.get(d, 0) + mult
    return DegreeMultiset.from_counts(counts)


def divisor_degrees_small(f: IntPoly) -> int:
    """Bitset of degrees of monic divisors of ``f`` over Z (exact)."""
    return achievable_sums(rational_factor_degrees(f))


def oracle_irreducible_small(f: IntPoly) -> bool:
    """True iff monic ``f`` (2 <= deg <= 12) is irreducible over Q.

    A repeated root (disc = 0) means gcd(f, f') is a proper factor, so such
    inputs are reported reducible without root finding.
    """
    n = f.degree
    if not f.monic:
        raise UsageError("oracle expects a monic polynomial")
    if not 2 <= n <= MAX_ORACLE_DEGREE:
        raise UsageError(f"oracle handles degrees 2..{MAX_ORACLE_DEGREE}, got {n}")
    coeffs = list(f.coeffs)
    if coeffs[0] == 0:
        return False
    if discriminant_coeffs(coeffs) == 0:
        return False
    digits = len(str(_factor_coeff_bound(coeffs)))
    dps = max(40, 2 * digits + 10)
    while True:
        try:
            return _recombine(coeffs, dps)
        except PrecisionError:
            if dps >= _MAX_DPS:
                raise
            dps *= 2
