"""Independent brute-force oracles used to derive and check expected values.

Nothing here imports the algorithms under test; each routine is the most
direct (slow) way to get the answer.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial


# --- polynomials over F_p by trial division -------------------------------

def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        c = a[-1] * inv % p
        s = len(a) - len(b)
        for j, bj in enumerate(b):
            a[s + j] = (a[s + j] - c * bj) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _polydiv(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p)
    for s in range(len(a) - len(b), -1, -1):
        c = a[s + len(b) - 1] * inv % p
        q[s] = c
        for j, bj in enumerate(b):
            a[s + j] = (a[s + j] - c * bj) % p
    return q


def monic_polys(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def brute_factor_degrees(coeffs: list[int], p: int) -> dict[int, int]:
    """Degree counts of the monic irreducible factors (with multiplicity) by trial division."""
    f = [c % p for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    counts: dict[int, int] = {}
    d = 1
    while len(f) - 1 >= 2 * d:
        found = False
        for g in monic_polys(p, d):
            if not _polymod(f, g, p):
                # smallest-degree divisor is irreducible
                f = _polydiv(f, g, p)
                counts[d] = counts.get(d, 0) + 1
                found = True
                break
        if not found:
            d += 1
    if len(f) > 1:
        counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
    return counts


def brute_irreducible_count(p: int, d: int) -> int:
    return sum(1 for g in monic_polys(p, d) if brute_factor_degrees(g, p) == {d: 1})


# --- symmetric group by enumeration ---------------------------------------

def perm_cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return out


def sn_cycle_type_counts(n: int) -> dict[tuple[int, ...], int]:
    """Cycle type (sorted lengths, descending) -> number of permutations in S_n."""
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(perm_cycle_lengths(perm), reverse=True))
        out[key] = out.get(key, 0) + 1
    return out


def subset_sums(parts: list[int]) -> set[int]:
    sums = {0}
    for x in parts:
        sums |= {s + x for s in sums}
    return sums


def window_event_probability(n: int, k: int, copies: int = 4) -> Fraction:
    """P(some l in [k, 2k] is a subset sum of cycle lengths for all ``copies`` permutations)."""
    window = set(range(k, 2 * k + 1))
    tally: dict[frozenset, int] = {}
    for perm in itertools.permutations(range(n)):
        key = frozenset(subset_sums(perm_cycle_lengths(perm)) & window)
        tally[key] = tally.get(key, 0) + 1
    hits = 0
    for combo in itertools.product(tally, repeat=copies):
        if frozenset.intersection(*combo):
            weight = 1
            for key in combo:
                weight *= tally[key]
            hits += weight
    return Fraction(hits, factorial(n) ** copies)


# --- exact linear algebra ---------------------------------------------------

def laplace_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


# --- integer polynomials ----------------------------------------------------

def sylvester_resultant(a: list[int], b: list[int]) -> int:
    """Res(a, b) as the determinant of the Sylvester matrix, by elimination over Q."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(a)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(b)) + [0] * (size - n - 1 - i))
    return _fraction_det(rows)


def _fraction_det(rows: list[list[int]]) -> int:
    """Gaussian elimination over Q (different route from Bareiss and Laplace)."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return int(det)



def avoid_lengths_probability(n: int, lengths: set[int]) -> float:
    """P(a uniform permutation of S_n has no cycle with length in ``lengths``).

    Coefficient extraction from exp(-sum_{k in T} x^k / k) / (1 - x).
    """
    a = [0.0] * (n + 1)
    a[0] = 1.0
    ts = sorted(lengths)
    for j in range(1, n + 1):
        a[j] = -sum(a[j - k] for k in ts if k <= j) / j
    return sum(a)


def largest_prime_factor_naive(m: int) -> int:
    best, d = 1, 2
    while m > 1:
        while m % d == 0:
            best, m = d, m // d
        d += 1
    return best
