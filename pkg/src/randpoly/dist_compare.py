"""Exact factor-type laws of random monic polynomials vs. cycle types of permutations.

``X`` is the law of the factor-degree multiset of a uniform monic polynomial
of degree n over F_q; ``Y`` is the cycle-type law of a uniform permutation in
S_n.  Everything here is exact.  Internally each law is kept as integer
numerators over a common denominator (q^n for X, n! for Y), which turns
sums and total-variation distances into integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Literal

from .arith import is_prime
from .errors import CapacityError, UsageError
from .ff_factor import DegreeMultiset, alpha, count_irreducibles, factor_counts_raw
from .perm_lab import cycle_type_count, enumerate_partitions, exact_cycle_probability

Kind = Literal["X", "Y"]
Key = tuple[tuple[int, int], ...]

DISTRIBUTION_CAP = 60
EXHAUSTIVE_CAP = 1 << 24


@dataclass(frozen=True)
class FactorTypeDistribution:
    n: int
    q: int | None
    kind: Kind
    entries: dict[DegreeMultiset, Fraction] = field(repr=False)

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def __getitem__(self, ct: DegreeMultiset) -> Fraction:
        return self.entries.get(ct, Fraction(0))


def _check_prime(q: int) -> None:
    if not is_prime(q):
        raise UsageError(f"q must be prime, got {q}")


def exact_factor_probability(q: int, ct: DegreeMultiset) -> Fraction:
    """P(a uniform monic degree-n polynomial over F_q has factor type ``ct``)."""
    _check_prime(q)
    if ct.n < 1:
        raise UsageError("factor type must have weight >= 1")
    out = Fraction(1)
    for i, m in ct.parts:
        out *= alpha(q, i, m)
    return out


@lru_cache(maxsize=None)
def _irreducible_counts(q: int, n: int) -> tuple[int, ...]:
    return (0,) + tuple(count_irreducibles(q, i) for i in range(1, n + 1))


def _x_numerator(q: int, ct: DegreeMultiset) -> int:
    counts = _irreducible_counts(q, ct.n)
    out = 1
    for i, m in ct.parts:
        out *= comb(counts[i] + m - 1, m)
    return out


def weight_table(q: int | None, n: int, kind: Kind) -> tuple[list[tuple[DegreeMultiset, int]], int]:
    """``([(ct, numerator), ...], denominator)`` over all partitions of n."""
    if n < 1:
        raise UsageError("n must be >= 1")
    if n > DISTRIBUTION_CAP:
        raise CapacityError(f"distributions are capped at n={DISTRIBUTION_CAP}")
    if kind == "X":
        _check_prime(q)
        rows = [(ct, _x_numerator(q, ct)) for ct in enumerate_partitions(n)]
        return rows, q**n
    if kind == "Y":
        rows = [(ct, cycle_type_count(ct)) for ct in enumerate_partitions(n)]
        return rows, factorial(n)
    raise UsageError(f"kind must be 'X' or 'Y', got {kind!r}")


def build_distribution(q: int | None, n: int, kind: Kind) -> FactorTypeDistribution:
    rows, denom = weight_table(q, n, kind)
    if sum(num for _, num in rows) != denom:
        raise AssertionError(f"{kind}_{n} does not sum to 1")
    entries = {ct: Fraction(num, denom) for ct, num in rows if num}
    return FactorTypeDistribution(n, q if kind == "X" else None, kind, entries)


def _exhaustive_counts(q: int, n: int) -> dict[DegreeMultiset, int]:
    tally: dict[tuple[tuple[int, int], ...], int] = {}
    for tail in itertools.product(range(q), repeat=n):
        counts = factor_counts_raw(list(tail) + [1], q)
        key = tuple(sorted(counts.items()))
        tally[key] = tally.get(key, 0) + 1
    return {DegreeMultiset(n, key): c for key, c in tally.items()}


def exhaustive_distribution(q: int, n: int) -> FactorTypeDistribution:
    """Factor every one of the q^n monic polynomials and tally the types."""
    _check_prime(q)
    if n < 1:
        raise UsageError("n must be >= 1")
    if q**n > EXHAUSTIVE_CAP:
        raise CapacityError(f"q^n = {q**n} exceeds the enumeration cap 2^24")
    total = q**n
    entries = {ct: Fraction(c, total) for ct, c in _exhaustive_counts(q, n).items()}
    return FactorTypeDistribution(n, q, "X", entries)


def mismatches(a: FactorTypeDistribution, b: FactorTypeDistribution) -> list[DegreeMultiset]:
    """Cells where two distributions differ (missing cells count as 0)."""
    keys = set(a.entries) | set(b.entries)
    return sorted((k for k in keys if a[k] != b[k]), key=lambda ct: ct.parts)


def truncate(ct: DegreeMultiset, r: int) -> Key:
    """The coordinates (m_r, m_{r+1}, ...) as sparse sorted pairs."""
    return tuple((i, m) for i, m in ct.parts if i >= r)


def marginal_from(dist: FactorTypeDistribution, r: int) -> dict[Key, Fraction]:
    if not 1 <= r <= dist.n + 1:
        raise UsageError(f"cutoff r must lie in [1, {dist.n + 1}]")
    out: dict[Key, Fraction] = {}
    for ct, pr in dist.entries.items():
        key = truncate(ct, r)
        out[key] = out.get(key, Fraction(0)) + pr
    return out


def _grouped(rows, r: int) -> dict[Key, int]:
    out: dict[Key, int] = {}
    for ct, num in rows:
        key = truncate(ct, r)
        out[key] = out.get(key, 0) + num
    return out


def tv_distance(q: int, n: int, r: int) -> Fraction:
    """Exact total-variation distance between the r-truncated X_n and Y_n laws."""
    if not 1 <= r <= n + 1:
        raise UsageError(f"cutoff r must lie in [1, {n + 1}]")
    x_rows, x_den = weight_table(q, n, "X")
    y_rows, y_den = weight_table(None, n, "Y")
    return _tv_from_tables(x_rows, x_den, y_rows, y_den, r)


def tv_profile(q: int, n: int, rs) -> dict[int, Fraction]:
    """tv_distance for several cutoffs, sharing one pass of partition enumeration."""
    x_rows, x_den = weight_table(q, n, "X")
    y_rows, y_den = weight_table(None, n, "Y")
    out = {}
    for r in rs:
        if not 1 <= r <= n + 1:
            raise UsageError(f"cutoff r must lie in [1, {n + 1}]")
        out[r] = _tv_from_tables(x_rows, x_den, y_rows, y_den, r)
    return out


def _tv_from_tables(x_rows, x_den, y_rows, y_den, r) -> Fraction:
    gx = _grouped(x_rows, r)
    gy = _grouped(y_rows, r)
    total = 0
    for key in set(gx) | set(gy):
        total += abs(gx.get(key, 0) * y_den - gy.get(key, 0) * x_den)
    return Fraction(total, 2 * x_den * y_den)


def tail_probability(q: int, n: int, i: int, lam: int) -> Fraction:
    """Exact P_{X_n}(m_i = lam)."""
    if i < 1 or lam < 0:
        raise UsageError("need i >= 1 and lam >= 0")
    if i > n:
        return Fraction(1 if lam == 0 else 0)
    rows, den = weight_table(q, n, "X")
    hit = sum(num for ct, num in rows if ct[i] == lam)
    return Fraction(hit, den)


def cycle_weight_total(x: int) -> Fraction:
    """Sum of prod 1/(m_i! i^m_i) over all partitions of x (equals 1).

    Summed term by term as fractions, independently of the n!-numerator tables.
    """
    return sum((exact_cycle_probability(ct) for ct in enumerate_partitions(x)), Fraction(0))


def cycle_weight_total_range(k: int, n: int) -> Fraction:
    """The same sum over all partitions of every weight in [k, n] (equals n - k + 1)."""
    return sum((cycle_weight_total(x) for x in range(k, n + 1)), Fraction(0))
