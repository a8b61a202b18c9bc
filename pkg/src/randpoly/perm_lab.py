"""Random permutations, cycle types and the cycle events used by the sieve argument.

Events take a :class:`DegreeMultiset` rather than a permutation, so the same
detectors run on cycle types and on factor-degree multisets of polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterator

from .errors import CapacityError, UsageError
from .ff_factor import DegreeMultiset
from .rng import RandomStream

PARTITION_CAP = 90


@dataclass(frozen=True, slots=True)
class Permutation:
    """``images[i]`` is sigma(i) on {0, ..., n-1}."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise UsageError("permutation needs n >= 1")
        if sorted(self.images) != list(range(n)):
            raise UsageError("images are not a bijection of {0..n-1}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def from_cycles(cls, n: int, cycles: list[tuple[int, ...]]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))


def fisher_yates(n: int, stream: RandomStream) -> list[int]:
    """Uniform shuffle of range(n).

    For i = n-1 down to 1, draw j uniform in [0, i] and swap positions i, j;
    draws are consumed in that order.
    """
    a = list(range(n))
    if n > 1:
        js = stream.below_many(range(n, 1, -1)).tolist()
        for i, j in zip(range(n - 1, 0, -1), js):
            a[i], a[j] = a[j], a[i]
    return a


def sample_permutation(n: int, stream: RandomStream) -> Permutation:
    if n < 1:
        raise UsageError("n must be >= 1")
    return Permutation(tuple(fisher_yates(n, stream)))


def cycle_lengths(images) -> list[int]:
    n = len(images)
    seen = bytearray(n)
    out = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = 1
            i = images[i]
            length += 1
        out.append(length)
    return out


def cycle_type(sigma: Permutation) -> DegreeMultiset:
    return DegreeMultiset.from_parts(cycle_lengths(sigma.images))


def sample_cycle_type(n: int, stream: RandomStream) -> DegreeMultiset:
    """Cycle type of a uniform permutation, skipping the Permutation wrapper."""
    return DegreeMultiset.from_parts(cycle_lengths(fisher_yates(n, stream)))


def cycle_type_count(ct: DegreeMultiset) -> int:
    """Number of permutations of S_n with cycle type ``ct``: n! / prod(m_i! i^m_i)."""
    denom = 1
    for i, m in ct.parts:
        denom *= factorial(m) * i**m
    return factorial(ct.n) // denom


def exact_cycle_probability(ct: DegreeMultiset) -> Fraction:
    if ct.n < 1:
        raise UsageError("cycle type must have weight >= 1")
    denom = 1
    for i, m in ct.parts:
        denom *= factorial(m) * i**m
    return Fraction(1, denom)


def enumerate_partitions(n: int, cap: int = PARTITION_CAP) -> Iterator[DegreeMultiset]:
    """All partitions of ``n``, largest part descending, then reverse-lexicographic.

    The sequence starts with the single part ``n`` and ends with ``1^n``:
    n=4 gives (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    if n > cap:
        raise CapacityError(f"partition enumeration capped at n={cap}, asked for {n}")
    for parts in _partitions_desc(n):
        yield DegreeMultiset.from_parts(parts)


def _partitions_desc(n: int) -> Iterator[list[int]]:
    # standard reverse-lexicographic successor on the descending part list
    a = [n]
    while True:
        yield list(a)
        # strip trailing ones
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        k = a.pop() - 1
        rem = ones + 1
        a.append(k)
        while rem > k:
            a.append(k)
            rem -= k
        if rem:
            a.append(rem)


def partition_count(n: int) -> int:
    """Partition number p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def achievable_sums(ct: DegreeMultiset) -> int:
    """Bitset (as an int) of all subset sums of the parts, with multiplicity.

    Bit s is set iff s is a sum of a sub-multiset.  Repeated part sizes are
    split into power-of-two bundles so each size costs O(log m_i) shifts.
    """
    bits = 1
    for i, m in ct.parts:
        chunk = 1
        while m > 0:
            take = min(chunk, m)
            bits |= bits << (i * take)
            m -= take
            chunk <<= 1
    return bits


def sums_from_bits(bits: int) -> list[int]:
    out = []
    s = 0
    while bits:
        if bits & 1:
            out.append(s)
        bits >>= 1
        s += 1
    return out


def has_double_divisor(ct: DegreeMultiset, threshold: float) -> bool:
    """True iff some l > threshold divides two distinct parts (multiplicity counts)."""
    if threshold < 1:
        raise UsageError("threshold must be >= 1")
    sizes = [i for i, _ in ct.parts if i > threshold]
    for i, m in ct.parts:
        if i > threshold and m >= 2:
            return True
    # two different sizes sharing a divisor > threshold
    for a_idx, a in enumerate(sizes):
        for b in sizes[a_idx + 1:]:
            if gcd(a, b) > threshold:
                return True
    return False


def _has_prime_factor_above(l: int, floor: float) -> bool:
    rest = l
    d = 2
    while d * d <= rest:
        while rest % d == 0:
            if d > floor:
                return True
            rest //= d
        d += 1 if d == 2 else 2
    return rest > 1 and rest > floor


def has_rough_cycle(ct: DegreeMultiset, a: float, b: float, prime_floor: float) -> bool:
    """True iff some part l in [n^a, n^b] has a prime factor above ``prime_floor``."""
    if not 0 <= a < b <= 1:
        raise UsageError("need 0 <= a < b <= 1")
    n = ct.n
    lo, hi = n**a, n**b
    for l, _ in ct.parts:
        if lo <= l <= hi and _has_prime_factor_above(l, prime_floor):
            return True
    return False


def window_mask(lo: int, hi: int) -> int:
    """Bitset with bits lo..hi set."""
    return ((1 << (hi - lo + 1)) - 1) << lo


def slack_sums(bits: int, lam: int) -> int:
    """Bits s such that s - t is achievable for some 0 <= t <= lam."""
    out = bits
    for t in range(1, lam + 1):
        out |= bits << t
    return out
