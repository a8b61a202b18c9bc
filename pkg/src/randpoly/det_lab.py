"""Exact determinants of random {-1, 0, 1} matrices and the perfect-square frequency."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .arith import is_square
from .errors import UsageError
from .rng import RandomStream

Z95 = 1.959963984540054


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Square integer matrix, row-major."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.entries) != self.n * self.n:
            raise UsageError(f"need exactly n^2 = {self.n * self.n} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        rows = [list(r) for r in rows]
        return cls(len(rows), tuple(x for r in rows for x in r))

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]


# 2-bit code -> entry: 00, 01 -> 0; 10 -> +1; 11 -> -1
_CODE = (0, 0, 1, -1)


def sample_entries(count: int, stream: RandomStream) -> list[int]:
    """``count`` i.i.d. entries, 32 per 64-bit word, low bits first."""
    out = []
    while len(out) < count:
        word = stream.next_u64()
        for _ in range(min(32, count - len(out))):
            out.append(_CODE[word & 3])
            word >>= 2
    return out


def sample_matrix(n: int, stream: RandomStream) -> IntMatrix:
    """Entries 0 w.p. 1/2 and +-1 w.p. 1/4 each, filled row by row."""
    if n < 1:
        raise UsageError("n must be >= 1")
    return IntMatrix(n, tuple(sample_entries(n * n, stream)))


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; ``rows`` is consumed.

    Pivot is the first nonzero entry in the column at or below the diagonal.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = k
        while piv < n and rows[piv][k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        rk = rows[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            rows[i] = [0] * (k + 1) + [(akk * ri[j] - aik * rk[j]) // prev for j in range(k + 1, n)]
        prev = akk
    return sign * rows[n - 1][n - 1]


def det_exact(m: IntMatrix) -> int:
    return bareiss_det(m.rows())


@dataclass(frozen=True)
class SquareFrequency:
    n: int
    trials: int
    square_count: int
    singular_count: int

    @property
    def frequency(self) -> float:
        return self.square_count / self.trials

    @property
    def ci_radius(self) -> float:
        return binomial_radius(self.square_count, self.trials)


def binomial_radius(hits: int, trials: int) -> float:
    """95% normal-approximation radius z * sqrt(f (1 - f) / N)."""
    f = hits / trials
    return Z95 * sqrt(f * (1 - f) / trials)


def det_square_trial(n: int, stream: RandomStream) -> tuple[bool, bool]:
    """One trial: (determinant is a perfect square, determinant is zero)."""
    d = bareiss_det(sample_matrix(n, stream).rows())
    return is_square(d), d == 0


def square_probability(n: int, trials: int, stream: RandomStream) -> SquareFrequency:
    """Empirical P(det is a perfect square), 0 counting as 0^2.

    One word from ``stream`` seeds the run; trial t then uses its own derived
    stream, so results do not depend on how trials are scheduled.
    """
    if trials < 1:
        raise UsageError("trials must be >= 1")
    master = stream.next_u64()
    squares = singular = 0
    for t in range(trials):
        sq, zero = det_square_trial(n, RandomStream.for_trial(master, f"det_square/{n}", t))
        squares += sq
        singular += zero
    return SquareFrequency(n, trials, squares, singular)
