import itertools
import math
import random
from fractions import Fraction

import pytest

from oracles import laplace_det
from randpoly.det_lab import (IntMatrix, bareiss_det, binomial_radius, det_exact, sample_entries,
                              sample_matrix, square_probability)
from randpoly.errors import UsageError
from randpoly.rng import RandomStream

WEIGHT = {0: Fraction(1, 2), 1: Fraction(1, 4), -1: Fraction(1, 4)}


def exact_square_probability(n: int) -> Fraction:
    """Weighted enumeration of all 3^(n^2) matrices."""
    total = Fraction(0)
    for entries in itertools.product((0, 1, -1), repeat=n * n):
        d = laplace_det([list(entries[i * n:(i + 1) * n]) for i in range(n)])
        if d >= 0 and math.isqrt(d) ** 2 == d:
            w = Fraction(1)
            for e in entries:
                w *= WEIGHT[e]
            total += w
    return total


def test_entry_frequencies():
    xs = sample_entries(200000, RandomStream(3))
    n = len(xs)
    for value, p in ((0, 0.5), (1, 0.25), (-1, 0.25)):
        f = xs.count(value) / n
        assert abs(f - p) < 4 * math.sqrt(p * (1 - p) / n)


def test_det_examples():
    assert det_exact(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1
    assert det_exact(IntMatrix.from_rows([[1] * 4] * 4)) == 0
    assert det_exact(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_exact(IntMatrix.from_rows([[-1]])) == -1


def test_matrix_validation():
    with pytest.raises(UsageError):
        IntMatrix(2, (1, 2, 3))
    with pytest.raises(UsageError):
        sample_matrix(0, RandomStream(1))
    with pytest.raises(UsageError):
        square_probability(2, 0, RandomStream(1))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bareiss_matches_laplace(n):
    s = RandomStream(100 + n)
    for _ in range(300):
        m = sample_matrix(n, s)
        assert det_exact(m) == laplace_det(m.rows())


def test_bareiss_on_wide_entries():
    rng = random.Random(4)
    for n in range(1, 7):
        for _ in range(30):
            rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
            assert bareiss_det([r[:] for r in rows]) == laplace_det(rows)


def test_row_operation_invariances():
    s = RandomStream(55)
    for _ in range(200):
        rows = sample_matrix(6, s).rows()
        d = bareiss_det([r[:] for r in rows])
        swapped = [rows[1], rows[0]] + rows[2:]
        assert bareiss_det([r[:] for r in swapped]) == -d
        added = [rows[0]] + [[a + 3 * b for a, b in zip(rows[1], rows[0])]] + rows[2:]
        assert bareiss_det([r[:] for r in added]) == d
        transposed = [list(c) for c in zip(*rows)]
        assert bareiss_det(transposed) == d


@pytest.mark.parametrize("n", [1, 2])
def test_square_probability_matches_enumeration(n):
    exact = float(exact_square_probability(n))
    res = square_probability(n, 20000, RandomStream(7))
    assert res.n == n and res.trials == 20000
    sigma = math.sqrt(exact * (1 - exact) / res.trials)
    assert abs(res.frequency - exact) < 4 * sigma


def test_n1_square_probability_is_three_quarters():
    assert exact_square_probability(1) == Fraction(3, 4)


def test_square_probability_deterministic():
    a = square_probability(4, 500, RandomStream(11))
    b = square_probability(4, 500, RandomStream(11))
    assert a == b
    assert 0 <= a.singular_count <= a.square_count <= a.trials


def test_binomial_radius():
    assert binomial_radius(0, 10) == 0
    assert binomial_radius(50, 100) == pytest.approx(1.959963984540054 * 0.05)
