import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_factor_degrees, brute_irreducible_count, monic_polys
from randpoly.errors import UsageError
from randpoly.ff_factor import (DegreeMultiset, FieldPoly, alpha, count_irreducibles,
                                factor_counts_raw, factor_degree_multiset, is_irreducible_ff,
                                poly_gcd, squarefree_decomposition)


def fp(coeffs, p):
    return FieldPoly(p, tuple(coeffs))


def test_fieldpoly_normalizes():
    f = fp([4, 0, 5, 0, 0], 3)
    assert f.coeffs == (1, 0, 2)
    assert f.degree == 2
    assert fp([], 5).is_zero()
    assert fp([0, 3], 3).is_zero()


@pytest.mark.parametrize("p", [1, 4, 9, 2**62 + 1])
def test_fieldpoly_rejects_non_prime(p):
    with pytest.raises(UsageError):
        fp([1, 1], p)


def test_gcd_examples():
    x2p1 = fp([1, 0, 1], 2)
    assert poly_gcd(x2p1, fp([1, 1], 2)).coeffs == (1, 1)
    f = fp([2, 0, 4], 5)
    assert poly_gcd(f, fp([], 5)) == f.monic()
    assert poly_gcd(fp([1, 1, 0, 1], 2), fp([1, 1, 1], 2)).coeffs == (1,)


def test_gcd_modulus_mismatch():
    with pytest.raises(UsageError):
        poly_gcd(fp([1, 1], 2), fp([1, 1], 3))


def test_squarefree_examples():
    x = fp([0, 1], 2)
    x1 = fp([1, 1], 2)
    assert squarefree_decomposition(fp([0, 1, 0, 1], 2)) == [(x, 1), (x1, 2)]
    f = fp([1, 1, 1], 2)
    assert squarefree_decomposition(f) == [(f, 1)]
    assert squarefree_decomposition(fp([0, 0, 1], 2)) == [(x, 2)]


def test_squarefree_pth_power_branch():
    # (x + 1)^3 over F_3 has zero derivative
    g = fp([1, 1], 3)
    assert squarefree_decomposition(g**3) == [(g, 3)]
    # mixed: x (x+1)^3 (x+2)^4 over F_3
    f = fp([0, 1], 3) * g**3 * fp([2, 1], 3) ** 4
    assert squarefree_decomposition(f) == [(fp([0, 1], 3), 1), (g, 3), (fp([2, 1], 3), 4)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=9))
def test_squarefree_product_reproduces(p, tail):
    f = fp(tail + [1], p)
    prod = fp([1], p)
    for g, j in squarefree_decomposition(f):
        assert g.is_monic()
        prod = prod * g**j
    assert prod == f


def test_factor_degree_examples():
    assert factor_degree_multiset(fp([1, 1, 1], 2)).counts == {2: 1}
    assert factor_degree_multiset(fp([0, 1, 0, 1], 2)).counts == {1: 3}


def test_factor_rejects_bad_input():
    with pytest.raises(UsageError):
        factor_degree_multiset(fp([], 5))
    with pytest.raises(UsageError):
        factor_degree_multiset(fp([1, 2], 5))
    with pytest.raises(UsageError):
        factor_degree_multiset(fp([1], 5))


@pytest.mark.parametrize("p,n", [(2, 1), (2, 5), (2, 8), (3, 5), (5, 4), (7, 3)])
def test_factor_degrees_match_trial_division(p, n):
    for f in monic_polys(p, n):
        assert factor_counts_raw(f, p) == brute_factor_degrees(f, p), f


def test_factor_degrees_random_large_against_small_path():
    # degrees >= 12 take the matrix Frobenius path; products of known factors check it
    rng = random.Random(11)
    for p in (2, 3, 5, 7, 10007):
        for _ in range(6):
            f = fp([1], p)
            expected: dict[int, int] = {}
            while f.degree < 24:
                d = rng.randint(1, 6)
                while True:
                    g = fp([rng.randrange(p) for _ in range(d)] + [1], p)
                    if is_irreducible_ff(g):
                        break
                f = f * g
                expected[d] = expected.get(d, 0) + 1
            assert factor_degree_multiset(f).counts == expected


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.lists(st.integers(0, 10), min_size=1, max_size=40))
def test_weight_equals_degree(p, tail):
    f = fp(tail + [1], p)
    assert factor_degree_multiset(f).n == f.degree


def test_count_irreducibles_examples():
    assert count_irreducibles(2, 2) == 1
    assert count_irreducibles(2, 4) == 3
    assert count_irreducibles(2, 1) == 2


@pytest.mark.parametrize("p,i", [(p, i) for p in (2, 3) for i in range(1, 7) if p**i <= 729])
def test_count_irreducibles_exhaustive(p, i):
    assert count_irreducibles(p, i) == brute_irreducible_count(p, i)
    assert count_irreducibles(p, i) == sum(1 for g in monic_polys(p, i) if is_irreducible_ff(fp(g, p)))


def test_alpha_examples():
    assert alpha(2, 1, 2) == Fraction(3, 4)
    assert alpha(2, 2, 1) == Fraction(1, 4)
    assert all(alpha(p, i, 0) == 1 for p in (2, 3) for i in (1, 5))
    with pytest.raises(UsageError):
        alpha(2, 0, 1)


def test_is_irreducible_examples():
    assert is_irreducible_ff(fp([1, 1, 1], 2))
    assert not is_irreducible_ff(fp([1, 0, 1], 2))
    assert is_irreducible_ff(fp([1, 0, 1], 3))


def test_degree_multiset_validation():
    with pytest.raises(ValueError):
        DegreeMultiset(5, ((1, 2),))
    ct = DegreeMultiset.from_parts([3, 1, 1])
    assert ct.n == 5 and ct.counts == {1: 2, 3: 1}
    assert sorted(ct.sizes()) == [1, 1, 3]


def test_per_factor_sum_to_one():
    # sum over weight-n multisets of prod alpha(i, m_i) is 1, checked by brute listing
    p, n = 3, 5
    total = Fraction(0)
    for ms in itertools.product(*(range(n // i + 1) for i in range(1, n + 1))):
        if sum((i + 1) * m for i, m in enumerate(ms)) == n:
            term = Fraction(1)
            for i, m in enumerate(ms, 1):
                term *= alpha(p, i, m)
            total += term
    assert total == 1
