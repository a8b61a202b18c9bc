"""Real-root counting with Sturm sequences over the integers."""

from __future__ import annotations

from math import gcd

from ..errors import UsageError
from .intpoly import IntPoly
from .resultant import prem


def _primitive(a: list[int]) -> list[int]:
    c = gcd(*a)
    return [x // c for x in a] if c > 1 else a


def sturm_sequence(coeffs: list[int]) -> list[list[int]]:
    """f, f', then negated remainders, each scaled by a positive factor.

    prem multiplies the true remainder by lc^(delta+1); the sign of that
    factor is undone so every element keeps the sign pattern of the
    classical Sturm chain.  Contents are divided out to limit growth.
    """
    f = _primitive(list(coeffs))
    seq = [f, _primitive([i * f[i] for i in range(1, len(f))])]
    while True:
        a, b = seq[-2], seq[-1]
        if len(b) == 1:
            break
        r = prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        if b[-1] < 0 and (delta + 1) % 2:
            r = [-x for x in r]
        seq.append(_primitive([-x for x in r]))
    return seq


def _variations(signs: list[int]) -> int:
    out = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            out += 1
        last = s
    return out


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def real_root_count_coeffs(coeffs: list[int]) -> int:
    seq = sturm_sequence(coeffs)
    if len(seq[-1]) > 1:
        raise UsageError("real_root_count needs a squarefree polynomial")
    at_pos = [_sign(s[-1]) for s in seq]
    at_neg = [_sign(s[-1]) * (-1) ** (len(s) - 1) for s in seq]
    return _variations(at_neg) - _variations(at_pos)


def real_root_count(f: IntPoly) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    if f.degree < 1:
        raise UsageError("degree must be >= 1")
    return real_root_count_coeffs(list(f.coeffs))
