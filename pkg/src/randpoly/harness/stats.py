"""Small statistics helpers for Monte Carlo summaries."""

from __future__ import annotations

from math import fsum, log
from typing import Sequence

from ..det_lab import Z95, binomial_radius

LN2 = log(2.0)

__all__ = ["Z95", "binomial_radius", "combined_radius", "significantly_greater",
           "not_significantly_greater", "log_abs", "mean_var", "linear_fit", "histogram_text"]


def combined_radius(r1: float, r2: float) -> float:
    """Radius used for comparing two frequencies: the plain sum (conservative)."""
    return r1 + r2


def significantly_greater(f_hi: float, r_hi: float, f_lo: float, r_lo: float) -> bool:
    """f_hi exceeds f_lo by more than the combined radius."""
    return f_hi - f_lo > combined_radius(r_hi, r_lo)


def not_significantly_greater(f_next: float, r_next: float, f_prev: float, r_prev: float) -> bool:
    """f_next does not exceed f_prev beyond the combined radius."""
    return f_next - f_prev <= combined_radius(r_next, r_prev)


def log_abs(d: int) -> float:
    """ln|d| for a nonzero integer of any size.

    Uses the bit length for the exponent and the top 53 bits for the mantissa,
    so it never overflows a float.
    """
    d = abs(d)
    if d == 0:
        raise ValueError("log of zero")
    b = d.bit_length()
    if b <= 53:
        return log(d)
    shift = b - 53
    return log(d >> shift) + shift * LN2


def mean_var(xs: Sequence[float]) -> tuple[float | None, float | None]:
    """Sample mean and unbiased variance (None when undefined)."""
    k = len(xs)
    if k == 0:
        return None, None
    mean = fsum(xs) / k
    if k == 1:
        return mean, None
    return mean, fsum((x - mean) ** 2 for x in xs) / (k - 1)


def linear_fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float] | None:
    """Least-squares (slope, intercept), or None with fewer than two distinct x."""
    if len(xs) < 2 or len(set(xs)) < 2:
        return None
    mx = fsum(xs) / len(xs)
    my = fsum(ys) / len(ys)
    sxx = fsum((x - mx) ** 2 for x in xs)
    sxy = fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return slope, my - slope * mx


def histogram_text(counts: dict[int, int]) -> str:
    """``value:count`` pairs in increasing value order, separated by ';'."""
    return ";".join(f"{k}:{counts[k]}" for k in sorted(counts))
