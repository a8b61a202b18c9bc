"""Arithmetic profile of a discriminant: 2-adic valuation, squareness, sign."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import is_square, v2
from ..errors import InvariantViolation, UsageError
from .intpoly import IntPoly
from .resultant import discriminant_coeffs
from .sturm import real_root_count_coeffs


@dataclass(frozen=True)
class DiscriminantReport:
    disc: int
    v2: int | None  # None stands for infinity (disc == 0)
    is_square: bool
    sign: int
    nonreal_count: int | None

    @property
    def degenerate(self) -> bool:
        return self.disc == 0


def analyze_discriminant(f: IntPoly, *, count_real: bool = True) -> DiscriminantReport:
    """Discriminant with valuation, square test and sign.

    When ``count_real`` is set and disc != 0 the number of non-real roots is
    obtained from a Sturm count and checked against the sign of disc.
    """
    if f.degree < 2:
        raise UsageError("discriminant needs degree >= 2")
    coeffs = list(f.coeffs)
    d = discriminant_coeffs(coeffs)
    sign = (d > 0) - (d < 0)
    if d == 0:
        return DiscriminantReport(0, None, True, 0, None)
    nonreal = None
    if count_real:
        nonreal = f.degree - real_root_count_coeffs(coeffs)
        if nonreal % 2 or (-1) ** (nonreal // 2) != sign:
            raise InvariantViolation(
                f"sign of disc {sign} disagrees with {nonreal} non-real roots for {f}")
    return DiscriminantReport(d, v2(d), is_square(d), sign, nonreal)
