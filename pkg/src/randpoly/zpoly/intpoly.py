"""Integer polynomials of bounded height, coefficient models and reduction mod p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from ..errors import UsageError
from ..ff_factor import FieldPoly
from ..rng import RandomStream


@dataclass(frozen=True, slots=True)
class IntPoly:
    """``coeffs[i]`` is the coefficient of X^i; no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        out = [1]
        for r in roots:
            out = [0] + out
            for i in range(len(out) - 1):
                out[i] -= r * out[i + 1]
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def parse_poly_line(line: str) -> IntPoly:
    """Batch text format: coefficients from constant to leading term, space separated."""
    fields = line.split()
    if not fields:
        raise UsageError("empty polynomial line")
    try:
        return IntPoly(tuple(int(tok) for tok in fields))
    except ValueError as exc:
        raise UsageError(f"bad coefficient in line {line!r}") from exc


def format_poly_line(f: IntPoly) -> str:
    return " ".join(str(c) for c in f.coeffs)


# ---------------------------------------------------------------------------
# coefficient models

@dataclass(frozen=True)
class UniformRange:
    """Coefficients uniform in {low, ..., high}."""

    low: int
    high: int

    def __post_init__(self):
        if self.low > self.high:
            raise UsageError(f"empty range [{self.low}, {self.high}]")

    def draw(self, n: int, stream: RandomStream) -> list[int]:
        span = self.high - self.low + 1
        return [self.low + int(v) for v in stream.integers(span, n)]

    def label(self) -> str:
        return f"uniform:{self.low}:{self.high}"


@dataclass(frozen=True)
class PlusMinusOne:
    """Coefficients uniform in {-1, +1}: a draw d in {0, 1} maps to 2d - 1."""

    def draw(self, n: int, stream: RandomStream) -> list[int]:
        return (2 * stream.integers(2, n) - 1).tolist()

    def label(self) -> str:
        return "pm1"


@dataclass(frozen=True)
class ZeroOne:
    """Coefficients uniform in {0, 1}; optionally the constant term is pinned to 1."""

    constant_term_one: bool = False

    def draw(self, n: int, stream: RandomStream) -> list[int]:
        if self.constant_term_one:
            return [1] + stream.integers(2, n - 1).tolist()
        return stream.integers(2, n).tolist()

    def label(self) -> str:
        return "zero_one:c1" if self.constant_term_one else "zero_one"


CoefficientModel = Union[UniformRange, PlusMinusOne, ZeroOne]


def parse_model(text: str) -> CoefficientModel:
    """``uniform:LOW:HIGH``, ``pm1`` or ``zero_one[:c1]``."""
    parts = text.strip().split(":")
    kind = parts[0]
    if kind == "uniform" and len(parts) == 3:
        return UniformRange(int(parts[1]), int(parts[2]))
    if kind == "pm1" and len(parts) == 1:
        return PlusMinusOne()
    if kind == "zero_one" and len(parts) == 1:
        return ZeroOne(False)
    if kind == "zero_one" and parts[1:] == ["c1"]:
        return ZeroOne(True)
    raise UsageError(f"unknown coefficient model {text!r}")


def sample_int_poly(n: int, model: CoefficientModel, stream: RandomStream) -> IntPoly:
    """Monic X^n + sum zeta_i X^i with zeta_0..zeta_{n-1} drawn in that order."""
    if n < 1:
        raise UsageError("degree must be >= 1")
    return IntPoly(tuple(model.draw(n, stream)) + (1,))


def reduce_mod(f: IntPoly, p: int) -> FieldPoly:
    if not f.monic:
        raise UsageError("reduce_mod expects a monic polynomial")
    return FieldPoly(p, tuple(c % p for c in f.coeffs))


def as_array(f: IntPoly) -> np.ndarray:
    return np.array(f.coeffs, dtype=object)
