"""Reproducible random streams.

Every random draw in the package goes through :class:`RandomStream`, a
SplitMix64 generator.  The algorithm is fixed so any implementation can
reproduce the streams bit for bit:

* state is a 64-bit counter; ``next_u64`` adds ``GAMMA`` (mod 2**64) and
  returns ``mix64(state)``;
* ``mix64(z)``::

      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2**64)
      z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2**64)
      return z ^ (z >> 31)

* uniform integers in ``[0, m)`` use Lemire's multiply-shift with rejection:
  draw ``x``, let ``t = x * m``; accept ``t >> 64`` unless
  ``t mod 2**64 < (2**64 - m) mod m``, in which case draw again;
* per-trial streams start from
  ``derive_seed(master, tag, index) = mix64(mix64(master ^ fnv1a64(tag)) + (index + 1) * GAMMA)``
  where ``fnv1a64`` is the 64-bit FNV-1a hash of the UTF-8 tag.

Because SplitMix64 is counter based, blocks of outputs are produced with
numpy in one shot; the vectorized helpers below consume exactly the same
words, in the same order, as the scalar methods.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3

_U_GAMMA = np.uint64(GAMMA)
_U_M1 = np.uint64(_M1)
_U_M2 = np.uint64(_M2)
_LOW32 = np.uint64(0xFFFFFFFF)


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & MASK64
    return h


@lru_cache(maxsize=1024)
def _tag_base(master_seed: int, tag: str) -> int:
    return mix64((master_seed & MASK64) ^ fnv1a64(tag.encode("utf-8")))


def derive_seed(master_seed: int, tag: str, index: int) -> int:
    return mix64(_tag_base(master_seed, tag) + (index + 1) * GAMMA)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _U_M1
    z = (z ^ (z >> np.uint64(27))) * _U_M2
    return z ^ (z >> np.uint64(31))


def _mulhilo(x: np.ndarray, m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """128-bit product of uint64 ``x`` and ``m < 2**32``, as (high, low) words."""
    a = (x & _LOW32) * m
    b = (x >> np.uint64(32)) * m
    low = a + ((b & _LOW32) << np.uint64(32))
    carry = (low < a).astype(np.uint64)
    high = (b >> np.uint64(32)) + carry
    return high, low


class RandomStream:
    """SplitMix64 stream; one instance per trial, never shared between workers."""

    __slots__ = ("state",)
    algorithm = "splitmix64"

    def __init__(self, seed: int):
        self.state = seed & MASK64

    @classmethod
    def for_trial(cls, master_seed: int, tag: str, index: int) -> RandomStream:
        return cls(derive_seed(master_seed, tag, index))

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def u64_block(self, k: int) -> np.ndarray:
        """The next ``k`` outputs as a uint64 array."""
        if k <= 0:
            return np.zeros(0, dtype=np.uint64)
        steps = np.arange(1, k + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            states = np.uint64(self.state) + steps * _U_GAMMA
            out = _mix64_array(states)
        self.state = (self.state + k * GAMMA) & MASK64
        return out

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``, unbiased."""
        if not 1 <= m <= 1 << 64:
            raise ValueError(f"bound out of range: {m}")
        t = self.next_u64() * m
        low = t & MASK64
        if low < m:
            threshold = ((1 << 64) - m) % m
            while low < threshold:
                t = self.next_u64() * m
                low = t & MASK64
        return t >> 64

    def below_many(self, bounds) -> np.ndarray:
        """One draw per entry of ``bounds`` (each < 2**32), as repeated ``below`` would give."""
        bounds = np.asarray(bounds, dtype=np.uint64)
        k = len(bounds)
        out = np.empty(k, dtype=np.int64)
        pos = 0
        while pos < k:
            m = bounds[pos:]
            with np.errstate(over="ignore"):
                high, low = _mulhilo(self.u64_block(k - pos), m)
            # (2**64 - m) % m computed as (-m mod 2**64) % m
            with np.errstate(over="ignore"):
                threshold = (np.uint64(0) - m) % m
            bad = np.flatnonzero(low < threshold)
            if len(bad) == 0:
                out[pos:] = high.astype(np.int64)
                return out
            first = int(bad[0])
            out[pos:pos + first] = high[:first].astype(np.int64)
            # rewind to just after the rejected word and finish that draw serially
            self.state = (self.state - (k - pos - first - 1) * GAMMA) & MASK64
            m_first = int(m[first])
            threshold_first = ((1 << 64) - m_first) % m_first
            while True:
                t = self.next_u64() * m_first
                if t & MASK64 >= threshold_first:
                    break
            out[pos + first] = t >> 64
            pos += first + 1
        return out

    def integers(self, m: int, size: int) -> np.ndarray:
        """``size`` independent uniform draws from ``[0, m)``."""
        if m < 1 << 32:
            return self.below_many(np.full(size, m, dtype=np.uint64))
        return np.array([self.below(m) for _ in range(size)], dtype=object)

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))
