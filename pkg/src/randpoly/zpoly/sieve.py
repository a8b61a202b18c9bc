"""Multi-prime degree sieve: certify irreducibility over Q from factorizations mod p.

If f = g h over Z with g monic of degree d, then red_p(g) divides red_p(f)
for every p, so d is a sum of mod-p factor degrees for every p.  Intersecting
the achievable-degree sets over several primes therefore bounds the possible
divisor degrees; when only {0, n} survives, f is irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..arith import is_prime
from ..errors import UsageError
from ..ff_factor import DegreeMultiset, factor_counts_raw, squarefree_decomposition
from ..perm_lab import achievable_sums, sums_from_bits
from .intpoly import IntPoly, reduce_mod

DEFAULT_PRIMES = (2, 3, 5, 7)


class Status(str, Enum):
    IRREDUCIBLE = "Irreducible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SieveVerdict:
    n: int
    status: Status
    witness: int  # bitset of surviving divisor degrees
    primes_used: tuple[int, ...]

    def __post_init__(self):
        full = 1 | (1 << self.n)
        if self.witness & full != full:
            raise AssertionError("witness must contain 0 and n")
        if (self.status is Status.IRREDUCIBLE) != (self.witness == full):
            raise AssertionError("status disagrees with witness")

    @property
    def irreducible(self) -> bool:
        return self.status is Status.IRREDUCIBLE

    def degrees(self) -> list[int]:
        return sums_from_bits(self.witness)

    def proper_degrees(self) -> list[int]:
        return [d for d in self.degrees() if 0 < d < self.n]


def validate_primes(primes) -> tuple[int, ...]:
    primes = tuple(int(p) for p in primes)
    if not primes:
        raise UsageError("prime list is empty")
    if len(set(primes)) != len(primes):
        raise UsageError(f"duplicate primes in {primes}")
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise UsageError(f"not prime: {bad}")
    return primes


def mod_p_degrees(f: IntPoly, p: int) -> DegreeMultiset:
    """Factor-degree multiset of red_p(f), with multiplicity."""
    return DegreeMultiset.from_counts(factor_counts_raw([c % p for c in f.coeffs], p))


def degree_sieve_certify(f: IntPoly, primes=DEFAULT_PRIMES, *, early_exit: bool = True) -> SieveVerdict:
    """Intersect achievable divisor degrees of red_p(f) over ``primes``.

    With ``early_exit`` the scan stops once the witness is {0, n}; further
    primes could not change it, and ``primes_used`` lists what was scanned.
    """
    primes = validate_primes(primes)
    if not f.monic:
        raise UsageError("sieve expects a monic polynomial")
    n = f.degree
    if n < 2:
        raise UsageError("degree must be >= 2 (linear polynomials are irreducible)")
    full = 1 | (1 << n)
    witness = (1 << (n + 1)) - 1
    used = []
    for p in primes:
        witness &= achievable_sums(mod_p_degrees(f, p))
        used.append(p)
        if early_exit and witness == full:
            break
    status = Status.IRREDUCIBLE if witness == full else Status.UNKNOWN
    return SieveVerdict(n, status, witness, tuple(used))


def squarefull_degree(f: IntPoly, p: int) -> int:
    """deg psi where red_p(f) = phi * psi, phi squarefree and psi squarefull."""
    parts = squarefree_decomposition(reduce_mod(f, p))
    return sum(j * g.degree for g, j in parts if j >= 2)
