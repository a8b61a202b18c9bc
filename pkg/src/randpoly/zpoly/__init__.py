"""Bounded-height integer polynomials: sampling, sieve certificates, discriminants."""

from .disc_report import DiscriminantReport, analyze_discriminant
from .intpoly import (
    CoefficientModel,
    IntPoly,
    PlusMinusOne,
    UniformRange,
    ZeroOne,
    format_poly_line,
    parse_model,
    parse_poly_line,
    reduce_mod,
    sample_int_poly,
)
from .oracle import divisor_degrees_small, oracle_irreducible_small, rational_factor_degrees
from .resultant import discriminant, discriminant_sylvester, resultant, resultant_sylvester
from .sieve import DEFAULT_PRIMES, SieveVerdict, Status, degree_sieve_certify, squarefull_degree
from .sturm import real_root_count

__all__ = [
    "CoefficientModel", "DEFAULT_PRIMES", "DiscriminantReport", "IntPoly", "PlusMinusOne",
    "SieveVerdict", "Status", "UniformRange", "ZeroOne", "analyze_discriminant",
    "degree_sieve_certify", "discriminant", "discriminant_sylvester", "divisor_degrees_small",
    "format_poly_line", "oracle_irreducible_small", "parse_model", "parse_poly_line",
    "rational_factor_degrees", "real_root_count", "reduce_mod", "resultant",
    "resultant_sylvester", "sample_int_poly", "squarefull_degree",
]
