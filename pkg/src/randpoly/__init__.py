"""Random polynomials over Z and F_p, permutation statistics and their experiments."""

__version__ = "0.1.0"
