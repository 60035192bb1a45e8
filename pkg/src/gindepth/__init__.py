"""Groebner bases, generic initial ideals and Hilbert coefficients in grevlex,
with decision procedures for depth and for prime-realizability of monomial ideals."""

__version__ = "0.1.0"
