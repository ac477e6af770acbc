"""Numeric embeddings of cyclotomic elements, for cross-checks only.

The library itself never produces floating-point values; these helpers
evaluate an element's coefficient vector at a numerical root of unity so
tests can compare exact results against independent float computations.
"""

import cmath

import mpmath


def embed_complex(elem) -> complex:
    """Double-precision value of the element under zeta_N -> e^(2*pi*i/N)."""
    root = cmath.exp(2j * cmath.pi / elem.order)
    return sum(complex(c) * root**j for j, c in enumerate(elem.coefficients))


def embed_mp(elem, dps: int = 50):
    """High-precision (mpmath) value of the element."""
    with mpmath.workdps(dps):
        root = mpmath.exp(2j * mpmath.pi / elem.order)
        total = mpmath.mpc(0)
        for j, c in enumerate(elem.coefficients):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * root**j
        return total
