"""Exact Dedekind sums by two independent routes.

``dedekind_sawtooth`` is the elementary arithmetic form

    s(beta, alpha) = sum_{k=1}^{alpha-1} ((k/alpha)) ((k*beta/alpha))

and ``dedekind_cot`` is the cotangent form

    s(beta, alpha) = (1/(4*alpha)) * sum_{k=1}^{alpha-1}
                        cot(k*pi*beta/alpha) * cot(k*pi/alpha)

evaluated exactly in a cyclotomic field.  The two must agree on every
coprime pair; the sawtooth route is deliberately kept free of any shared
machinery so it can serve as an oracle for the cotangent route.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import _from_int_remainder, _reduce_int_mod_phi, cot_exact
from .errors import CertificationError, DomainError


def sawtooth(x) -> Fraction:
    """The sawtooth ((x)): x - floor(x) - 1/2 for non-integers, 0 at integers.

    >>> sawtooth(Fraction(7, 3))
    Fraction(-1, 6)
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    floor = x.numerator // x.denominator
    return x - floor - Fraction(1, 2)


def _check_pair(beta: int, alpha: int) -> None:
    if alpha < 1:
        raise DomainError(f"alpha must be >= 1, got {alpha}")
    if gcd(beta, alpha) != 1:
        raise DomainError(
            f"gcd({beta}, {alpha}) != 1: Dedekind sums need coprime arguments"
        )


def dedekind_sawtooth(beta: int, alpha: int) -> Fraction:
    """Dedekind sum by direct summation of sawtooth products.

    Brute force on purpose: this is the independent oracle for
    ``dedekind_cot``.  alpha = 1 gives the empty sum 0.
    """
    _check_pair(beta, alpha)
    total = Fraction(0)
    for k in range(1, alpha):
        total += sawtooth(Fraction(k, alpha)) * sawtooth(Fraction(k * beta, alpha))
    return total


def dedekind_cot(beta: int, alpha: int) -> Fraction:
    """Dedekind sum through exact cyclotomic cotangent products.

    The summand has period alpha in beta and the k and alpha-k terms are
    equal (both cotangent factors flip sign), which the implementation
    exploits; the arithmetic itself is entirely cot_exact products whose
    total is certified rational before being returned.
    """
    _check_pair(beta, alpha)
    if alpha == 1:
        return Fraction(0)
    return _cot_sum(beta % alpha, alpha)


@lru_cache(maxsize=None)
def _cot_sum(beta: int, alpha: int) -> Fraction:
    order, den, table = _cot_table(alpha)
    width = len(table[1])
    acc = [0] * (2 * width - 1)
    # Pair k with alpha-k: equal terms, so sum halves and doubles at the
    # end.  For even alpha the middle term k = alpha/2 is cot(pi/2) = 0.
    for k in range(1, (alpha + 1) // 2):
        left = table[k * beta % alpha]
        right = table[k]
        for i, x in enumerate(left):
            if x:
                for j, y in enumerate(right):
                    if y:
                        acc[i + j] += x * y
    # One reduction for the whole sum instead of one per product.
    rem = _reduce_int_mod_phi(acc, order)
    total = _from_int_remainder(order, [2 * c for c in rem], den * den)
    try:
        rational = total.to_rational()
    except CertificationError as exc:
        raise RuntimeError(
            "internal error: cotangent Dedekind sum failed rationality "
            f"certification for ({beta}, {alpha})"
        ) from exc
    return rational / (4 * alpha)


@lru_cache(maxsize=None)
def _cot_table(alpha: int) -> tuple[int, int, tuple]:
    """Integer-cleared coefficient vectors of cot(k*pi/alpha), k = 1..alpha-1,
    all at the common order lcm(4, 2*alpha) and over one shared denominator."""
    order = lcm(4, 2 * alpha)
    cots = [cot_exact(k, alpha).promoted(order) for k in range(1, alpha)]
    den = 1
    for elem in cots:
        for c in elem.coefficients:
            den = lcm(den, c.denominator)
    table = [()]  # 1-indexed
    for elem in cots:
        table.append(tuple(int(c * den) for c in elem.coefficients))
    return order, den, tuple(table)
