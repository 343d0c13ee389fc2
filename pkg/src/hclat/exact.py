"""Exact integer and rational primitives.

Integers are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction`` (always stored reduced, denominator positive).
Everything downstream is built on the three operations here: the
extended Euclidean algorithm, normalized Bezout pairs for a coprime
numerator/denominator, and p-adic valuations.  No rounding happens
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BezoutPair",
    "extended_gcd",
    "normalize_bezout",
    "padic_valuation",
    "nu2",
    "odd_part",
]


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(|a|, |b|) > 0``.

    Raises ValueError if both arguments are zero.
    """
    if a == 0 and b == 0:
        raise ValueError("extended_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class BezoutPair:
    """Coefficients ``c, d`` with ``c*for_numerator + d*for_denominator == 1``.

    The defining identity is checked on construction.  Normalization
    (``0 <= d < for_numerator``) is the contract of :func:`normalize_bezout`,
    not of this constructor, so shifted representatives
    ``(c + t*for_denominator, d - t*for_numerator)`` remain constructible,
    e.g. for robustness tests.
    """

    c: int
    d: int
    for_numerator: int
    for_denominator: int

    def __post_init__(self) -> None:
        if self.for_numerator <= 0 or self.for_denominator <= 0:
            raise ValueError("Bezout moduli must be positive")
        if self.c * self.for_numerator + self.d * self.for_denominator != 1:
            raise ValueError(
                "invalid Bezout pair: c*num + d*denom != 1 for "
                f"(c={self.c}, d={self.d}, num={self.for_numerator}, "
                f"denom={self.for_denominator})"
            )

    @property
    def is_normalized(self) -> bool:
        return 0 <= self.d < self.for_numerator

    def shifted(self, t: int) -> "BezoutPair":
        """The representative ``(c + t*denom, d - t*num)`` of the same pair."""
        return BezoutPair(
            self.c + t * self.for_denominator,
            self.d - t * self.for_numerator,
            self.for_numerator,
            self.for_denominator,
        )


def normalize_bezout(num: int, denom: int) -> BezoutPair:
    """The unique Bezout pair for coprime positive ``(num, denom)`` with
    ``0 <= d < num``; in particular ``d == 0`` and ``c == 1`` when ``num == 1``.

    Raises ValueError if the inputs are not positive and coprime.
    """
    if num <= 0 or denom <= 0:
        raise ValueError("num and denom must be positive")
    g, _, y = extended_gcd(num, denom)
    if g != 1:
        raise ValueError(f"inputs not coprime: gcd({num}, {denom}) = {g}")
    d = y % num
    c = (1 - d * denom) // num
    return BezoutPair(c, d, num, denom)


def padic_valuation(x: int | Fraction, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``x``; negative when ``p`` divides
    the denominator of a rational.

    ``p`` must be prime (only ``p >= 2`` is checked).  Raises ValueError for
    ``x == 0``, whose valuation is undefined.
    """
    if p < 2:
        raise ValueError("p must be a prime, hence >= 2")
    if x == 0:
        raise ValueError("the p-adic valuation of 0 is undefined")
    if isinstance(x, Fraction):
        return padic_valuation(x.numerator, p) - padic_valuation(x.denominator, p)
    n = abs(x)
    if p == 2:
        return (n & -n).bit_length() - 1
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu2(x: int | Fraction) -> int:
    """2-adic valuation, the case of :func:`padic_valuation` used throughout."""
    return padic_valuation(x, 2)


def odd_part(n: int) -> int:
    """``n`` with all factors of 2 removed (``n`` must be nonzero)."""
    if n == 0:
        raise ValueError("0 has no odd part")
    n = abs(n)
    return n >> ((n & -n).bit_length() - 1)
