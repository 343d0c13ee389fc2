"""Numeric invariants of the two standard plumbings.

``P`` is the E8 plumbing, the parallelizable ``4m``-manifold of signature 8
whose boundary sphere generates the cyclic group of homotopy spheres
bounding parallelizable manifolds (of order ``sigma_m / 8``).  ``Q`` is the
plumbing of two sphere disk bundles with hyperbolic intersection form,
signature 0, and, in dimension ``8k``,

    p_k^2(Q) = 2 lambda_k^2 a_k^2 (2k-1)!^2,   lambda_k = 2 iff k in {1, 2}.

The splitting invariant ``s(M) = (sigma(M) - <S_m(M), [M, dM]>) / 8`` of an
almost closed spin manifold is an integer.  For ``Q`` it vanishes in odd
``m`` and admits two independent closed formulas when ``m = 2k``; both are
evaluated exactly and must agree before the value is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli_abs, bernoulli_record, tangent_number
from .exact import BezoutPair, normalize_bezout

__all__ = [
    "DimensionProfile",
    "profile",
    "canonical_bezout",
    "bp_order",
    "pk2_of_Q",
    "s_of_Q",
    "s_of_Q_formulas",
    "stolz_s",
    "lambda_k",
    "mu_k",
]


def lambda_k(k: int) -> int:
    """2 for k in {1, 2}, else 1 (normalization of the middle class of Q)."""
    return 2 if k in (1, 2) else 1


def mu_k(k: int) -> int:
    """2 for k in {1, 2}, else 1 (index of the second lattice generator)."""
    return 2 if k in (1, 2) else 1


@dataclass(frozen=True)
class DimensionProfile:
    """The constants attached to dimension ``4m``.

    ``sigma`` is the minimal positive signature of an almost parallelizable
    ``4m``-manifold, ``a = 2`` iff ``m`` is odd, and ``num4 / j`` is the
    reduced ``|B_{2m}|/4m``.  For even ``m = 2k`` the profile also carries
    ``k``, ``lam = lambda_k``, ``mu = mu_k``, and the canonical (normalized)
    Bezout pair for ``(num4, j)``.
    """

    m: int
    a: int
    sigma: int
    num4: int
    j: int
    k: int | None = None
    lam: int | None = None
    mu: int | None = None
    bezout: BezoutPair | None = None

    @property
    def parity(self) -> str:
        return "odd" if self.m % 2 else "even"


def profile(m: int) -> DimensionProfile:
    """Populate the :class:`DimensionProfile` for dimension ``4m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    rec = bernoulli_record(m)
    a = 2 if m % 2 else 1
    sigma = a * (1 << (2 * m + 1)) * ((1 << (2 * m - 1)) - 1) * rec.num4
    if m % 2:
        return DimensionProfile(m=m, a=a, sigma=sigma, num4=rec.num4, j=rec.j)
    k = m // 2
    return DimensionProfile(
        m=m,
        a=a,
        sigma=sigma,
        num4=rec.num4,
        j=rec.j,
        k=k,
        lam=lambda_k(k),
        mu=mu_k(k),
        bezout=normalize_bezout(rec.num4, rec.j),
    )


def canonical_bezout(m: int) -> BezoutPair:
    """The normalized Bezout pair for the reduced ``|B_{2m}|/4m`` (any m >= 1)."""
    rec = bernoulli_record(m)
    return normalize_bezout(rec.num4, rec.j)


def bp_order(m: int) -> int:
    """``sigma_m / 8``, the order of the group of homotopy ``(4m-1)``-spheres
    bounding parallelizable manifolds.

    The group interpretation holds for ``m >= 2``; the formula value is
    returned for ``m = 1`` as well.
    """
    sigma = profile(m).sigma
    if sigma % 8:
        raise RuntimeError(f"sigma_{m} = {sigma} is not divisible by 8")
    return sigma // 8


def pk2_of_Q(k: int) -> int:
    """The Pontryagin number ``p_k^2`` of the hyperbolic plumbing in dimension 8k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = 2 if k % 2 else 1
    return 2 * lambda_k(k) ** 2 * a**2 * factorial(2 * k - 1) ** 2


def _check_bezout_for(bezout: BezoutPair, m: int) -> None:
    rec = bernoulli_record(m)
    if bezout.for_numerator != rec.num4 or bezout.for_denominator != rec.j:
        raise ValueError(
            f"Bezout pair is for ({bezout.for_numerator}, {bezout.for_denominator}); "
            f"dimension parameter m={m} needs a pair for ({rec.num4}, {rec.j})"
        )


def s_of_Q_formulas(k: int, bezout: BezoutPair) -> tuple[Fraction, Fraction]:
    """Both closed formulas for the splitting invariant of Q in dimension 8k.

    The first goes through ``sigma_k^2`` and the Bezout data, the second
    through the tangent number ``T_k`` and the ratio ``|B_{2k}|/|B_{4k}|``.
    Either one, for a valid pair, is an integer, but that is not assumed
    here; the raw fractions are returned for cross-checking.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_bezout_for(bezout, 2 * k)
    pk = profile(k)
    p2k = profile(2 * k)
    lam = lambda_k(k)
    c, d = bezout.c, bezout.d
    first = -Fraction(lam**2, 8 * pk.j**2) * (
        pk.sigma**2
        + pk.a**2 * p2k.sigma * pk.num4 * (c * pk.num4 + 2 * (-1) ** k * d * pk.j)
    )
    b4k = Fraction(pk.num4, pk.j)  # |B_{2k}| / 4k
    ratio = bernoulli_abs(k) / bernoulli_abs(2 * k)
    tk = tangent_number(k)
    second = Fraction(lam**2 * pk.a**2, 4) * (
        p2k.sigma * d * b4k * (ratio + (-1) ** (k + 1)) - Fraction(tk**2, 4)
    )
    return first, second


def s_of_Q(m: int, bezout: BezoutPair | None = None) -> int:
    """The splitting invariant of Q in dimension ``4m``.

    Returns 0 for odd ``m``.  For ``m = 2k`` both formulas are evaluated
    with the given Bezout pair (the canonical one when omitted) and must
    agree on an integer; any discrepancy raises RuntimeError since it can
    only come from an implementation bug.  The integer itself depends on
    the chosen Bezout representative; only its residue modulo
    ``sigma_m / 8`` is canonical.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if m % 2:
        return 0
    k = m // 2
    if bezout is None:
        bezout = profile(m).bezout
    first, second = s_of_Q_formulas(k, bezout)
    if first != second:
        raise RuntimeError(
            f"the two formulas for s(Q) disagree at k={k}: {first} != {second}"
        )
    if first.denominator != 1:
        raise RuntimeError(f"s(Q) at k={k} is not an integer: {first}")
    return first.numerator


def stolz_s(sigma_M: int, S_eval: Fraction | int) -> int:
    """``(sigma(M) - S_eval) / 8`` for an almost closed spin manifold.

    ``S_eval`` is the evaluation of the signature-defect class on the
    fundamental class.  The difference must be divisible by 8; anything
    else means the input data is not consistent and raises ValueError.
    """
    q = (Fraction(sigma_M) - Fraction(S_eval)) / 8
    if q.denominator != 1:
        raise ValueError(
            f"sigma - <S> = {Fraction(sigma_M) - Fraction(S_eval)} is not divisible by 8"
        )
    return q.numerator
