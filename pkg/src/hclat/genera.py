"""Genus coefficients on the two-monomial basis of highly connected manifolds.

On a closed ``(2m-1)``-connected ``4m``-manifold every Pontryagin class
vanishes except the top one ``p_m`` and, when ``m = 2k``, the middle one
``p_k``.  The signature class L, the A-hat class, the reduced Pontryagin
character ph, and the product (A-hat * ph) therefore reduce in degree
``4m`` to linear combinations of ``p_top`` and ``p_half^2``:

    L_m        = s_m p_m                                      (m odd)
               = (1/2)(s_k^2 - s_{2k}) p_k^2 + s_{2k} p_{2k}  (m = 2k)
    Ahat_m     = same shape with shat in place of s
    ph_m       = (-1)^{m+1}/(2m-1)! p_m                       (m odd)
               = p_k^2/(2(4k-1)!) - p_{2k}/(4k-1)!            (m = 2k)
    (Ahat ph)_m = ph_m                                        (m odd)
               = ph_m + (-1)^{k+1} shat_k/(2k-1)! p_k^2       (m = 2k)

with the coefficient constants

    shat_n = -(1/(2n-1)!) |B_{2n}|/4n
    s_n    = -2^{2n+1}(2^{2n-1}-1) shat_n = sigma_n / (a_n (2n-1)! j_n),

where ``sigma_n = a_n 2^{2n+1}(2^{2n-1}-1) num(|B_{2n}|/4n)`` is the minimal
positive signature of an almost parallelizable ``4n``-manifold and ``a_n``
is 2 for odd ``n`` and 1 otherwise.  Both closed forms of ``s_n`` are
evaluated and compared whenever it is computed.

The signature-defect combination

    S_m = L_m + (sigma_m/a_m) (c_m Ahat_m + (-1)^m d_m (Ahat ph)_m)

built from a Bezout pair ``c_m num + d_m denom = 1`` for ``|B_{2m}|/4m``
has no ``p_top`` contribution at all; this cancellation is re-checked on
every evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli_record, tangent_number
from .exact import BezoutPair

__all__ = [
    "GENERA",
    "GenusCoefficients",
    "P2kDecomposition",
    "shat",
    "s",
    "genus_coeffs",
    "stolz_class_coeffs",
    "p2k_solve",
]

GENERA = ("L", "Ahat", "Ph", "AhatPh")


@dataclass(frozen=True)
class GenusCoefficients:
    """Degree-``4m`` coefficients on the basis ``{p_top, p_half^2}``.

    ``coeff_p_half_sq`` is zero by convention for odd ``m`` where the
    middle Pontryagin class does not exist.
    """

    degree_m: int
    coeff_p_top: Fraction
    coeff_p_half_sq: Fraction

    def evaluate(self, p_top: int | Fraction, p_half_sq: int | Fraction) -> Fraction:
        return self.coeff_p_top * p_top + self.coeff_p_half_sq * p_half_sq


def _a(n: int) -> int:
    return 2 if n % 2 else 1


def shat(n: int) -> Fraction:
    """``shat_n = -(1/(2n-1)!) |B_{2n}|/4n``; e.g. ``shat(1) == -1/24``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rec = bernoulli_record(n)
    return -Fraction(rec.num4, rec.j * factorial(2 * n - 1))


def s(n: int) -> Fraction:
    """``s_n``, the ``p_top`` coefficient of L; e.g. ``s(1) == 1/3``.

    Both closed forms are computed exactly and must agree; a mismatch would
    mean the Bernoulli data is corrupted, so it raises RuntimeError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rec = bernoulli_record(n)
    via_shat = -(1 << (2 * n + 1)) * ((1 << (2 * n - 1)) - 1) * shat(n)
    sigma_over_a = (1 << (2 * n + 1)) * ((1 << (2 * n - 1)) - 1) * rec.num4
    via_sigma = Fraction(sigma_over_a, factorial(2 * n - 1) * rec.j)
    if via_shat != via_sigma:
        raise RuntimeError(f"the two closed forms of s_{n} disagree")
    return via_shat


def genus_coeffs(genus: str, m: int) -> GenusCoefficients:
    """Coefficients of the named genus in degree ``4m``.

    ``genus`` is one of ``"L"``, ``"Ahat"``, ``"Ph"``, ``"AhatPh"``.
    """
    if genus not in GENERA:
        raise ValueError(f"unknown genus {genus!r}; expected one of {GENERA}")
    if m < 1:
        raise ValueError("m must be >= 1")
    zero = Fraction(0)
    if m % 2:
        if genus == "L":
            top = s(m)
        elif genus == "Ahat":
            top = shat(m)
        else:  # Ph and AhatPh coincide in odd degree
            top = Fraction((-1) ** (m + 1), factorial(2 * m - 1))
        return GenusCoefficients(m, top, zero)
    k = m // 2
    f4k = factorial(4 * k - 1)
    if genus == "L":
        return GenusCoefficients(m, s(2 * k), (s(k) ** 2 - s(2 * k)) / 2)
    if genus == "Ahat":
        return GenusCoefficients(m, shat(2 * k), (shat(k) ** 2 - shat(2 * k)) / 2)
    if genus == "Ph":
        return GenusCoefficients(m, -Fraction(1, f4k), Fraction(1, 2 * f4k))
    half = Fraction((-1) ** (k + 1), factorial(2 * k - 1)) * shat(k) + Fraction(1, 2 * f4k)
    return GenusCoefficients(m, -Fraction(1, f4k), half)


def _check_bezout(bezout: BezoutPair, m: int) -> None:
    rec = bernoulli_record(m)
    if bezout.for_numerator != rec.num4 or bezout.for_denominator != rec.j:
        raise ValueError(
            f"Bezout pair is for ({bezout.for_numerator}, {bezout.for_denominator}), "
            f"expected the numerator/denominator ({rec.num4}, {rec.j}) of |B_{2 * m}|/{4 * m}"
        )


def stolz_class_coeffs(m: int, bezout: BezoutPair) -> GenusCoefficients:
    """Coefficients of the signature-defect combination ``S_m``.

    ``bezout`` must be a valid pair for the numerator and denominator of
    ``|B_{2m}|/4m`` (any representative, not necessarily normalized).  The
    ``p_top`` coefficient always cancels to zero; this is asserted and the
    exact zero is returned.  For odd ``m`` the ``p_half^2`` coefficient is
    zero as well.  For even ``m`` it depends on the chosen representative.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_bezout(bezout, m)
    rec = bernoulli_record(m)
    gl = genus_coeffs("L", m)
    ga = genus_coeffs("Ahat", m)
    gap = genus_coeffs("AhatPh", m)
    sigma_over_a = (1 << (2 * m + 1)) * ((1 << (2 * m - 1)) - 1) * rec.num4
    sign = (-1) ** m
    top = gl.coeff_p_top + sigma_over_a * (
        bezout.c * ga.coeff_p_top + sign * bezout.d * gap.coeff_p_top
    )
    half = gl.coeff_p_half_sq + sigma_over_a * (
        bezout.c * ga.coeff_p_half_sq + sign * bezout.d * gap.coeff_p_half_sq
    )
    if top != 0:
        raise RuntimeError(f"S_{m} acquired a nonzero p_top coefficient: {top}")
    return GenusCoefficients(m, top, half)


@dataclass(frozen=True)
class P2kDecomposition:
    """``p_{2k}`` and ``Ahat_{2k}`` expressed over the basis ``{L_{2k}, p_k^2}``."""

    k: int
    p2k_on_L: Fraction
    p2k_on_p_half_sq: Fraction
    ahat_on_L: Fraction
    ahat_on_p_half_sq: Fraction


def p2k_solve(k: int) -> P2kDecomposition:
    """Solve the even-degree L formula for ``p_{2k}`` and rewrite ``Ahat_{2k}``.

    The A-hat coefficients also have closed forms,

        on p_k^2 :  T_k^2 / ((2k-1)!^2 2^{4k+3} (2^{4k-1}-1))
        on L_2k  :  -1 / (2^{4k+1} (2^{4k-1}-1)),

    which are recomputed independently and compared before returning.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    sk, s2k = s(k), s(2 * k)
    hk, h2k = shat(k), shat(2 * k)
    p2k_on_L = 1 / s2k
    p2k_on_sq = -(sk**2 - s2k) / (2 * s2k)
    ahat_on_L = h2k / s2k
    ahat_on_sq = (s2k * hk**2 - h2k * sk**2) / (2 * s2k)
    pw = (1 << (4 * k - 1)) - 1
    closed_L = -Fraction(1, (1 << (4 * k + 1)) * pw)
    closed_sq = Fraction(
        tangent_number(k) ** 2, factorial(2 * k - 1) ** 2 * (1 << (4 * k + 3)) * pw
    )
    if ahat_on_L != closed_L or ahat_on_sq != closed_sq:
        raise RuntimeError(f"closed forms for Ahat_{2 * k} over (L, p^2) disagree")
    return P2kDecomposition(k, p2k_on_L, p2k_on_sq, ahat_on_L, ahat_on_sq)
