"""Characteristic-number lattices of closed highly connected 4m-manifolds.

The bordism group of ``(2m-1)``-connected ``4m``-manifolds modulo homotopy
spheres is free of rank 1 for odd ``m`` and rank 2 for even ``m`` (plus a
2-torsion summand in half the odd cases, which carries no characteristic
numbers).  The free part is described by explicit generators whose
signature, A-hat genus, and Pontryagin numbers are computed here, in terms
of one unknown: the order ``ord`` of the boundary sphere of the hyperbolic
plumbing in the cokernel of the J-homomorphism.  The conjectural (and in
low dimensions known) value is 1, which is the default everywhere.

All generator vectors are exact integers and satisfy the signature and
A-hat consistency equations against the genus coefficients, which the
tests enforce.  Lattices are compared via Hermite normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .bernoulli import bernoulli_abs, bernoulli_record, tangent_number
from .exact import BezoutPair, nu2
from .plumbing import lambda_k, mu_k, profile

__all__ = [
    "VARIANTS",
    "OrdParameter",
    "InvariantVector",
    "KernelStructure",
    "LatticeBasis",
    "kernel_structure",
    "generator_invariants",
    "minimal_signature",
    "minimal_ahat",
    "signature_divisibility_bound",
    "hermite_normal_form",
    "lattice_span_equal",
]

VARIANTS = ("full_kernel", "signature_in_4Z")


@dataclass(frozen=True)
class OrdParameter:
    """The order of the hyperbolic plumbing's boundary sphere in coker(J).

    Constraints enforced on construction:

    * ``value == 1`` for odd ``m != 5`` and for ``m in {2, 4}``;
    * ``value`` divides ``j_{m/2}^2`` for even ``m`` not in ``{2, 4}``;
    * ``nu2(value) <= 2 nu2(m) + 4`` (this is the only constraint that is
      not implied by the others, and it only bites at ``m = 5``).

    For ``m = 5`` the order is genuinely unknown, so it must be supplied
    explicitly; :meth:`default` returns the conjectural value 1.
    """

    value: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.value < 1:
            raise ValueError("ord must be a positive integer")
        if self.m % 2 and self.m != 5:
            if self.value != 1:
                raise ValueError(f"ord must be 1 for odd m != 5, got {self.value}")
        elif self.m in (2, 4):
            if self.value != 1:
                raise ValueError(f"ord is known to be 1 for m={self.m}")
        elif self.m % 2 == 0:
            j_half = bernoulli_record(self.m // 2).j
            if j_half**2 % self.value:
                raise ValueError(
                    f"ord={self.value} does not divide j_{self.m // 2}^2 = {j_half**2}"
                )
        if nu2(self.value) > 2 * nu2(self.m) + 4:
            raise ValueError(
                f"nu2(ord)={nu2(self.value)} exceeds the bound {2 * nu2(self.m) + 4}"
            )

    @classmethod
    def default(cls, m: int) -> "OrdParameter":
        return cls(1, m)


def _as_ord(ord: "OrdParameter | int", m: int) -> OrdParameter:
    if isinstance(ord, OrdParameter):
        if ord.m != m:
            raise ValueError(f"ord parameter is for m={ord.m}, not m={m}")
        return ord
    return OrdParameter(ord, m)


@dataclass(frozen=True)
class InvariantVector:
    """The quadruple (signature, A-hat, p_top, p_half^2) of a bordism class.

    ``p_top`` is ``p_m`` for odd ``m`` and ``p_{2k}`` for ``m = 2k``;
    ``p_half_sq`` is ``p_k^2`` and is zero for odd ``m``.
    """

    sigma: int
    ahat: int
    p_top: int
    p_half_sq: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.sigma, self.ahat, self.p_top, self.p_half_sq)


@dataclass(frozen=True)
class KernelStructure:
    """Isomorphism type: free rank plus torsion orders."""

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LatticeBasis:
    m: int
    ord: OrdParameter
    variant: str
    generators: tuple[tuple[str, InvariantVector], ...]


def kernel_structure(m: int, ord: OrdParameter | int = 1) -> KernelStructure:
    """Group structure of highly connected bordism modulo homotopy spheres.

    Rank 1 with a Z/2 summand for ``m = 1 mod 4`` (the Z/2 is present at
    ``m = 5`` exactly when ``ord == 1``), rank 1 for ``m = 3 mod 4``, and
    rank 2 for even ``m``.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    ord = _as_ord(ord, m)
    if m % 2 == 0:
        return KernelStructure(2, ())
    if m % 4 == 3:
        return KernelStructure(1, ())
    if m == 5:
        return KernelStructure(1, (2,)) if ord.value == 1 else KernelStructure(1, ())
    return KernelStructure(1, (2,))


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise RuntimeError(f"{what} is not an integer: {x}")
    return x.numerator


def generator_invariants(
    m: int,
    ord: OrdParameter | int = 1,
    variant: str = "full_kernel",
    bezout: BezoutPair | None = None,
) -> LatticeBasis:
    """Generators of the lattice of realized characteristic numbers.

    Odd ``m``: one generator, the ``sigma_m/8``-fold multiple of the E8
    plumbing.  Even ``m = 2k``: that generator plus a second one built from
    the hyperbolic plumbing (for ``k = 1, 2`` it is the quaternionic or
    octonionic projective plane instead).  In the ``signature_in_4Z``
    variant the second generator is replaced so that all signatures in the
    lattice are divisible by 4 (a factor 4 at ``k = 1, 2``, no change
    otherwise).

    ``bezout`` selects the representative used in the second generator;
    default is the canonical normalized pair.  Different representatives
    give different generators of the same lattice.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    ord = _as_ord(ord, m)
    prof = profile(m)
    if m % 2:
        vec = InvariantVector(
            sigma=prof.sigma,
            ahat=-2 * prof.num4,
            p_top=2 * factorial(2 * m - 1) * prof.j,
            p_half_sq=0,
        )
        return LatticeBasis(m, ord, variant, (("(sigma/8)*P", vec),))

    k = m // 2
    pk = profile(k)
    if bezout is None:
        bezout = prof.bezout
    else:
        if bezout.for_numerator != prof.num4 or bezout.for_denominator != prof.j:
            raise ValueError(
                f"Bezout pair is for ({bezout.for_numerator}, {bezout.for_denominator}), "
                f"expected ({prof.num4}, {prof.j})"
            )
    c, d = bezout.c, bezout.d
    f2k = factorial(2 * k - 1)
    f4k = factorial(4 * k - 1)
    g1 = InvariantVector(prof.sigma, -prof.num4, f4k * prof.j, 0)

    mu = mu_k(k)
    weight = (
        Fraction(ord.value * pk.a**2, mu)
        if variant == "full_kernel"
        else Fraction(ord.value * pk.a**2 * mu)
    )
    b4k = Fraction(pk.num4, pk.j)  # |B_{2k}| / 4k
    x = b4k * (bernoulli_abs(k) / bernoulli_abs(2 * k) + (-1) ** (k + 1))
    tk = tangent_number(k)
    sigma2 = weight * (Fraction(tk**2, 2) - 2 * prof.sigma * d * x)
    ahat2 = 2 * weight * prof.num4 * d * x
    ptop2 = weight * (f2k**2 + f4k * prof.j * b4k * (c * b4k + 2 * d * (-1) ** k))
    psq2 = 2 * weight * f2k**2
    g2 = InvariantVector(
        _exact_int(sigma2, "second generator sigma"),
        _exact_int(ahat2, "second generator ahat"),
        _exact_int(ptop2, "second generator p_top"),
        _exact_int(psq2, "second generator p_half_sq"),
    )
    if k == 1:
        label = "HP2" if variant == "full_kernel" else "4*HP2"
    elif k == 2:
        label = "OP2" if variant == "full_kernel" else "4*OP2"
    else:
        label = "ord*(Q - s(Q)*P)"
    return LatticeBasis(m, ord, variant, (("(sigma/8)*P", g1), (label, g2)))


def minimal_signature(m: int, ord: OrdParameter | int = 1) -> tuple[int, int | None]:
    """Minimal positive signature of a closed highly connected 4m-manifold.

    Returns ``(value, exponent)`` where ``exponent`` is the 2-power
    correction ``i_m = min(0, nu2(ord) - 2 nu2(m) - 4 + 2 nu2(a_{m/2}))``
    entering the even case, and None otherwise.  Every occurring signature
    is a multiple of the value.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ord = _as_ord(ord, m)
    if m in (1, 2, 4):
        return 1, None
    if m % 2:
        return profile(m).sigma, None
    a_half = 2 if (m // 2) % 2 else 1
    i_m = min(0, nu2(ord.value) - 2 * nu2(m) - 4 + 2 * nu2(a_half))
    g = gcd(profile(m).sigma, profile(m // 2).sigma ** 2)
    value = g >> (-i_m)
    if value << (-i_m) != g:
        raise RuntimeError(f"2^{i_m} gcd(...) is not an integer at m={m}")
    return value, i_m


def minimal_ahat(m: int) -> int:
    """Minimal positive A-hat genus of a closed highly connected 4m-manifold."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if m % 2:
        return 2 * profile(m).num4
    return gcd(profile(m).num4, profile(m // 2).num4 ** 2)


def signature_divisibility_bound(m: int) -> int:
    """Power of 2 dividing every highly connected signature, ``m not in {1,2,4}``."""
    if m in (1, 2, 4):
        raise ValueError(f"no 2-power bound in the exceptional dimension m={m}")
    if m < 1:
        raise ValueError("m must be >= 1")
    if m % 2:
        return 1 << (2 * m + 2)
    return 1 << (2 * m - 2 * nu2(m) - 3)


def hermite_normal_form(vectors) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form of the span of integer vectors.

    Pivots are positive, entries above a pivot are reduced into
    ``[0, pivot)``, zero rows are dropped.  Two generating sets span the
    same subgroup of Z^n exactly when their normal forms coincide.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return ()
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("vectors must all have the same length")
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            while rows[i][c]:
                q = rows[r][c] // rows[i][c]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[i])]
                rows[r], rows[i] = rows[i], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r] if any(row))


def lattice_span_equal(b1: LatticeBasis, b2: LatticeBasis) -> bool:
    """Whether two bases generate the same subgroup of integer 4-vectors.

    The bases must belong to the same dimension parameter m.  Comparing the
    two variants is allowed and gives False whenever their lattices differ
    (at m = 2 or 4 the signature_in_4Z lattice has index 4 in the full one).
    """
    if b1.m != b2.m:
        raise ValueError("bases must share the same m")
    v1 = [vec.as_tuple() for _, vec in b1.generators]
    v2 = [vec.as_tuple() for _, vec in b2.generators]
    return hermite_normal_form(v1) == hermite_normal_form(v2)
