"""Exact Bernoulli and tangent numbers at large index.

Tangent numbers ``T_n = 2^{2n}(2^{2n}-1)|B_{2n}|/2n`` are integers and are
computed by Seidel's boustrophedon triangle: each row of the zigzag
triangle is obtained from the previous one by alternating partial sums,
using big-integer additions only, and the odd-row corner entries are the
tangent numbers.  Computing ``T_1..T_n`` this way costs ``O(n^2)``
big-integer additions and one triangle row of memory.

From ``T_n`` everything else is a single reduced fraction:

    |B_{2n}|        = 2n * T_n / (2^{2n}(2^{2n}-1))
    |B_{2n}| / 4n   = T_n / (2^{2n+1}(2^{2n}-1))  =  num4 / j   (reduced)

``j = j_n`` is the order of the image of the stable J-homomorphism in
degree ``4n-1``.

The von Staudt-Clausen theorem gives the denominator of ``|B_{2n}|/n`` as
a prime product, evaluated here without any Bernoulli number so the two
routes can be cross-checked against each other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import padic_valuation

__all__ = [
    "BernoulliRecord",
    "SeidelEngine",
    "tangent_numbers",
    "tangent_number",
    "bernoulli_abs",
    "bernoulli_record",
    "record_range",
    "vsc_denominator",
]


@dataclass(frozen=True)
class BernoulliRecord:
    """Index ``n`` together with ``|B_{2n}|`` and the reduced ``|B_{2n}|/4n``.

    ``num4 / j`` is ``|B_{2n}|/4n`` in lowest terms; both parts are kept
    because the numerator and the denominator ``j_n`` play independent roles
    downstream.
    """

    n: int
    abs_value: Fraction
    num4: int
    j: int


class SeidelEngine:
    """Memoized boustrophedon triangle.

    The last computed triangle row is kept so that extending the range
    reuses all previous work (each row is computed exactly once).  Cache
    population happens under a single lock: concurrent first requests for
    the same index compute it once, while reads of already cached values
    are plain list lookups.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._row: list[int] = [1]
        self._row_index = 0
        self._tangent: list[int] = [0]  # 1-indexed; _tangent[n] = T_n
        self._records: dict[int, BernoulliRecord] = {}

    def _extend(self, n_target: int) -> None:
        # caller holds the lock; rows 2n-1 carry T_n in their last entry
        target_row = 2 * n_target - 1
        row = self._row
        r = self._row_index
        tangent = self._tangent
        while r < target_row:
            acc = 0
            nxt = [0]
            push = nxt.append
            for x in reversed(row):
                acc += x
                push(acc)
            row = nxt
            r += 1
            if r & 1:
                tangent.append(acc)
        self._row = row
        self._row_index = r

    def tangent(self, n: int) -> int:
        if n < 1:
            raise ValueError("tangent numbers are indexed from 1")
        if n >= len(self._tangent):
            with self._lock:
                if n >= len(self._tangent):
                    self._extend(n)
        return self._tangent[n]

    def tangent_range(self, limit: int) -> list[int]:
        if limit < 0:
            raise ValueError("limit must be >= 0")
        if limit == 0:
            return []
        self.tangent(limit)
        return self._tangent[1 : limit + 1]

    def record(self, n: int) -> BernoulliRecord:
        rec = self._records.get(n)
        if rec is None:
            t = self.tangent(n)
            ratio4 = Fraction(t, (1 << (2 * n + 1)) * ((1 << (2 * n)) - 1))
            rec = BernoulliRecord(
                n=n,
                abs_value=ratio4 * (4 * n),
                num4=ratio4.numerator,
                j=ratio4.denominator,
            )
            rec = self._records.setdefault(n, rec)
        return rec

    def record_range(self, limit: int) -> Iterator[BernoulliRecord]:
        if limit < 0:
            raise ValueError("limit must be >= 0")
        for n in range(1, limit + 1):
            yield self.record(n)


_ENGINE = SeidelEngine()


def tangent_number(n: int) -> int:
    """The integer ``T_n``; ``T_1, T_2, T_3 = 1, 2, 16``."""
    return _ENGINE.tangent(n)


def tangent_numbers(limit: int) -> list[int]:
    """The sequence ``T_1 .. T_limit`` (empty for ``limit == 0``)."""
    return _ENGINE.tangent_range(limit)


def bernoulli_abs(n: int) -> Fraction:
    """``|B_{2n}|`` as an exact fraction, e.g. ``bernoulli_abs(1) == 1/6``."""
    return _ENGINE.record(n).abs_value


def bernoulli_record(n: int) -> BernoulliRecord:
    """The full record for index ``n`` (memoized)."""
    return _ENGINE.record(n)


def record_range(limit: int) -> Iterator[BernoulliRecord]:
    """Yield records ``n = 1 .. limit`` in order, streaming the triangle rows."""
    return _ENGINE.record_range(limit)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def vsc_denominator(n: int) -> int:
    """Denominator of ``|B_{2n}|/n`` from the von Staudt-Clausen theorem.

    Equals ``prod(p^(1 + v_p(n)))`` over primes ``p`` with ``p - 1`` dividing
    ``2n``.  Computed purely from the prime product, with no Bernoulli number
    involved, so it serves as an independent cross-check of the triangle route.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    for p in _primes_upto(2 * n + 1):
        if (2 * n) % (p - 1) == 0:
            out *= p ** (1 + padic_valuation(n, p))
    return out
