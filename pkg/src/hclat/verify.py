"""Long-range verification scans with checkpointing and worker pools.

Three claims are scanned over ranges of the dimension parameter m:

* ``gcd-power-of-two``: for even m, gcd(sigma_m, sigma_{m/2}^2) is a power
  of 2 (its 2-adic valuation must always be 2m + 1; a nontrivial odd part
  is the interesting kind of counterexample, first occurring at m = 2678
  with odd part 34511).
* ``numerator-coprimality``: for even m, num(|B_{2m}|/4m) and
  num(|B_m|/2m)^2 are coprime.
* ``identity-suite``: every cross-module identity of the library, per m.

Failures are report entries, never exceptions.  The Bernoulli stream is
produced once by the parent; per-index check work can be spread over a
process pool without changing any report content.  Checkpoints persist
the scan cursor and the counterexamples found so far, not Bernoulli data,
so a resumed run recomputes the (cheap relative to disk) stream and skips
only the check work already done.
"""

from __future__ import annotations

import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import bundles, genera, lattices, plumbing
from .bernoulli import record_range
from .exact import nu2

__all__ = [
    "VerificationReport",
    "verify_gcd_power_of_two",
    "verify_numerator_coprimality",
    "verify_identity_suite",
    "CLAIMS",
    "DESK_RANGES",
    "FULL_RANGES",
]

# desk-scale defaults and the opt-in full ranges per claim
DESK_RANGES = {"gcd-power-of-two": 300, "numerator-coprimality": 300, "identity-suite": 50}
FULL_RANGES = {"gcd-power-of-two": 2678, "numerator-coprimality": 42000, "identity-suite": 200}


def _allow_big_str() -> None:
    # decimal-string output of large scans exceeds the default int-to-str limit
    if sys.get_int_max_str_digits() < 2_000_000:
        sys.set_int_max_str_digits(2_000_000)


def _stringify(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


@dataclass
class VerificationReport:
    claim: str
    m_min: int
    m_max: int
    status: str  # verified | counterexample | partial
    counterexamples: list[dict]
    cursor: int
    params: dict
    wall_time_seconds: float = 0.0

    def to_dict(self, include_wall_time: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "range": {"m_min": str(self.m_min), "m_max": str(self.m_max)},
            "status": self.status,
            "counterexamples": _stringify(self.counterexamples),
            "cursor": str(self.cursor),
            "params": _stringify(self.params),
        }
        if include_wall_time:
            out["wall_time_seconds"] = round(self.wall_time_seconds, 3)
        return out

    def to_json(self, include_wall_time: bool = True) -> str:
        _allow_big_str()
        return json.dumps(self.to_dict(include_wall_time), indent=2)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "verified" else 2


class _Checkpoint:
    """Cursor-plus-counterexamples state persisted as JSON."""

    def __init__(self, path: str | Path, header: dict):
        self.path = Path(path)
        self.header = header
        self.cursor = 0
        self.counterexamples: list[dict] = []

    def load(self) -> None:
        if not self.path.exists():
            return
        _allow_big_str()
        data = json.loads(self.path.read_text())
        if data.get("header") != self.header:
            raise ValueError(
                f"checkpoint {self.path} was written for different parameters; "
                "delete it or use a different checkpoint path"
            )
        self.cursor = data["cursor"]
        self.counterexamples = data["counterexamples"]

    def save(self, cursor: int, counterexamples: list[dict]) -> None:
        _allow_big_str()
        self.cursor = cursor
        self.counterexamples = counterexamples
        payload = {
            "header": self.header,
            "cursor": cursor,
            "counterexamples": counterexamples,
        }
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(self.path)


def _run_scan(
    claim: str,
    m_min: int,
    m_max: int,
    payloads: Iterable[tuple],
    check: Callable[[tuple], tuple[int, list[dict]]],
    params: dict,
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    checkpoint_every: int = 50,
    stop_after: int | None = None,
) -> VerificationReport:
    """Ordered scan driver shared by all claims.

    ``payloads`` yields tuples whose first entry is the index m, in
    increasing order; ``check`` maps a payload to ``(m, witnesses)`` and
    must be a module-level function so a process pool can run it.
    ``stop_after`` ends the scan early after that many newly processed
    indices, leaving a resumable checkpoint and a "partial" report.
    """
    t0 = time.monotonic()
    header = {"claim": claim, "m_min": m_min, "m_max": m_max, "params": _stringify(params)}
    ckpt = _Checkpoint(checkpoint_path, header) if checkpoint_path else None
    if ckpt:
        ckpt.load()
    cursor = ckpt.cursor if ckpt else 0
    witnesses = list(ckpt.counterexamples) if ckpt else []

    todo = (p for p in payloads if p[0] > cursor)
    stopped = False
    processed = 0
    saw_item = cursor > 0

    def results() -> Iterator[tuple[int, list[dict]]]:
        if workers <= 1:
            for payload in todo:
                yield check(payload)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                yield from pool.map(check, todo, chunksize=8)

    for m, found in results():
        saw_item = True
        witnesses.extend(found)
        cursor = m
        processed += 1
        if ckpt and processed % checkpoint_every == 0:
            ckpt.save(cursor, witnesses)
        if stop_after is not None and processed >= stop_after:
            stopped = True
            break

    if ckpt:
        ckpt.save(cursor, witnesses)

    witnesses.sort(key=lambda w: (int(w.get("m", 0)), str(w.get("kind", ""))))
    if stopped or not saw_item:
        status = "partial"
    else:
        status = "counterexample" if witnesses else "verified"
    return VerificationReport(
        claim=claim,
        m_min=m_min,
        m_max=m_max,
        status=status,
        counterexamples=witnesses,
        cursor=cursor,
        params=params,
        wall_time_seconds=time.monotonic() - t0,
    )


def _sigma_from_num4(m: int, num4: int) -> int:
    a = 2 if m % 2 else 1
    return a * (1 << (2 * m + 1)) * ((1 << (2 * m - 1)) - 1) * num4


def _even_m_payloads(m_max: int) -> Iterator[tuple[int, int, int]]:
    """Stream (m, num4_m, num4_{m/2}) for even m, producing each record once."""
    num4: dict[int, int] = {}
    for rec in record_range(m_max):
        num4[rec.n] = rec.num4
        if rec.n % 2 == 0:
            yield (rec.n, rec.num4, num4[rec.n // 2])
            # records below n/2 can never be needed again
            num4.pop(rec.n // 2 - 1, None)


def _check_gcd_power_of_two(payload: tuple[int, int, int]) -> tuple[int, list[dict]]:
    m, num4_m, num4_half = payload
    g = gcd(_sigma_from_num4(m, num4_m), _sigma_from_num4(m // 2, num4_half) ** 2)
    nu = (g & -g).bit_length() - 1
    odd = g >> nu
    found = []
    if odd != 1:
        found.append({"m": m, "kind": "odd_part", "gcd_nu2": nu, "gcd_odd_part": odd})
    if nu != 2 * m + 1:
        found.append({"m": m, "kind": "nu2_law", "gcd_nu2": nu, "expected_nu2": 2 * m + 1})
    return m, found


def _check_numerator_coprimality(payload: tuple[int, int, int]) -> tuple[int, list[dict]]:
    m, num4_m, num4_half = payload
    g = gcd(num4_m, num4_half**2)
    found = []
    if g != 1:
        found.append({"m": m, "kind": "common_factor", "gcd": g})
    return m, found


def verify_gcd_power_of_two(
    m_max: int,
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    checkpoint_every: int = 50,
    stop_after: int | None = None,
) -> VerificationReport:
    """Check that gcd(sigma_m, sigma_{m/2}^2) is a power of 2 for even m <= m_max."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    return _run_scan(
        "gcd-power-of-two",
        2,
        m_max,
        _even_m_payloads(m_max),
        _check_gcd_power_of_two,
        params={"ord_policy": "not-involved"},
        workers=workers,
        checkpoint_path=checkpoint_path,
        checkpoint_every=checkpoint_every,
        stop_after=stop_after,
    )


def verify_numerator_coprimality(
    m_max: int,
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    checkpoint_every: int = 50,
    stop_after: int | None = None,
) -> VerificationReport:
    """Check gcd(num(|B_{2m}|/4m), num(|B_m|/2m)^2) = 1 for even m <= m_max."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    return _run_scan(
        "numerator-coprimality",
        2,
        m_max,
        _even_m_payloads(m_max),
        _check_numerator_coprimality,
        params={"ord_policy": "not-involved"},
        workers=workers,
        checkpoint_path=checkpoint_path,
        checkpoint_every=checkpoint_every,
        stop_after=stop_after,
    )


def _identity_witness(m: int, kind: str, detail: str) -> dict:
    return {"m": m, "kind": kind, "detail": detail}


def _run_identity(out: list[dict], m: int, kind: str, fn: Callable[[], bool | None]) -> None:
    # an identity "fails" either by returning False or by raising
    try:
        ok = fn()
    except Exception as exc:  # noqa: BLE001 - failures become report entries
        out.append(_identity_witness(m, kind, f"raised {type(exc).__name__}: {exc}"))
        return
    if ok is False:
        out.append(_identity_witness(m, kind, "identity evaluated to False"))


def _check_identities(payload: tuple[int]) -> tuple[int, list[dict]]:
    """Every cross-module identity at one index m (>= 2)."""
    (m,) = payload
    out: list[dict] = []
    prof = plumbing.profile(m)

    def run(kind: str, fn: Callable[[], bool | None]) -> None:
        _run_identity(out, m, kind, fn)

    run("nu2_sigma_law", lambda: nu2(prof.sigma) == 2 * m + 1 + nu2(prof.a))
    run("s_closed_forms", lambda: genera.s(m) is not None)
    canonical = plumbing.canonical_bezout(m)
    run(
        "stolz_no_p_top",
        lambda: genera.stolz_class_coeffs(m, canonical).coeff_p_top == 0,
    )
    if m % 2:
        run(
            "stolz_odd_vanishes",
            lambda: genera.stolz_class_coeffs(m, canonical).coeff_p_half_sq == 0,
        )

    def generators_consistent() -> bool:
        for variant in lattices.VARIANTS:
            basis = lattices.generator_invariants(m, 1, variant)
            gl = genera.genus_coeffs("L", m)
            ga = genera.genus_coeffs("Ahat", m)
            for _, vec in basis.generators:
                if gl.evaluate(vec.p_top, vec.p_half_sq) != vec.sigma:
                    return False
                if ga.evaluate(vec.p_top, vec.p_half_sq) != vec.ahat:
                    return False
        return True

    run("generator_consistency", generators_consistent)

    def minimal_matches_gcd() -> bool:
        basis = lattices.generator_invariants(m, 1, "full_kernel")
        sigmas = [vec.sigma for _, vec in basis.generators]
        value, _ = lattices.minimal_signature(m, 1)
        return value == gcd(*sigmas)

    run("minimal_signature_is_gcd", minimal_matches_gcd)

    def minimal_ahat_matches_gcd() -> bool:
        basis = lattices.generator_invariants(m, 1, "full_kernel")
        ahats = [vec.ahat for _, vec in basis.generators]
        return lattices.minimal_ahat(m) == gcd(*ahats)

    run("minimal_ahat_is_gcd", minimal_ahat_matches_gcd)

    def kappa_duality() -> bool:
        mat = bundles.pairing_matrix(m, 1)
        n = len(mat)
        return all(mat[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    run("kappa_duality_identity", kappa_duality)

    def kappa_integrality() -> bool:
        basis = lattices.generator_invariants(m, 1, "signature_in_4Z")
        exprs = bundles.kappa_basis(m, 1)
        rng = random.Random(0xC0FFEE ^ m)
        vecs = [vec for _, vec in basis.generators]
        for _ in range(3):
            coeffs = [rng.randint(-9, 9) for _ in vecs]
            combo = lattices.InvariantVector(
                sum(c * v.sigma for c, v in zip(coeffs, vecs)),
                sum(c * v.ahat for c, v in zip(coeffs, vecs)),
                sum(c * v.p_top for c, v in zip(coeffs, vecs)),
                sum(c * v.p_half_sq for c, v in zip(coeffs, vecs)),
            )
            if any(bundles.pairing(e, combo).denominator != 1 for e in exprs):
                return False
        return True

    run("kappa_integrality", kappa_integrality)

    run("bundle_divisor_mod_4", lambda: bundles.bundle_signature_divisor(m, 1) % 4 == 0)
    if m not in (1, 2, 4):
        run(
            "two_power_bound_divides",
            lambda: bundles.bundle_signature_divisor(m, 1)
            % lattices.signature_divisibility_bound(m)
            == 0,
        )

    if m % 2 == 0:
        k = m // 2
        prof_k = plumbing.profile(k)
        s_q = None

        def s_of_q_integral() -> bool:
            nonlocal s_q
            s_q = plumbing.s_of_Q(m)
            return True

        run("s_of_Q_both_formulas", s_of_q_integral)
        if s_q is not None:
            # j_k^2 s(Q) + lambda_k^2 sigma_k^2/8 is the representative term,
            # an exact integer multiple of sigma_{2k}/8
            lam = plumbing.lambda_k(k)
            run(
                "j2_s_congruence",
                lambda: (prof_k.j**2 * s_q + lam**2 * prof_k.sigma**2 // 8)
                % (prof.sigma // 8)
                == 0,
            )

            def bezout_robustness() -> bool:
                order = plumbing.bp_order(m)
                base_gcd = gcd(prof.sigma, 8 * abs(s_q))
                for t in (-2, -1, 1, 2):
                    shifted = canonical.shifted(t)
                    s_t = plumbing.s_of_Q(m, shifted)
                    if (s_t - s_q) % order:
                        return False
                    if gcd(prof.sigma, 8 * abs(s_t)) != base_gcd:
                        return False
                    for variant in lattices.VARIANTS:
                        if not lattices.lattice_span_equal(
                            lattices.generator_invariants(m, 1, variant),
                            lattices.generator_invariants(m, 1, variant, shifted),
                        ):
                            return False
                return True

            run("bezout_robustness", bezout_robustness)

        def proof_identity_first() -> bool:
            c, d = canonical.c, canonical.d
            lhs = genera.s(m) / 2
            rhs = Fraction(prof.sigma * d, 2 * factorial(2 * m - 1)) - Fraction(
                prof.sigma * c, 1
            ) * genera.shat(m) / 2
            return lhs == rhs

        run("half_s_identity", proof_identity_first)

        def proof_identity_second() -> bool:
            c, d = canonical.c, canonical.d
            return prof.sigma * c == (1 << (2 * m + 1)) * ((1 << (2 * m - 1)) - 1) * (
                1 - prof.j * d
            )

        run("sigma_c_identity", proof_identity_second)

        run("p2k_closed_forms", lambda: genera.p2k_solve(k) is not None)

        if m >= 10:

            def strictly_below_parallelizable() -> bool:
                value, _ = lattices.minimal_signature(m, 1)
                shift = m - nu2(m) - 8
                return (value << shift) < prof.sigma if shift >= 0 else value < (
                    prof.sigma << -shift
                )

            run("minimal_below_parallelizable", strictly_below_parallelizable)

    return m, out


def verify_identity_suite(
    m_max: int,
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    checkpoint_every: int = 50,
    stop_after: int | None = None,
) -> VerificationReport:
    """Run every cross-module identity for 2 <= m <= m_max.

    ``m_max = 1`` gives an empty "partial" report since the identities
    need m >= 2.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    payloads = ((m,) for m in range(2, m_max + 1))
    return _run_scan(
        "identity-suite",
        2,
        m_max,
        payloads,
        _check_identities,
        params={"ord_policy": "conjectural-1"},
        workers=workers,
        checkpoint_path=checkpoint_path,
        checkpoint_every=checkpoint_every,
        stop_after=stop_after,
    )


CLAIMS = {
    "gcd-power-of-two": verify_gcd_power_of_two,
    "numerator-coprimality": verify_numerator_coprimality,
    "identity-suite": verify_identity_suite,
}
