import json
from math import gcd

import pytest

from hclat.bernoulli import bernoulli_abs
from hclat.verify import (
    verify_gcd_power_of_two,
    verify_identity_suite,
    verify_numerator_coprimality,
)


class TestGcdPowerOfTwo:
    def test_desk_range_verified(self):
        report = verify_gcd_power_of_two(300)
        assert report.status == "verified"
        assert report.counterexamples == []
        assert report.cursor == 300
        assert report.exit_code == 0

    def test_smallest_range(self):
        report = verify_gcd_power_of_two(2)
        assert report.status == "verified"
        # gcd(sigma_2, sigma_1^2) = gcd(224, 256) = 32 = 2^5
        assert gcd(224, 16**2) == 32

    def test_invalid_range(self):
        with pytest.raises(ValueError):
            verify_gcd_power_of_two(1)


class TestNumeratorCoprimality:
    def test_desk_range_verified(self):
        report = verify_numerator_coprimality(300)
        assert report.status == "verified"
        assert report.counterexamples == []

    def test_m_12_example(self):
        num_24 = (bernoulli_abs(12) / 48).numerator
        num_12 = (bernoulli_abs(6) / 24).numerator
        assert num_12 == 691
        assert gcd(num_24, num_12**2) == 1

    def test_trivial_case(self):
        report = verify_numerator_coprimality(2)
        assert report.status == "verified"


class TestIdentitySuite:
    def test_desk_range_verified(self):
        report = verify_identity_suite(50)
        assert report.status == "verified"
        assert report.counterexamples == []

    def test_empty_range_is_partial(self):
        report = verify_identity_suite(1)
        assert report.status == "partial"
        assert report.counterexamples == []


class TestReportMechanics:
    def test_determinism(self):
        a = verify_gcd_power_of_two(60)
        b = verify_gcd_power_of_two(60)
        assert a.to_json(include_wall_time=False) == b.to_json(include_wall_time=False)

    def test_json_fields_are_strings(self):
        report = verify_gcd_power_of_two(20)
        data = json.loads(report.to_json())
        assert data["range"] == {"m_min": "2", "m_max": "20"}
        assert data["cursor"] == "20"
        assert isinstance(data["wall_time_seconds"], float)

    def test_parallel_soundness(self):
        serial = verify_gcd_power_of_two(80)
        for workers in (2, 3):
            parallel = verify_gcd_power_of_two(80, workers=workers)
            assert parallel.to_json(include_wall_time=False) == serial.to_json(
                include_wall_time=False
            )

    def test_parallel_identity_suite(self):
        serial = verify_identity_suite(12)
        parallel = verify_identity_suite(12, workers=2)
        assert parallel.to_json(include_wall_time=False) == serial.to_json(
            include_wall_time=False
        )

    def test_resumability(self, tmp_path):
        ckpt = tmp_path / "scan.json"
        interrupted = verify_gcd_power_of_two(
            100, checkpoint_path=ckpt, checkpoint_every=5, stop_after=20
        )
        assert interrupted.status == "partial"
        assert 0 < interrupted.cursor < 100
        resumed = verify_gcd_power_of_two(100, checkpoint_path=ckpt)
        assert resumed.status == "verified"
        assert resumed.cursor == 100
        uninterrupted = verify_gcd_power_of_two(100)
        assert resumed.to_json(include_wall_time=False) == uninterrupted.to_json(
            include_wall_time=False
        )

    def test_resuming_finished_scan_is_stable(self, tmp_path):
        ckpt = tmp_path / "scan.json"
        first = verify_gcd_power_of_two(40, checkpoint_path=ckpt)
        again = verify_gcd_power_of_two(40, checkpoint_path=ckpt)
        assert first.to_json(include_wall_time=False) == again.to_json(
            include_wall_time=False
        )

    def test_mismatched_checkpoint_rejected(self, tmp_path):
        ckpt = tmp_path / "scan.json"
        verify_gcd_power_of_two(40, checkpoint_path=ckpt)
        with pytest.raises(ValueError):
            verify_gcd_power_of_two(60, checkpoint_path=ckpt)
        with pytest.raises(ValueError):
            verify_numerator_coprimality(40, checkpoint_path=ckpt)


@pytest.mark.long
def test_full_gcd_scan_reproduces_published_counterexample():
    report = verify_gcd_power_of_two(2678, workers=2)
    assert report.status == "counterexample"
    assert report.exit_code == 2
    odd_parts = [w for w in report.counterexamples if w["kind"] == "odd_part"]
    assert len(odd_parts) == 1
    w = odd_parts[0]
    assert w["m"] == 2678
    assert w["gcd_odd_part"] == 34511
    assert w["gcd_nu2"] == 2 * 2678 + 1
    # witness re-verifies in isolation
    from hclat.plumbing import profile

    g = gcd(profile(2678).sigma, profile(1339).sigma ** 2)
    assert g == (1 << (2 * 2678 + 1)) * 34511
