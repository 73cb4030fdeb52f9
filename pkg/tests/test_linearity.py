"""Linearity detection and certificate verification."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msum import (
    IntSet,
    LinearityCertificate,
    ParameterError,
    detect_linear,
    multisum_closure,
    verify_certificate,
)
from oracles import linear_tail_holds


def evens(B):
    return IntSet(range(2, B + 1, 2), B)


class TestDetect:
    def test_evens_certificate(self):
        r = detect_linear(evens(200), min_window=10)
        assert r.status == "certificate"
        assert r.certificate.k == 2 and r.certificate.N == 0
        assert r.certificate.window_count == 100

    def test_finite_set(self):
        r = detect_linear(IntSet([1, 3, 5, 6], 100))
        assert r.status == "finite"
        assert r.certificate is None

    def test_closure_of_123_is_all_of_it(self):
        A = multisum_closure(IntSet([1, 2, 3]), 2000).result
        r = detect_linear(A)
        assert r.status == "certificate"
        assert r.certificate.k == 1 and r.certificate.N == 0

    def test_leading_junk_pushes_N(self):
        S = IntSet([1] + list(range(2, 201, 2)), 200)
        r = detect_linear(S)
        assert r.status == "certificate"
        assert r.certificate.k == 2 and r.certificate.N == 1

    def test_unknown_when_tail_is_irregular(self):
        # top quarter occupied but no arithmetic tail fits a 10-multiple window
        S = IntSet([1, 2, 3, 5, 8, 13, 21, 34, 55, 89], 100)
        r = detect_linear(S)
        assert r.status == "unknown"

    def test_min_window_validation(self):
        with pytest.raises(ParameterError):
            detect_linear(evens(100), min_window=1)

    def test_min_window_blocks_narrow_certificates(self):
        S = IntSet(range(90, 101), 100)  # tail of 11 consecutive values, k = 1
        assert detect_linear(S, min_window=11).status == "certificate"
        assert detect_linear(S, min_window=12).status == "unknown"

    def test_json_round_trip(self):
        r = detect_linear(evens(200))
        payload = json.loads(json.dumps(r.to_json()))
        assert payload == {
            "k": 2,
            "N": 0,
            "horizon": 200,
            "window_count": 100,
            "status": "certificate",
        }
        f = detect_linear(IntSet([1, 3, 5, 6], 100))
        assert json.loads(json.dumps(f.to_json()))["status"] == "finite"


class TestVerify:
    def test_valid_certificate(self):
        assert verify_certificate(evens(200), LinearityCertificate(2, 0, 200, 100))

    def test_subwindow_of_valid_certificate(self):
        assert verify_certificate(evens(200), LinearityCertificate(2, 17, 200, 91))

    def test_wrong_modulus_rejected(self):
        assert not verify_certificate(evens(200), LinearityCertificate(4, 0, 200, 50))

    def test_horizon_precondition(self):
        with pytest.raises(ParameterError):
            verify_certificate(evens(100), LinearityCertificate(2, 0, 200, 100))

    def test_verify_matches_direct_scan(self):
        S = IntSet([5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60], 60)
        for k in (1, 2, 5, 10):
            for N in (0, 3, 5, 12):
                cert = LinearityCertificate(k, N, 60, 60 // k - N // k)
                assert verify_certificate(S, cert) == linear_tail_holds(
                    S.elements, 60, k, N
                )


class TestSoundnessAndMinimality:
    @given(st.sets(st.integers(1, 8), min_size=1, max_size=5), st.integers(2, 7))
    @settings(max_examples=60, deadline=None)
    def test_detector_never_emits_bad_certificate(self, seed, scale):
        # scaled closures produce a variety of linear and finite sets
        A = multisum_closure(IntSet(sorted(x * scale for x in seed)), 600).result
        r = detect_linear(A)
        if r.status == "certificate":
            assert verify_certificate(A, r.certificate)

    def test_k_is_gcd_of_tail_and_minimal(self):
        S = IntSet(range(6, 301, 6), 300)
        r = detect_linear(S)
        c = r.certificate
        assert c.k == 6
        tail = [e for e in S.elements if e > c.N]
        import math

        assert math.gcd(*tail) == c.k
        # no proper multiple of k verifies on the same window
        for mult in (2, 3):
            worse = LinearityCertificate(c.k * mult, c.N, c.horizon, c.window_count)
            assert not verify_certificate(S, worse)

    def test_stability_under_horizon_doubling(self):
        for seed in ([1, 2, 3], [2, 4, 6], [3, 6, 9], [2, 3]):
            a = multisum_closure(IntSet(seed), 1000)
            b = multisum_closure(IntSet(seed), 2000)
            ra, rb = detect_linear(a.result), detect_linear(b.result)
            if ra.status == "certificate" and rb.status == "certificate":
                assert ra.certificate.k == rb.certificate.k
