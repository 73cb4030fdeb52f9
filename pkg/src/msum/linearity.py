"""Empirical detection and verification of eventually linear membership.

A set S with horizon B is *eventually linear* when there are N and k such
that for every n in (N, B]: n is a member iff k divides n.  The detector
scans N upward and, for each tail, takes k as the gcd of the tail elements:
the definition forces every tail element to be a multiple of any valid k
and every multiple of k to be a member, so the tail gcd is the only
candidate.  A minimum window of multiples guards against vacuous
certificates squeezed against the horizon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .intset import IntSet

__all__ = [
    "LinearityCertificate",
    "LinearityResult",
    "detect_linear",
    "verify_certificate",
]

STATUS_CERTIFICATE = "certificate"
STATUS_FINITE = "finite"
STATUS_UNKNOWN = "unknown"


@dataclass(frozen=True)
class LinearityCertificate:
    """Attests: for all n in (N, horizon], n is a member iff k | n."""

    k: int
    N: int
    horizon: int
    window_count: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "N": self.N,
            "horizon": self.horizon,
            "window_count": self.window_count,
            "status": STATUS_CERTIFICATE,
        }


@dataclass(frozen=True)
class LinearityResult:
    """Detector outcome: a certificate, `finite`, or `unknown`."""

    status: str
    certificate: LinearityCertificate | None = None

    def to_json(self) -> dict:
        if self.certificate is not None:
            return self.certificate.to_json()
        return {
            "k": None,
            "N": None,
            "horizon": None,
            "window_count": None,
            "status": self.status,
        }


def detect_linear(S: IntSet, min_window: int = 10) -> LinearityResult:
    """Search for the least N (and its forced k) certifying linearity.

    Returns `finite` when no element reaches the top quarter of [1, B]: the
    set evidently stopped, so no k >= 1 can satisfy the biconditional.  The
    quarter boundary is a reported heuristic, not a mathematical claim.
    Returns `unknown` when no (N, k) fits within the horizon.
    """
    if min_window < 2:
        raise ParameterError("min_window must be >= 2")
    B = S.horizon
    if 4 * S.max_element <= 3 * B:
        return LinearityResult(STATUS_FINITE)

    elems = S._arr
    member = S.member_mask()

    # gcd of every tail: suffix_gcd[i] = gcd(elems[i:])
    suffix_gcd = np.zeros(len(elems), dtype=np.int64)
    g = 0
    for i in range(len(elems) - 1, -1, -1):
        g = math.gcd(g, int(elems[i]))
        suffix_gcd[i] = g

    # largest multiple of k in [1, B] that is missing from S (0 when none)
    worst_missing: dict[int, int] = {}

    def bad_max(k: int) -> int:
        if k not in worst_missing:
            mults = np.arange(k, B + 1, k)
            absent = mults[~member[mults]]
            worst_missing[k] = int(absent[-1]) if absent.size else 0
        return worst_missing[k]

    # Valid N for the tail starting at elems[i] range over [elems[i-1], elems[i
    # ] - 1]; the least admissible one must clear the worst missing multiple.
    prev = 0
    for i in range(len(elems)):
        e = int(elems[i])
        k = int(suffix_gcd[i])
        candidate = max(prev, bad_max(k))
        if candidate <= e - 1:
            window_count = B // k - candidate // k
            if window_count >= min_window:
                cert = LinearityCertificate(k=k, N=candidate, horizon=B, window_count=window_count)
                return LinearityResult(STATUS_CERTIFICATE, cert)
        prev = e
    return LinearityResult(STATUS_UNKNOWN)


def verify_certificate(S: IntSet, cert: LinearityCertificate) -> bool:
    """Check the biconditional n in S <=> k | n for every n in (N, cert.horizon]."""
    if cert.horizon > S.horizon:
        raise ParameterError("certificate horizon exceeds the set horizon")
    if cert.k < 1 or cert.N < 0:
        raise ParameterError("certificate must have k >= 1 and N >= 0")
    member = S.member_mask()[: cert.horizon + 1]
    n = np.arange(cert.N + 1, cert.horizon + 1)
    return bool(np.array_equal(member[n], (n % cert.k) == 0))
