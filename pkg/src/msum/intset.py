"""Value-semantic algebra of finite positive-integer sets with a membership horizon.

An ``IntSet`` is a finite set of integers together with a horizon ``B``:
membership is exactly known on ``[1, B]`` and unknowable beyond it.  The
pair-sum profile ``r(m)`` counts unordered pairs ``{s, t}`` with
``s <= t`` and ``s + t = m``; the strict count ``r'(m)`` requires
``s < t``.  A *sum* is any value with ``r(m) >= 1``, a *multisum* any
value with ``r(m) >= 2`` (two representations, at most one of which is a
doubled pair), and a *strict multisum* any value with ``r'(m) >= 2``.

Profiles are computed by an exact counting convolution: the membership
indicator is packed into 32-bit fields of one big integer and squared
(GMP does the heavy lifting), which yields every ordered pair count at
once.  All types are immutable after construction and every operation is
a pure function, so concurrent use needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import gmpy2
import numpy as np

from .errors import ParameterError, ResourceLimitError, bmax

__all__ = [
    "IntSet",
    "SumProfile",
    "Classification",
    "sum_profile",
    "sums",
    "multisums",
    "strict_multisums",
    "classify",
]

_FIELD_BYTES = 4  # ordered pair counts fit in uint32 for any horizon <= bmax()


class IntSet:
    """Immutable set of integers in ``[1, horizon]``, exact on that window.

    ``elements`` is normalized to a strictly increasing tuple; duplicate,
    non-positive, or over-horizon values are rejected.  The horizon defaults
    to the largest element.
    """

    __slots__ = ("elements", "horizon", "_arr", "_members")

    def __init__(self, elements: Iterable[int], horizon: int | None = None):
        if isinstance(elements, np.ndarray) and elements.dtype.kind in "iu":
            arr = elements.astype(np.int64, copy=True)
        else:
            try:
                arr = np.array([int(x) for x in elements], dtype=np.int64)
            except (TypeError, ValueError, OverflowError) as exc:
                raise ParameterError(f"set elements must be integers: {exc}") from exc
        arr = np.sort(arr.reshape(-1))
        if arr.size == 0:
            raise ParameterError("a set must be nonempty")
        if arr[0] < 1:
            raise ParameterError(f"set elements must be >= 1, got {int(arr[0])}")
        if arr.size > 1 and not (np.diff(arr) > 0).all():
            raise ParameterError("set elements must be distinct")
        if horizon is None:
            horizon = int(arr[-1])
        horizon = int(horizon)
        if horizon < 1:
            raise ParameterError("horizon must be >= 1")
        if horizon > bmax():
            raise ResourceLimitError(f"horizon {horizon} exceeds the configured cap {bmax()}")
        if int(arr[-1]) > horizon:
            raise ParameterError(f"element {int(arr[-1])} exceeds the horizon {horizon}")
        arr.setflags(write=False)
        object.__setattr__(self, "_arr", arr)
        object.__setattr__(self, "elements", tuple(arr.tolist()))
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "_members", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("IntSet is immutable")

    @property
    def max_element(self) -> int:
        return self.elements[-1]

    @property
    def min_element(self) -> int:
        return self.elements[0]

    def member_set(self) -> frozenset[int]:
        """Frozen membership set (built lazily, cached)."""
        cached = self._members
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_members", cached)
        return cached

    def member_mask(self) -> np.ndarray:
        """Fresh boolean membership array of length ``horizon + 1``."""
        mask = np.zeros(self.horizon + 1, dtype=bool)
        mask[self._arr] = True
        return mask

    def __contains__(self, value: int) -> bool:
        return value in self.member_set()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        return self.horizon == other.horizon and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.elements, self.horizon))

    def __repr__(self) -> str:
        if len(self.elements) <= 8:
            body = ", ".join(map(str, self.elements))
        else:
            head = ", ".join(map(str, self.elements[:4]))
            body = f"{head}, ... , {self.elements[-1]} ({len(self.elements)} elements)"
        return f"IntSet([{body}], horizon={self.horizon})"


def _ordered_pair_counts(arr: np.ndarray) -> np.ndarray:
    """Ordered pair-sum counts C[m] for m in [0, 2*max(arr)] via big-int squaring.

    C[m] = #{(s, t) in arr x arr : s + t = m}.  Exact: counts stay far below
    the 32-bit field width for any supported horizon.
    """
    top = int(arr[-1])
    enc = np.zeros(top + 1, dtype="<u4")
    enc[arr] = 1
    packed = gmpy2.mpz(int.from_bytes(enc.tobytes(), "little"))
    square = packed * packed
    raw = int(square).to_bytes(_FIELD_BYTES * (2 * top + 2), "little")
    return np.frombuffer(raw, dtype="<u4")[: 2 * top + 1]


def _pair_counts(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unordered counts (r, r') over [0, 2*max(arr)] for a sorted element array."""
    ordered = _ordered_pair_counts(arr)
    diag = np.zeros_like(ordered)
    diag[2 * arr] = 1
    r = (ordered + diag) >> 1
    r_strict = (ordered - diag) >> 1
    return r, r_strict


class SumProfile:
    """Exact pair-sum counts of a set: r(m) and r'(m) for m in [0, domain_max]."""

    __slots__ = ("domain_max", "_r", "_rs")

    def __init__(self, domain_max: int, r: np.ndarray, r_strict: np.ndarray):
        object.__setattr__(self, "domain_max", domain_max)
        r.setflags(write=False)
        r_strict.setflags(write=False)
        object.__setattr__(self, "_r", r)
        object.__setattr__(self, "_rs", r_strict)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("SumProfile is immutable")

    def r(self, m: int) -> int:
        """Number of unordered representations m = s + t with s <= t."""
        if 0 <= m < len(self._r):
            return int(self._r[m])
        return 0

    def r_strict(self, m: int) -> int:
        """Number of representations m = s + t with s < t."""
        if 0 <= m < len(self._rs):
            return int(self._rs[m])
        return 0

    def _support(self, counts: np.ndarray, threshold: int) -> set[int]:
        return set(np.flatnonzero(counts >= threshold).tolist())

    def sums(self) -> set[int]:
        return self._support(self._r, 1)

    def multisums(self) -> set[int]:
        return self._support(self._r, 2)

    def strict_multisums(self) -> set[int]:
        return self._support(self._rs, 2)

    def unisums(self) -> set[int]:
        """Values with exactly one representation."""
        return set(np.flatnonzero(self._r == 1).tolist())


def sum_profile(S: IntSet) -> SumProfile:
    """Exact profile of S; r and r' vanish outside [2, 2*max(S)]."""
    r, rs = _pair_counts(S._arr)
    return SumProfile(2 * S.horizon, r, rs)


def sums(S: IntSet) -> set[int]:
    """All values s + t with s, t in S (s = t allowed)."""
    return sum_profile(S).sums()


def multisums(S: IntSet) -> set[int]:
    """Values with two unordered representations over S.

    Equivalent to the quadruple form (s + t = u + v with s, t, u, v in S all
    distinct except possibly u = v) because two distinct unordered pairs with
    a common sum are disjoint and at most one of them can be doubled.  The
    equivalence is exercised by the test suite rather than assumed here.
    """
    return sum_profile(S).multisums()


def strict_multisums(S: IntSet) -> set[int]:
    """Values with two representations whose four members are pairwise distinct."""
    return sum_profile(S).strict_multisums()


@dataclass(frozen=True)
class Classification:
    """Horizon-relative classification flags of a set.

    All judgments are made within [1, horizon]: a sum or multisum beyond the
    horizon is unknowable there and is ignored.  This keeps every flag exact
    on the window, since representations of a value are strictly below it.

    ``complete_from`` is the least threshold T such that every element > T is
    a multisum; T = max(S) always qualifies vacuously, so the field is always
    populated.
    """

    is_sum_closed: bool
    is_multisum_closed: bool
    is_vacuously_multisum: bool
    is_sum_free: bool
    is_multisum_free: bool
    complete_from: int

    def summary(self) -> str:
        if self.is_multisum_closed:
            kind = "vacuous" if self.is_vacuously_multisum else "non-vacuous"
            return f"multisum set ({kind})"
        return "not a multisum set"

    def to_json(self) -> dict:
        return {
            "is_sum_closed": self.is_sum_closed,
            "is_multisum_closed": self.is_multisum_closed,
            "is_vacuously_multisum": self.is_vacuously_multisum,
            "is_sum_free": self.is_sum_free,
            "is_multisum_free": self.is_multisum_free,
            "complete_from": self.complete_from,
            "summary": self.summary(),
        }


def classify(S: IntSet) -> Classification:
    """Classify S relative to its horizon.

    vacuously multisum means no multisum exists within the window, in which
    case the set is trivially both multisum-closed and multisum-free.
    """
    B = S.horizon
    arr = S._arr
    r, _ = _pair_counts(arr)
    lim = min(len(r) - 1, B)  # elements never exceed lim: max(S) <= min(2*max(S), B)
    member = np.zeros(lim + 1, dtype=bool)
    member[arr] = True
    window_r = r[: lim + 1]

    has_sum = window_r >= 1
    has_multi = window_r >= 2
    sum_closed = not bool(np.any(has_sum & ~member))
    multi_closed = not bool(np.any(has_multi & ~member))
    vacuous = not bool(np.any(has_multi))
    sum_free = not bool(np.any(has_sum & member))
    multi_free = not bool(np.any(has_multi & member))

    non_multisum_members = arr[r[arr] < 2]
    complete_from = int(non_multisum_members.max()) if non_multisum_members.size else 0

    return Classification(
        is_sum_closed=sum_closed,
        is_multisum_closed=multi_closed,
        is_vacuously_multisum=vacuous,
        is_sum_free=sum_free,
        is_multisum_free=multi_free,
        complete_from=complete_from,
    )
