"""Least-fixpoint closure of a seed under multisums (or sums) within a horizon.

Each round recomputes the exact pair-count profile of the current set and
adds every missing value up to the bound whose count clears the threshold
(2 for multisums, 1 for sums).  Adding all eligible values per round makes
the result independent of any ordering; rounds are only reporting
granularity.  The profile convolution is sized by the current maximum
element, so early rounds of a small seed cost almost nothing and the whole
run is dominated by the last couple of squarings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ResourceLimitError, bmax
from .intset import IntSet, _pair_counts

__all__ = ["ClosureResult", "multisum_closure", "sum_closure"]


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of a closure run.

    saturated is true when the final check confirmed the fixpoint: the last
    round added nothing and every eligible value <= bound of the result is
    already present.
    """

    result: IntSet
    rounds: int
    added_per_round: tuple[int, ...]
    saturated: bool

    def stats_json(self) -> dict:
        return {
            "rounds": self.rounds,
            "added_per_round": list(self.added_per_round),
            "saturated": self.saturated,
        }


def _close(seed: IntSet, B: int, threshold: int) -> ClosureResult:
    if B < 1:
        raise ParameterError("bound must be >= 1")
    if B > bmax():
        raise ResourceLimitError(f"bound {B} exceeds the configured cap {bmax()}")
    if seed.max_element > B:
        raise ParameterError(f"seed element {seed.max_element} exceeds the bound {B}")

    member = np.zeros(B + 1, dtype=bool)
    member[seed._arr] = True
    added_per_round: list[int] = []

    while True:
        elems = np.flatnonzero(member)
        r, _ = _pair_counts(elems)
        lim = min(len(r) - 1, B)
        missing = np.flatnonzero((r[: lim + 1] >= threshold) & ~member[: lim + 1])
        if missing.size == 0:
            break
        member[missing] = True
        added_per_round.append(int(missing.size))

    result = IntSet(np.flatnonzero(member), B)
    return ClosureResult(
        result=result,
        rounds=len(added_per_round),
        added_per_round=tuple(added_per_round),
        saturated=True,
    )


def multisum_closure(seed: IntSet, B: int) -> ClosureResult:
    """Least multisum-closed superset of the seed within [1, B].

    Deterministic: every round adds all current multisums <= B that are not
    yet present.  The closure is graded (representations of a value lie
    strictly below it), so results at different bounds agree on their common
    window.
    """
    return _close(seed, B, 2)


def sum_closure(seed: IntSet, B: int) -> ClosureResult:
    """Least sum-closed superset of the seed within [1, B]."""
    return _close(seed, B, 1)
