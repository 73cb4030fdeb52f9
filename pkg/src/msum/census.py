"""Counts and extremal examples of set families over {1..B}.

Four families, all judged at horizon B exactly as `classify` does:

  multisum_set   every multisum <= B is a member
  multisum_free  no multisum is a member
  sum_free       no sum is a member
  sum_closed     every sum <= B is a member

Two enumeration modes.  `exhaustive` walks every nonempty subset and
evaluates the family predicate from a literal pair-count table; it is the
oracle, capped at B <= 24.  `dfs_pruned` walks the subset tree in ascending
element order, keeping incremental sum/multisum masks: the free families
are hereditary, so a violating branch is cut as soon as the added element
is already a (multi)sum; the closed families instead force the inclusion of
any value that has become a (multi)sum, which makes every leaf a family
member.  Capped at B <= 64.  Output is deterministic: counts are exact and
witnesses are the lexicographically first maximum-size members.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

from .errors import ParameterError, ResourceLimitError

__all__ = ["FAMILIES", "CensusRecord", "enumerate_family", "density_extremes"]

FAMILIES = ("multisum_set", "multisum_free", "sum_free", "sum_closed")
EXHAUSTIVE_MAX_B = 24
DFS_MAX_B = 64

# family -> (closed?, pair-count threshold)
_FAMILY_RULE = {
    "multisum_set": (True, 2),
    "multisum_free": (False, 2),
    "sum_free": (False, 1),
    "sum_closed": (True, 1),
}


@dataclass(frozen=True)
class CensusRecord:
    family: str
    B: int
    count: int
    max_size: int
    witnesses: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "B": self.B,
            "count": self.count,
            "max_size": self.max_size,
            "witnesses": [list(w) for w in self.witnesses],
        }

    def csv_row(self) -> str:
        return f"{self.family},{self.B},{self.count},{self.max_size}"


CSV_HEADER = "family,B,count,max_size"


class _Extremes:
    """Lexicographically-first `limit` maximum-size sets seen so far."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.size = 0
        self.sets: list[tuple[int, ...]] = []

    def offer(self, elems: tuple[int, ...]) -> None:
        n = len(elems)
        if n < self.size:
            return
        if n > self.size:
            self.size = n
            self.sets = [elems] if self.limit is None or self.limit > 0 else []
            return
        if self.limit is not None:
            if self.limit == 0:
                return
            if len(self.sets) >= self.limit and elems >= self.sets[-1]:
                return
        insort(self.sets, elems)
        if self.limit is not None and len(self.sets) > self.limit:
            self.sets.pop()


def _check_family(family: str) -> tuple[bool, int]:
    if family not in _FAMILY_RULE:
        raise ParameterError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return _FAMILY_RULE[family]


def _exhaustive(family: str, B: int, extremes: _Extremes) -> int:
    closed, need = _check_family(family)
    count = 0
    for mask in range(1, 1 << B):
        elems = []
        m = mask
        while m:
            low = m & -m
            elems.append(low.bit_length())  # bit v-1 carries value v
            m ^= low
        counts = bytearray(2 * B + 1)
        L = len(elems)
        for i in range(L):
            ei = elems[i]
            for j in range(i, L):
                counts[ei + elems[j]] += 1
        if closed:
            ok = True
            for v in range(2, B + 1):
                if counts[v] >= need and not (mask >> (v - 1)) & 1:
                    ok = False
                    break
        else:
            ok = all(counts[v] < need for v in elems)
        if ok:
            count += 1
            extremes.offer(tuple(elems))
    return count


def _dfs_free(B: int, need: int, extremes: _Extremes) -> int:
    """Hereditary families: every node of the pruned subset tree is a member."""
    count = 0
    path: list[int] = []

    def rec(start: int, mask: int, s1: int, s2: int) -> None:
        nonlocal count
        blocker = s2 if need == 2 else s1
        for v in range(start, B + 1):
            if (blocker >> v) & 1:
                continue
            new_pairs = (mask << v) | (1 << (2 * v))
            path.append(v)
            count += 1
            extremes.offer(tuple(path))
            rec(v + 1, mask | (1 << v), s1 | new_pairs, s2 | (s1 & new_pairs))
            path.pop()

    rec(1, 0, 0, 0)
    return count


def _dfs_closed(B: int, need: int, extremes: _Extremes) -> int:
    """Closed families: include every value forced by the running masks."""
    count = 0
    path: list[int] = []

    def rec(v: int, mask: int, s1: int, s2: int) -> None:
        nonlocal count
        if v > B:
            if mask:
                count += 1
                extremes.offer(tuple(path))
            return
        new_pairs = (mask << v) | (1 << (2 * v))
        path.append(v)
        rec(v + 1, mask | (1 << v), s1 | new_pairs, s2 | (s1 & new_pairs))
        path.pop()
        forced = ((s2 if need == 2 else s1) >> v) & 1
        if not forced:
            rec(v + 1, mask, s1, s2)

    rec(1, 0, 0, 0)
    return count


def _run(family: str, B: int, mode: str, extremes: _Extremes) -> int:
    closed, need = _check_family(family)
    if B < 1:
        raise ParameterError("bound must be >= 1")
    if mode == "exhaustive":
        if B > EXHAUSTIVE_MAX_B:
            raise ResourceLimitError(f"exhaustive mode is capped at B <= {EXHAUSTIVE_MAX_B}")
        return _exhaustive(family, B, extremes)
    if mode == "dfs_pruned":
        if B > DFS_MAX_B:
            raise ResourceLimitError(f"dfs_pruned mode is capped at B <= {DFS_MAX_B}")
        if closed:
            return _dfs_closed(B, need, extremes)
        return _dfs_free(B, need, extremes)
    raise ParameterError(f"unknown mode {mode!r}; expected exhaustive or dfs_pruned")


def enumerate_family(
    family: str, B: int, mode: str = "dfs_pruned", witness_limit: int = 10
) -> CensusRecord:
    """Count the nonempty members of a family over {1..B}.

    Witnesses are the lexicographically first `witness_limit` maximum-size
    members.  Counts from the two modes agree wherever both run.
    """
    extremes = _Extremes(witness_limit)
    count = _run(family, B, mode, extremes)
    return CensusRecord(
        family=family,
        B=B,
        count=count,
        max_size=extremes.size,
        witnesses=tuple(extremes.sets),
    )


def density_extremes(family: str, B: int, mode: str = "dfs_pruned") -> list[tuple[int, ...]]:
    """All maximum-cardinality members of the family, in lexicographic order."""
    extremes = _Extremes(None)
    _run(family, B, mode, extremes)
    return list(extremes.sets)
