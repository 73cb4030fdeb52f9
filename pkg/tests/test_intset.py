"""Core set algebra: profiles, sums, multisums, classification."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msum import (
    IntSet,
    ParameterError,
    ResourceLimitError,
    classify,
    multisums,
    strict_multisums,
    sum_profile,
    sums,
)
from oracles import (
    multisums_quadruple,
    pair_counts_brute,
    strict_multisums_quadruple,
    strict_pair_counts_brute,
)

small_sets = st.sets(st.integers(1, 40), min_size=1, max_size=12)


class TestIntSet:
    def test_normalizes_and_defaults_horizon(self):
        s = IntSet([6, 1, 3, 5])
        assert s.elements == (1, 3, 5, 6)
        assert s.horizon == 6

    def test_rejects_empty(self):
        with pytest.raises(ParameterError):
            IntSet([])

    def test_rejects_duplicates(self):
        with pytest.raises(ParameterError):
            IntSet([1, 2, 2])

    def test_rejects_nonpositive(self):
        with pytest.raises(ParameterError):
            IntSet([0, 1])

    def test_rejects_element_above_horizon(self):
        with pytest.raises(ParameterError):
            IntSet([1, 9], horizon=5)

    def test_horizon_cap(self, monkeypatch):
        monkeypatch.setenv("MSUM_BMAX", "100")
        with pytest.raises(ResourceLimitError):
            IntSet([1], horizon=101)
        assert IntSet([1], horizon=100).horizon == 100

    def test_value_semantics(self):
        assert IntSet([1, 2], 5) == IntSet((2, 1), 5)
        assert IntSet([1, 2], 5) != IntSet([1, 2], 6)
        assert hash(IntSet([1, 2], 5)) == hash(IntSet([1, 2], 5))

    def test_membership_and_iteration(self):
        s = IntSet([2, 4, 8])
        assert 4 in s and 3 not in s
        assert list(s) == [2, 4, 8]
        assert len(s) == 3

    def test_accepts_numpy_array(self):
        s = IntSet(np.array([3, 1, 2]), 10)
        assert s.elements == (1, 2, 3)


class TestSumProfile:
    def test_paper_example_1356(self):
        p = sum_profile(IntSet([1, 3, 5, 6], 12))
        assert p.r(6) == 2  # {1,5} and {3,3}
        assert p.r_strict(6) == 1

    def test_singleton(self):
        p = sum_profile(IntSet([7], 20))
        assert p.r(14) == 1
        assert p.r_strict(14) == 0
        assert all(p.r(m) == 0 for m in range(0, 41) if m != 14)

    def test_137_all_counts_at_most_one(self):
        # exhaustive pair scan over the six unordered pairs agrees
        p = sum_profile(IntSet([1, 3, 7], 14))
        brute = pair_counts_brute([1, 3, 7])
        assert all(p.r(m) <= 1 for m in range(0, 29))
        assert all(p.r(m) == brute.get(m, 0) for m in range(0, 29))

    def test_domain_max(self):
        assert sum_profile(IntSet([1, 2], 10)).domain_max == 20

    def test_unisums(self):
        p = sum_profile(IntSet([1, 3, 5, 6], 12))
        assert 6 not in p.unisums()
        assert 2 in p.unisums()  # 1+1 only

    @given(small_sets)
    @settings(max_examples=120)
    def test_counts_match_brute_force(self, elems):
        p = sum_profile(IntSet(sorted(elems)))
        r = pair_counts_brute(elems)
        rs = strict_pair_counts_brute(elems)
        for m in range(0, 2 * max(elems) + 1):
            assert p.r(m) == r.get(m, 0)
            assert p.r_strict(m) == rs.get(m, 0)

    @given(small_sets)
    @settings(max_examples=120)
    def test_profile_consistency(self, elems):
        # r'(m) = r(m) - 1 exactly when m is even and m/2 is a member
        s = IntSet(sorted(elems))
        p = sum_profile(s)
        for m in range(2, 2 * max(elems) + 1):
            expected_drop = 1 if m % 2 == 0 and m // 2 in elems else 0
            assert p.r(m) - p.r_strict(m) == expected_drop

    @given(small_sets)
    @settings(max_examples=80)
    def test_nesting_of_double_representations(self, elems):
        # any two distinct pairs with a common sum nest as x < y <= w < z
        es = sorted(elems)
        by_sum = {}
        for i, p in enumerate(es):
            for q in es[i:]:
                by_sum.setdefault(p + q, []).append((p, q))
        for pairs in by_sum.values():
            for i in range(len(pairs)):
                for j in range(i + 1, len(pairs)):
                    (x, z), (y, w) = sorted([pairs[i], pairs[j]])
                    assert x < y <= w < z


class TestSumsAndMultisums:
    def test_sums_13(self):
        assert sums(IntSet([1, 3], 6)) == {2, 4, 6}

    def test_sums_137(self):
        assert sums(IntSet([1, 3, 7], 14)) == {2, 4, 6, 8, 10, 14}

    def test_sums_singleton(self):
        assert sums(IntSet([9], 18)) == {18}

    def test_multisums_examples(self):
        assert multisums(IntSet([1, 3, 5, 6], 12)) == {6}
        assert multisums(IntSet([1, 3, 7], 14)) == set()
        assert multisums(IntSet([1, 2, 3, 4], 8)) == {4, 5, 6}

    def test_strict_multisums_examples(self):
        assert strict_multisums(IntSet([1, 3, 5, 6], 12)) == set()
        assert strict_multisums(IntSet([1, 2, 3, 4], 8)) == {5}
        assert strict_multisums(IntSet([7], 20)) == set()

    @given(small_sets)
    @settings(max_examples=60)
    def test_multisums_match_quadruple_definition(self, elems):
        s = IntSet(sorted(elems))
        assert multisums(s) == multisums_quadruple(elems)
        assert strict_multisums(s) == strict_multisums_quadruple(elems)


class TestClassify:
    def test_1356_non_vacuous(self):
        c = classify(IntSet([1, 3, 5, 6], 12))
        assert c.is_multisum_closed and not c.is_vacuously_multisum
        assert c.summary() == "multisum set (non-vacuous)"

    def test_137_vacuous_and_free(self):
        c = classify(IntSet([1, 3, 7], 14))
        assert c.is_multisum_closed and c.is_vacuously_multisum and c.is_multisum_free
        assert c.summary() == "multisum set (vacuous)"

    def test_1234_not_closed_not_free(self):
        # 4 is a member and a multisum (fine for free? no: free forbids it),
        # 5 is a multisum but not a member (breaks closure)
        c = classify(IntSet([1, 2, 3, 4], 8))
        assert not c.is_multisum_closed
        assert not c.is_multisum_free

    def test_sum_flags(self):
        c = classify(IntSet([1, 3], 6))
        assert c.is_sum_free  # sums {2,4,6} miss the set
        assert not c.is_sum_closed

    def test_complete_from_evens(self):
        # evens: 2, 4, 6 are not multisums, everything even from 8 on is
        c = classify(IntSet(range(2, 201, 2), 200))
        assert c.complete_from == 6

    def test_complete_from_finite_set(self):
        assert classify(IntSet([1, 3, 7], 14)).complete_from == 7

    @given(small_sets, st.integers(0, 20))
    @settings(max_examples=80)
    def test_vacuous_implies_closed_and_free(self, elems, extra):
        s = IntSet(sorted(elems), max(elems) + extra)
        c = classify(s)
        if c.is_vacuously_multisum:
            assert c.is_multisum_closed and c.is_multisum_free

    @given(small_sets)
    @settings(max_examples=80)
    def test_flags_match_quadruple_oracle(self, elems):
        B = max(elems)
        s = IntSet(sorted(elems), B)
        c = classify(s)
        msums = multisums_quadruple(elems)
        assert c.is_multisum_free == (not (msums & elems))
        assert c.is_multisum_closed == all(m in elems for m in msums if m <= B)
