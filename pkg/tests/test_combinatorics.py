from math import comb

import pytest
from hypothesis import given, strategies as st

from zschur.combinatorics import (
    canonical_rep, class_members, collapse_c, enumerate_classes,
    enumerate_compositions, enumerate_decompositions, format_composition,
    meet, parse_composition, parse_decomposition, reduced, refinement_le,
)


@pytest.mark.parametrize("n,r", [(1, 0), (1, 4), (2, 3), (3, 2), (3, 5), (4, 5)])
def test_composition_count_is_stars_and_bars(n, r):
    comps = enumerate_compositions(n, r)
    assert len(comps) == comb(n + r - 1, r)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == r and len(c) == n for c in comps)


def test_compositions_of_two_into_three_parts():
    assert enumerate_compositions(3, 2) == [
        (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)]
    assert len(enumerate_compositions(3, 5)) == 21


def test_refinement_order():
    assert refinement_le((3,), (2, 1))
    assert not refinement_le((2, 1), (1, 2))
    assert not refinement_le((1, 2), (2, 1))
    for m in enumerate_decompositions(4):
        assert refinement_le((4,), m)
        assert refinement_le(m, m)
        if m != (1, 1, 1, 1):
            assert not refinement_le((1, 1, 1, 1), m)


def test_meet_is_coarsest_common_coarsening():
    assert meet((2, 1), (1, 2)) == (3,)
    assert meet((1, 1, 2), (1, 3)) == (1, 3)
    decs = enumerate_decompositions(4)
    for a in decs:
        for b in decs:
            m = meet(a, b)
            assert refinement_le(m, a) and refinement_le(m, b)
            for c in decs:
                if refinement_le(c, a) and refinement_le(c, b):
                    assert refinement_le(c, m)


def test_decompositions_of_n():
    assert len(enumerate_decompositions(5)) == 16
    assert enumerate_decompositions(1) == [(1,)]


def test_collapse_merges_block_sums_and_drops_zeros():
    assert collapse_c((2, 0, 3, 2), (3, 1)) == (5, 2)
    assert collapse_c((0, 2, 0, 0, 1, 1), (1, 1, 2, 2)) == (2, 2)
    assert collapse_c((2, 2, 0, 0, 0, 0), (1,) * 6) == (2, 2)
    assert collapse_c((0, 0, 0), (3,)) == ()


@pytest.mark.parametrize("n,r,count", [(3, 5, 11), (4, 5, 15), (1, 3, 1), (3, 2, 2)])
def test_class_counts(n, r, count):
    assert len(enumerate_classes(n, r)) == count


def test_classes_partition_the_compositions():
    n, r = 4, 5
    seen = []
    for cls in enumerate_classes(n, r):
        members = class_members(cls, n)
        assert all(reduced(m) == cls for m in members)
        assert canonical_rep(cls, n) in members
        seen.extend(members)
    assert sorted(seen) == sorted(enumerate_compositions(n, r))


def test_canonical_representative_puts_zeros_last():
    assert canonical_rep((2, 3), 3) == (2, 3, 0)
    assert canonical_rep((1, 1, 3), 3) == (1, 1, 3)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_composition_text_round_trip(parts):
    lam = tuple(parts)
    assert parse_composition(format_composition(lam)) == lam


def test_bad_decomposition_text():
    with pytest.raises(ValueError):
        parse_decomposition("1,0,2")
    with pytest.raises(ValueError):
        parse_composition("1,x")
