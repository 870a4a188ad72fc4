import itertools

import pytest
from hypothesis import given, strategies as st

from zschur.algebra import product
from zschur.combinatorics import enumerate_compositions, enumerate_decompositions, refinement_le
from zschur.orbits import (
    block_generic, classify_idempotent, co, corner_sums, degenerates_to, diag,
    enumerate_orbits, extreme_orbit, factor_test, format_matrix, generator_orbit,
    idempotent_hasse, idempotent_orbit, is_closed, is_generic, is_minimal_label,
    orbits_with, parse_matrix, ro,
)


def all_square(n, rmax):
    for r in range(rmax + 1):
        yield from (A for A in enumerate_orbits(n, r) if ro(A) == co(A))


def test_generator_orbits():
    assert generator_orbit("e", 1, (1, 2)) == ((1, 1), (0, 1))
    assert generator_orbit("f", 1, (1, 2)) == ((0, 0), (1, 2))
    assert generator_orbit("k", None, (2, 0, 3)) == diag((2, 0, 3))


def test_generator_orbit_needs_a_unit_to_move():
    with pytest.raises(ValueError):
        generator_orbit("e", 1, (1, 0))
    with pytest.raises(ValueError):
        generator_orbit("f", 1, (0, 2))


def test_extreme_orbits_small_cases():
    assert extreme_orbit("open", (1, 2, 1), (2, 1, 1)) == ((0, 0, 1), (1, 1, 0), (1, 0, 0))
    assert extreme_orbit("closed", (1, 2, 1), (2, 1, 1)) == ((1, 0, 0), (1, 1, 0), (0, 0, 1))
    assert extreme_orbit("open", (1, 2, 3), (1, 2, 3)) == ((0, 0, 1), (0, 0, 2), (1, 2, 0))


@pytest.mark.parametrize("r", range(5))
def test_extreme_orbits_are_unique_per_margin(r):
    n = 3
    comps = enumerate_compositions(n, r)
    for lam in comps:
        for mu in comps:
            slice_ = orbits_with(lam, mu)
            opens = [A for A in slice_ if block_generic(A, "columns", (n,))]
            closeds = [A for A in slice_ if is_closed(A)]
            assert opens == [extreme_orbit("open", lam, mu)]
            assert closeds == [extreme_orbit("closed", lam, mu)]


def test_block_generic_mixed_blocks():
    A = ((0, 1, 0), (1, 1, 0), (0, 0, 3))
    assert block_generic(A, "columns", (2, 1))
    assert not block_generic(A, "columns", (3,))
    B = ((1, 0, 0), (1, 1, 0), (0, 0, 1))
    assert block_generic(B, "columns", (1, 1, 1))
    assert not block_generic(B, "columns", (2, 1))


def test_diagonal_matrix_genericity_depends_on_blocks():
    # a diagonal matrix with two nonzero entries inside one block is not generic
    assert not block_generic(diag((1, 1, 1)), "columns", (3,))
    assert block_generic(diag((1, 1, 1)), "columns", (1, 1, 1))
    assert block_generic(diag((0, 2, 0)), "columns", (3,))
    assert block_generic(diag((2, 0, 3)), "rows", (1, 2))


def test_closedness():
    assert is_closed(((1, 0, 0), (1, 1, 0), (0, 0, 1)))
    assert not is_closed(((0, 0, 1), (1, 1, 0), (1, 0, 0)))
    assert is_closed(diag((2, 1, 4)))


def test_corner_sums():
    A = ((0, 1, 0), (1, 1, 0), (0, 0, 3))
    assert corner_sums(A, 2, 2)[0] == 2
    assert corner_sums(A, 1, 2)[1] == 3
    # the whole matrix sits north-east of (n, 1) and south-west of (1, n)
    assert corner_sums(A, 3, 1)[0] == 6
    assert corner_sums(A, 1, 3)[1] == 6
    assert corner_sums(A, 3, 1)[1] == A[2][0]


def test_corner_sums_balance_on_square_margins():
    for A in all_square(4, 4):
        n = len(A)
        for s in range(1, n):
            assert corner_sums(A, s, s + 1)[0] == corner_sums(A, s + 1, s)[1]


def test_generic_with_equal_margins_is_symmetric():
    for A in all_square(3, 5):
        if is_generic(A):
            assert A == tuple(zip(*A))


def test_degeneration_between_idempotents():
    lam = (1, 2, 3)
    o = idempotent_orbit(lam, (3,))
    a, b = idempotent_orbit(lam, (2, 1)), idempotent_orbit(lam, (1, 2))
    assert degenerates_to(o, a) and degenerates_to(o, b)
    assert not degenerates_to(a, b) and not degenerates_to(b, a)
    assert degenerates_to(a, a)
    # mismatched margins are simply incomparable
    assert not degenerates_to(a, diag((3, 2, 1)))


@pytest.mark.parametrize("r", range(4))
def test_degeneration_is_partial_order_with_extremes(r):
    comps = enumerate_compositions(3, r)
    for lam, mu in itertools.product(comps, comps):
        slice_ = orbits_with(lam, mu)
        low = extreme_orbit("open", lam, mu)
        for A in slice_:
            assert degenerates_to(low, A)
            if lam == mu:
                assert degenerates_to(A, diag(lam))
        for A, B in itertools.product(slice_, slice_):
            if A != B and degenerates_to(A, B):
                assert not degenerates_to(B, A)
                for C in slice_:
                    if degenerates_to(B, C):
                        assert degenerates_to(A, C)


def test_idempotent_orbits():
    assert idempotent_orbit((1, 2, 3), (2, 1)) == ((0, 1, 0), (1, 1, 0), (0, 0, 3))
    assert idempotent_orbit((1, 2, 3), (1, 2)) == ((1, 0, 0), (0, 0, 2), (0, 2, 1))
    assert idempotent_orbit((3, 1, 4), (1, 1, 1)) == diag((3, 1, 4))


def test_classify_idempotent_reports_finest_label():
    assert classify_idempotent(diag((2, 0, 3))) == ((2, 0, 3), (1, 1, 1))
    assert classify_idempotent(((1, 0, 0), (0, 0, 2), (0, 2, 1))) == ((1, 2, 3), (1, 2))
    assert classify_idempotent(((1, 1), (0, 1))) is None


@pytest.mark.parametrize("r", range(5))
def test_idempotent_iff_labelled(r):
    for A in enumerate_orbits(3, r):
        if ro(A) != co(A):
            continue
        assert (classify_idempotent(A) is not None) == (product(A, A) == A)


def test_hasse_diagrams():
    verts, edges = idempotent_hasse((2, 0, 3, 2))
    assert len(verts) == 4 and len(edges) == 4
    bottom = idempotent_orbit((2, 0, 3, 2), (4,))
    top = diag((2, 0, 3, 2))
    assert sum(1 for a, _ in edges if a == bottom) == 2
    assert sum(1 for _, b in edges if b == top) == 2
    verts, edges = idempotent_hasse((2, 1, 3, 1))
    assert len(verts) == 8 and len(edges) == 12
    assert idempotent_hasse((0, 0, 4)) == ([diag((0, 0, 4))], [])


@pytest.mark.slow
def test_minimal_labels_order_matches_products():
    for n in range(1, 5):
        decs = enumerate_decompositions(n)
        for r in range(6):
            for lam in enumerate_compositions(n, r):
                minimal = [m for m in decs if is_minimal_label(lam, m)]
                for m, p in itertools.product(minimal, minimal):
                    om, op = idempotent_orbit(lam, m), idempotent_orbit(lam, p)
                    expected = refinement_le(p, m)
                    assert degenerates_to(op, om) == expected
                    assert (product(op, om) == op) == expected
                    assert (product(om, op) == op) == expected


def test_factor_test():
    assert factor_test(((0, 1), (1, 0)), "e", 1)
    assert not factor_test(diag((1, 2)), "e", 1)
    assert factor_test(((0, 0), (1, 2)), "e", 1)
    with pytest.raises(ValueError):
        factor_test(diag((1, 2)), "e", 2)


@pytest.mark.parametrize("r", range(1, 4))
def test_factor_test_matches_search(r):
    n = 3
    for A in enumerate_orbits(n, r):
        for kind, i in [("e", 1), ("e", 2), ("f", 1), ("f", 2)]:
            col = co(A)
            ok = col[i] >= 1 if kind == "e" else col[i - 1] >= 1
            # A = X g with co(g) = co(A)
            found = False
            if ok:
                g = generator_orbit(kind, i, col)
                found = any(product(X, g) == A for X in orbits_with(ro(A), ro(g)))
            assert factor_test(A, kind, i) == found, (A, kind, i)


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 5), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(square)
def test_matrix_text_round_trip(rows):
    A = tuple(map(tuple, rows))
    assert parse_matrix(format_matrix(A)) == A
    assert parse_matrix(str(rows).replace(" ", "")) == A


def test_matrix_parse_errors():
    for bad in ["1,2;3", "1,-1;0,1", "", "a,b;c,d"]:
        with pytest.raises(ValueError):
            parse_matrix(bad)
