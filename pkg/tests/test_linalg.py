from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zschur.linalg import Echelon, Inconsistent, rank, solve


def test_rank_of_dependent_rows():
    rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}]
    assert rank(rows) == 2
    assert rank([]) == 0


def test_solve_small_system():
    sol = solve([({"x": 1, "y": 1}, 3), ({"x": 1, "y": -1}, 1)])
    assert sol == {"x": 2, "y": 1}


def test_free_unknowns_default_to_zero():
    sol = solve([({"x": 1, "y": 1}, 5)])
    assert sol in ({"x": 5}, {"y": 5})


def test_inconsistent_system():
    with pytest.raises(Inconsistent):
        solve([({"x": 1}, 1), ({"x": 2}, 3)])


def test_echelon_membership():
    ech = Echelon()
    assert ech.add({1: 1, 2: 1})
    assert not ech.add({1: 2, 2: 2})
    assert ech.contains({1: Fraction(1, 3), 2: Fraction(1, 3)})
    assert not ech.contains({1: 1})
    assert len(ech) == 1


small = st.integers(-4, 4)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(small, min_size=3, max_size=3))
def test_solution_satisfies_consistent_systems(matrix, x):
    eqs = []
    for row in matrix:
        coeffs = {i: c for i, c in enumerate(row) if c}
        rhs = sum(c * v for c, v in zip(row, x))
        if coeffs:
            eqs.append((coeffs, rhs))
    sol = solve(eqs)
    for coeffs, rhs in eqs:
        assert sum(c * sol.get(i, 0) for i, c in coeffs.items()) == rhs
