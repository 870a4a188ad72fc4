"""Sparse exact linear algebra over the rationals.

Vectors are dicts mapping a hashable, orderable key to a Fraction.  The
systems met here have a few hundred unknowns and very sparse rows, where
dict-based elimination beats dense rational matrices by a wide margin.
"""

from fractions import Fraction

_RHS = ("~rhs",)


class Inconsistent(ArithmeticError):
    pass


def _axpy(target, scale, src):
    for key, val in src.items():
        new = target.get(key, 0) - scale * val
        if new:
            target[key] = new
        else:
            target.pop(key, None)


class Echelon:
    """Incrementally maintained reduced basis of a span of sparse vectors."""

    def __init__(self, order=None):
        self.rows = {}  # pivot key -> row with coefficient 1 at the pivot
        self._order = order

    def _pivot(self, vec):
        keys = [k for k in vec if k != _RHS]
        if not keys:
            return None
        return min(keys, key=self._order) if self._order else min(keys)

    def reduce(self, vec):
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        changed = True
        while changed:
            changed = False
            for key in [k for k in vec if k in self.rows]:
                c = vec.get(key)
                if c:
                    _axpy(vec, c, self.rows[key])
                    changed = True
        return vec

    def add(self, vec):
        """Insert a vector; return True if it enlarged the span."""
        vec = self.reduce(vec)
        piv = self._pivot(vec)
        if piv is None:
            if vec.get(_RHS):
                raise Inconsistent("system has no solution")
            return False
        c = vec[piv]
        vec = {k: v / c for k, v in vec.items()}
        for key, row in self.rows.items():
            a = row.get(piv)
            if a:
                _axpy(row, a, vec)
        self.rows[piv] = vec
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def __len__(self):
        return len(self.rows)


def rank(vectors):
    ech = Echelon()
    return sum(1 for v in vectors if ech.add(v))


def solve(equations):
    """Solve sparse equations given as (coeffs, rhs) pairs.

    Returns one solution as a dict (free unknowns set to zero, zeros
    omitted).  Raises Inconsistent if there is none.
    """
    ech = Echelon()
    for coeffs, rhs in equations:
        row = dict(coeffs)
        if rhs:
            row[_RHS] = Fraction(rhs)
        ech.add(row)
    sol = {}
    for piv, row in ech.rows.items():
        val = row.get(_RHS, 0)
        if val:
            sol[piv] = Fraction(val)
    return sol
