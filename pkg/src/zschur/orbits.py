"""Orbit matrices and their combinatorics.

An orbit matrix is a tuple of row tuples of non-negative ints.  Indices in
the public API (generator index ``i``, corner positions ``s, t``) are
1-based to match the usual conventions; everything internal is 0-based.
"""

import json
from functools import lru_cache
from itertools import product as _cartesian

from .combinatorics import (
    blocks, boundary_mask, enumerate_compositions, enumerate_decompositions,
    _check_decomposition,
)


def as_matrix(rows):
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("orbit matrix must be square and non-empty")
    if any(x < 0 for row in m for x in row):
        raise ValueError("orbit matrix entries must be non-negative")
    return m


def ro(A):
    return tuple(sum(row) for row in A)


def co(A):
    return tuple(sum(col) for col in zip(*A))


def total(A):
    return sum(map(sum, A))


def transpose(A):
    return tuple(zip(*A))


def diag(lam):
    n = len(lam)
    return tuple(tuple(lam[i] if i == j else 0 for j in range(n)) for i in range(n))


def is_diagonal(A):
    return all(x == 0 for i, row in enumerate(A) for j, x in enumerate(row) if i != j)


# -- text formats ------------------------------------------------------------

def format_matrix(A):
    return ";".join(",".join(str(x) for x in row) for row in A)


def parse_matrix(text):
    """Parse ``0,1;1,0`` or a JSON array of rows."""
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ValueError("bad JSON matrix at char %d: %s" % (exc.pos, exc.msg))
        return as_matrix(data)
    rows = []
    for ri, rtext in enumerate(s.split(";")):
        row = []
        for ci, tok in enumerate(rtext.split(",")):
            tok = tok.strip()
            if not tok.isdigit():
                raise ValueError("bad matrix entry %r at row %d, column %d"
                                 % (tok, ri + 1, ci + 1))
            row.append(int(tok))
        rows.append(row)
    return as_matrix(rows)


# -- enumeration -------------------------------------------------------------

def enumerate_orbits(n, r):
    """All n x n orbit matrices with entry sum r, lexicographic by rows."""
    out = []
    for flat in enumerate_compositions(n * n, r):
        out.append(tuple(flat[i * n:(i + 1) * n] for i in range(n)))
    return out


@lru_cache(maxsize=None)
def orbits_with(row_sums=None, col_sums=None):
    """Orbit matrices with prescribed row and/or column sums (lexicographic).

    At least one of the two margins is required.
    """
    if col_sums is None:
        if row_sums is None:
            raise ValueError("need row or column sums")
        return tuple(sorted(transpose(A) for A in orbits_with(None, row_sums)))
    n = len(col_sums)
    if row_sums is not None and (len(row_sums) != n or sum(row_sums) != sum(col_sums)):
        return ()
    if row_sums is None:
        cols = [enumerate_compositions(n, c) for c in col_sums]
        mats = (transpose(choice) for choice in _cartesian(*cols))
        return tuple(sorted(mats))
    return tuple(_fixed_margins(tuple(row_sums), tuple(col_sums)))


def _fixed_margins(rs, cs):
    n = len(rs)
    out = []

    def rows_for(target, remaining):
        # compositions of target bounded by the remaining column capacity
        def rec(j, left):
            if j == n - 1:
                if left <= remaining[j]:
                    yield (left,)
                return
            for x in range(min(left, remaining[j]) + 1):
                for rest in rec(j + 1, left - x):
                    yield (x,) + rest
        return rec(0, target)

    def build(i, remaining, acc):
        if i == n - 1:
            out.append(tuple(acc) + (tuple(remaining),))
            return
        for row in rows_for(rs[i], remaining):
            build(i + 1, tuple(a - b for a, b in zip(remaining, row)), acc + [row])

    if sum(rs) != sum(cs):
        return []
    if n == 1:
        return [((rs[0],),)]
    build(0, tuple(cs), [])
    # the last row must match its row sum, which is automatic from totals
    out.sort()
    return out


# -- generators --------------------------------------------------------------

def generator_orbit(kind, i, lam):
    """e_{i,lam}, f_{i,lam} or k_lam as an orbit matrix (column vector lam)."""
    lam = tuple(lam)
    n = len(lam)
    if kind == "k":
        return diag(lam)
    if kind not in ("e", "f"):
        raise ValueError("generator kind must be e, f or k, got %r" % (kind,))
    if not 1 <= i <= n - 1:
        raise ValueError("generator index %d out of range 1..%d" % (i, n - 1))
    rows = [list(r) for r in diag(lam)]
    if kind == "e":
        col = i  # 0-based column i+1
        if lam[col] < 1:
            raise ValueError("e_%d needs column %d of lambda to be positive" % (i, i + 1))
        rows[i - 1][col] += 1
        rows[col][col] -= 1
    else:
        col = i - 1
        if lam[col] < 1:
            raise ValueError("f_%d needs column %d of lambda to be positive" % (i, i))
        rows[i][col] += 1
        rows[col][col] -= 1
    return tuple(map(tuple, rows))


# -- open and closed orbits --------------------------------------------------

def extreme_orbit(kind, lam, mu):
    """Open (generic) or closed orbit with row sums lam and column sums mu."""
    if len(lam) != len(mu) or sum(lam) != sum(mu):
        raise ValueError("row and column sums must have equal length and total")
    n = len(lam)
    row_labels = [i for i in range(n) for _ in range(lam[i])]
    col_labels = [j for j in range(n) for _ in range(mu[j])]
    if kind == "open":
        row_labels.reverse()
    elif kind != "closed":
        raise ValueError("kind must be open or closed")
    rows = [[0] * n for _ in range(n)]
    for a, b in zip(row_labels, col_labels):
        rows[a][b] += 1
    return tuple(map(tuple, rows))


def open_orbit(lam, mu):
    return extreme_orbit("open", lam, mu)


# -- genericity --------------------------------------------------------------

@lru_cache(maxsize=1 << 20)
def crossing_masks(A):
    """Boundary masks of column pairs s < t that carry a crossing.

    Columns s < t cross when some i < j has a[i][s] > 0 and a[j][t] > 0; the
    mask has the bits of the boundaries separating s from t.
    """
    n = len(A)
    top = [None] * n
    bottom = [None] * n
    for j in range(n):
        rows = [i for i in range(n) if A[i][j]]
        if rows:
            top[j], bottom[j] = rows[0], rows[-1]
    out = set()
    for s in range(n):
        if top[s] is None:
            continue
        for t in range(s + 1, n):
            if bottom[t] is not None and top[s] < bottom[t]:
                out.add(((1 << t) - 1) ^ ((1 << s) - 1))
    return frozenset(out)


def _generic_mask(A, mask):
    return all(c & mask for c in crossing_masks(A))


def block_generic(A, axis, m):
    """Each block of columns (or rows) along ``m`` is a generic submatrix."""
    m = _check_decomposition(m, len(A))
    if axis in ("columns", "cols", "column"):
        return _generic_mask(A, boundary_mask(m))
    if axis in ("rows", "row"):
        return _generic_mask(transpose(A), boundary_mask(m))
    raise ValueError("axis must be rows or columns")


def is_generic(A):
    return not crossing_masks(A)


def is_closed(A):
    # anti-diagonal check: mirror the columns and test genericity
    return is_generic(tuple(row[::-1] for row in A))


# -- degeneration order ------------------------------------------------------

def corner_sums(A, s, t):
    """(NE, SW) corner sums at 1-based position (s, t)."""
    n = len(A)
    ne = sum(A[x][y] for x in range(s) for y in range(t - 1, n))
    sw = sum(A[x][y] for x in range(s - 1, n) for y in range(t))
    return ne, sw


@lru_cache(maxsize=1 << 18)
def _corner_table(A):
    n = len(A)
    ne = [[0] * n for _ in range(n)]
    sw = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(n):
            ne[s][t] = sum(A[x][y] for x in range(s + 1) for y in range(t, n))
            sw[s][t] = sum(A[x][y] for x in range(s, n) for y in range(t + 1))
    return tuple(map(tuple, ne)), tuple(map(tuple, sw))


def degenerates_to(A, B):
    """True iff e_A <= e_B, i.e. B lies in the closure of A's orbit."""
    if len(A) != len(B) or ro(A) != ro(B) or co(A) != co(B):
        return False
    ane, asw = _corner_table(A)
    bne, bsw = _corner_table(B)
    n = len(A)
    return all(bne[s][t] <= ane[s][t] and bsw[s][t] <= asw[s][t]
               for s in range(n) for t in range(n))


# -- idempotents -------------------------------------------------------------

@lru_cache(maxsize=None)
def idempotent_orbit(lam, m):
    """Block diagonal matrix whose blocks are open orbits of lam's blocks."""
    lam = tuple(lam)
    m = _check_decomposition(m, len(lam))
    n = len(lam)
    rows = [[0] * n for _ in range(n)]
    for a, b in blocks(m):
        part = lam[a:b]
        block = open_orbit(part, part)
        for x in range(b - a):
            for y in range(b - a):
                rows[a + x][a + y] = block[x][y]
    return tuple(map(tuple, rows))


def classify_idempotent(A):
    """(lam, m) with A = o_{lam,m} and m the finest such label, else None.

    The finest label cuts at every position where A is block diagonal, which
    makes it unique.
    """
    lam = ro(A)
    if lam != co(A):
        return None
    n = len(A)
    cuts = set()
    for b in range(1, n):
        if all(A[x][y] == 0 for x in range(b) for y in range(b, n)) and \
           all(A[x][y] == 0 for x in range(b, n) for y in range(b)):
            cuts.add(b)
    edges = [0] + sorted(cuts) + [n]
    m = tuple(edges[k + 1] - edges[k] for k in range(len(edges) - 1))
    return (lam, m) if idempotent_orbit(lam, m) == A else None


def distinct_idempotents(lam):
    """Map each distinct matrix o_{lam,m} to the labels m producing it."""
    out = {}
    for m in enumerate_decompositions(len(lam)):
        out.setdefault(idempotent_orbit(tuple(lam), m), []).append(m)
    return out


def is_minimal_label(lam, m):
    """Every proper refinement of m changes o_{lam,m}."""
    from .combinatorics import boundaries, from_boundaries
    n = len(lam)
    base = idempotent_orbit(tuple(lam), m)
    bs = boundaries(m)
    for b in range(1, n):
        if b not in bs and idempotent_orbit(tuple(lam), from_boundaries(n, bs | {b})) == base:
            return False
    return True


def idempotent_hasse(lam):
    """Distinct idempotent orbits of lam and the covering pairs (lower, upper)."""
    verts = sorted(distinct_idempotents(lam))
    below = {(a, b) for a in verts for b in verts if a != b and degenerates_to(a, b)}
    edges = sorted((a, b) for (a, b) in below
                   if not any((a, c) in below and (c, b) in below for c in verts))
    return verts, edges


# -- factorization test ------------------------------------------------------

def factor_test(A, kind, i):
    """Whether e_A = X e_i (kind e) or X f_i (kind f) for some orbit X."""
    n = len(A)
    if not 1 <= i <= n - 1:
        raise ValueError("index %d out of range" % i)
    left = [x for x in range(n) if A[x][i - 1]]
    right = [x for x in range(n) if A[x][i]]
    if kind == "e":
        # the moved unit lands in column i+1 at the top row of column i
        return bool(right) and (not left or left[0] >= right[0])
    if kind == "f":
        return bool(left) and (not right or left[-1] >= right[-1])
    raise ValueError("kind must be e or f")
