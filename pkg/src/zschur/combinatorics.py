"""Compositions, decompositions and the classes indexing projective modules.

A composition of ``r`` into ``n`` parts is a plain tuple of non-negative
integers; a decomposition of ``n`` is a tuple of positive integers summing to
``n``.  Decompositions are compared through their boundary sets: the boundary
``b`` (``1 <= b <= n-1``) sits between positions ``b`` and ``b+1``.
"""

from itertools import combinations


def enumerate_compositions(n, r):
    """All compositions of ``r`` into ``n`` parts, in lexicographic order."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0, got n=%r r=%r" % (n, r))
    return list(_compositions(n, r))


def _compositions(n, r):
    if n == 1:
        yield (r,)
        return
    for first in range(r + 1):
        for rest in _compositions(n - 1, r - first):
            yield (first,) + rest


def length(lam):
    """Number of nonzero parts."""
    return sum(1 for x in lam if x)


def reduced(lam):
    """The class representative with zeros deleted."""
    return tuple(x for x in lam if x)


def canonical_rep(cls, n):
    """Class representative in Lambda(n, r) with the zeros moved to the end."""
    cls = tuple(cls)
    if len(cls) > n:
        raise ValueError("class %s has more than %d parts" % (format_composition(cls), n))
    return cls + (0,) * (n - len(cls))


def class_members(cls, n):
    """All compositions in Lambda(n, r) equivalent to ``cls`` (lexicographic)."""
    cls = tuple(cls)
    k = len(cls)
    if k > n:
        return []
    out = []
    for pos in combinations(range(n), k):
        lam = [0] * n
        for p, v in zip(pos, cls):
            lam[p] = v
        out.append(tuple(lam))
    out.sort()
    return out


# -- decompositions ---------------------------------------------------------

def enumerate_decompositions(n):
    """All 2^(n-1) decompositions of n, lexicographic."""
    if n < 1:
        raise ValueError("n must be positive")
    return sorted(from_boundaries(n, set(bs))
                  for k in range(n) for bs in combinations(range(1, n), k))


def boundaries(m):
    """Boundary set of a decomposition, as a frozenset of cut positions."""
    out = set()
    acc = 0
    for part in m[:-1]:
        acc += part
        out.add(acc)
    return frozenset(out)


def boundary_mask(m):
    """Boundary set packed into an int: bit b-1 set for boundary b."""
    mask = 0
    for b in boundaries(m):
        mask |= 1 << (b - 1)
    return mask


def from_boundaries(n, bset):
    cuts = sorted(bset)
    edges = [0] + cuts + [n]
    return tuple(edges[i + 1] - edges[i] for i in range(len(edges) - 1))


def _check_decomposition(m, n=None):
    m = tuple(m)
    if not m or any(p < 1 for p in m):
        raise ValueError("decomposition must have positive parts: %r" % (m,))
    if n is not None and sum(m) != n:
        raise ValueError("decomposition %s does not decompose %d"
                         % (format_decomposition(m), n))
    return m


def refinement_le(p, m):
    """True iff ``m`` refines ``p`` (written p <= m)."""
    p = _check_decomposition(p)
    m = _check_decomposition(m, sum(p))
    return boundaries(p) <= boundaries(m)


def meet(m, p):
    """Largest decomposition below both ``m`` and ``p``."""
    m = _check_decomposition(m)
    p = _check_decomposition(p, sum(m))
    return from_boundaries(sum(m), boundaries(m) & boundaries(p))


def blocks(m):
    """Index ranges (0-based, half open) of the blocks of a decomposition."""
    out = []
    start = 0
    for part in m:
        out.append((start, start + part))
        start += part
    return out


def collapse_c(lam, m):
    """Nonzero block sums of ``lam`` along ``m``: the class c(lam, m)."""
    m = _check_decomposition(m, len(lam))
    sums = (sum(lam[a:b]) for a, b in blocks(m))
    return tuple(s for s in sums if s)


def enumerate_classes(n, r):
    """C(n, r): compositions of r into at most n positive parts, lexicographic."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if r == 0:
        return [()]
    out = []
    for k in range(1, min(n, r) + 1):
        out.extend(reduced(lam) for lam in enumerate_compositions(k, r)
                   if all(lam))
    out.sort()
    return out


# -- text formats -------------------------------------------------------------

def format_composition(lam):
    return ",".join(str(x) for x in lam)


def format_decomposition(m):
    return "+".join(str(x) for x in m)


def parse_composition(text):
    text = text.strip()
    if not text:
        return ()
    parts = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if not tok.isdigit():
            raise ValueError("bad composition entry %r at position %d in %r"
                             % (tok, pos + 1, text))
        parts.append(int(tok))
    return tuple(parts)


def parse_decomposition(text):
    parts = []
    for pos, tok in enumerate(text.strip().split("+")):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) == 0:
            raise ValueError("bad decomposition part %r at position %d in %r"
                             % (tok, pos + 1, text))
        parts.append(int(tok))
    return tuple(parts)
