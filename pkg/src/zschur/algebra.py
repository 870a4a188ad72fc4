"""Multiplication in S0(n, r) and its degenerate version.

Orbit products are computed by writing the left factor as a word in the
Chevalley-type generators e_i, f_i applied to a diagonal idempotent, then
replaying that word on the right factor with the fundamental rules.
Generator letters are encoded as ints: e_i -> 2(i-1), f_i -> 2(i-1)+1, which
makes the natural int order e1 < f1 < e2 < f2 < ...
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinatorics import (
    enumerate_classes, enumerate_compositions, format_composition,
    length, parse_composition,
)
from .orbits import (
    co, diag, enumerate_orbits, format_matrix, is_generic, orbits_with,
    parse_matrix, ro, open_orbit, idempotent_orbit,
)


def letter(kind, i):
    return 2 * (i - 1) + (0 if kind == "e" else 1)


def unletter(g):
    return ("e" if g % 2 == 0 else "f"), g // 2 + 1


# -- fundamental rules -------------------------------------------------------

def left_mul(g, A):
    """Generator letter ``g`` times e_A, or None when the supports mismatch."""
    i = g >> 1
    upper, lower = A[i], A[i + 1]
    if g & 1 == 0:
        # e_i: move the rightmost unit of row i+1 up to row i
        for p in range(len(A) - 1, -1, -1):
            if lower[p]:
                break
        else:
            return None
    else:
        # f_i: move the leftmost unit of row i down to row i+1
        for p in range(len(A)):
            if upper[p]:
                break
        else:
            return None
        upper, lower = lower, upper
    up = upper[:p] + (upper[p] + 1,) + upper[p + 1:]
    down = lower[:p] + (lower[p] - 1,) + lower[p + 1:]
    if g & 1 == 0:
        return A[:i] + (up, down) + A[i + 2:]
    return A[:i] + (down, up) + A[i + 2:]


def right_mul(A, g):
    """e_A times generator letter ``g``, or None when the supports mismatch."""
    i = g >> 1
    n = len(A)
    rows = None
    if g & 1:
        # f_i: bottom-most unit of column i+1 moves to column i
        for p in range(n - 1, -1, -1):
            if A[p][i + 1]:
                rows = [list(row) for row in A]
                rows[p][i] += 1
                rows[p][i + 1] -= 1
                break
    else:
        # e_i: top-most unit of column i moves to column i+1
        for p in range(n):
            if A[p][i]:
                rows = [list(row) for row in A]
                rows[p][i] -= 1
                rows[p][i + 1] += 1
                break
    return None if rows is None else tuple(map(tuple, rows))


def fundamental_mul(side, kind, i, A):
    n = len(A)
    if not 1 <= i <= n - 1:
        raise ValueError("generator index %d out of range 1..%d" % (i, n - 1))
    if kind not in ("e", "f"):
        raise ValueError("kind must be e or f")
    g = letter(kind, i)
    if side == "left":
        return left_mul(g, A)
    if side == "right":
        return right_mul(A, g)
    raise ValueError("side must be left or right")


# -- words -------------------------------------------------------------------

@lru_cache(maxsize=None)
def word_table(mu, policy="lexmin"):
    """Shortest words for every orbit with column vector ``mu``.

    Breadth-first search from diag(mu) along left multiplications; among the
    shortest words of an orbit the smallest (or largest, for policy
    ``lexmax``) letter sequence is kept.  Words are stored leftmost letter
    first, so the last letter is applied first.
    """
    pick = min if policy == "lexmin" else max
    n = len(mu)
    start = diag(mu)
    words = {start: ()}
    layer = [start]
    letters = range(2 * (n - 1))
    while layer:
        found = {}
        for B in layer:
            wb = words[B]
            for g in letters:
                A = left_mul(g, B)
                if A is None or A in words:
                    continue
                cand = (g,) + wb
                old = found.get(A)
                found[A] = cand if old is None else pick(old, cand)
        words.update(found)
        layer = sorted(found)
    return words


def word_of(A, policy="lexmin"):
    w = word_table(co(A), policy).get(A)
    if w is None:
        raise AssertionError("orbit %s unreachable from its column idempotent"
                             % format_matrix(A))
    return w


@dataclass(frozen=True)
class GeneratorWord:
    steps: tuple  # ((kind, i), ...), leftmost first
    base: tuple

    def __str__(self):
        body = ".".join("%s%d" % s for s in self.steps) or "k"
        return "%s @ %s" % (body, format_composition(self.base))

    def apply(self):
        A = diag(self.base)
        for kind, i in reversed(self.steps):
            A = left_mul(letter(kind, i), A)
            if A is None:
                raise ValueError("word %s is zero" % self)
        return A

    @classmethod
    def parse(cls, text):
        if "@" not in text:
            raise ValueError("word needs '@ base', got %r" % text)
        body, base = text.split("@", 1)
        steps = []
        body = body.strip()
        if body != "k":
            for pos, tok in enumerate(body.split(".")):
                tok = tok.strip()
                if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
                    raise ValueError("bad generator %r at position %d" % (tok, pos + 1))
                steps.append((tok[0], int(tok[1:])))
        return cls(tuple(steps), parse_composition(base))


def word_decompose(A, policy="lexmin"):
    return GeneratorWord(tuple(unletter(g) for g in word_of(A, policy)), co(A))


# -- orbit product -----------------------------------------------------------

def _replay(word, B):
    for g in reversed(word):
        B = left_mul(g, B)
        if B is None:
            raise AssertionError("replay guard failed")
    return B


@lru_cache(maxsize=1 << 20)
def product(A, B):
    """Orbit product e_A e_B as a matrix, or None when co(A) != ro(B)."""
    if co(A) != ro(B):
        return None
    return _replay(word_of(A), B)


def product_with_policy(A, B, policy):
    if co(A) != ro(B):
        return None
    return _replay(word_of(A, policy), B)


def identity_of(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def lift(A):
    return tuple(tuple(x + (i == j) for j, x in enumerate(row)) for i, row in enumerate(A))


def unlift(A):
    if any(A[i][i] == 0 for i in range(len(A))):
        return None
    return tuple(tuple(x - (i == j) for j, x in enumerate(row)) for i, row in enumerate(A))


@lru_cache(maxsize=1 << 18)
def degenerate_product(A, B):
    """Product in DS0(n, r), realised inside S0(n, r+n) modulo I(n, r+n)."""
    C = product(lift(A), lift(B))
    return None if C is None else unlift(C)


def degenerate_left_mul(g, A):
    C = left_mul(g, lift(A))
    return None if C is None else unlift(C)


# -- algebra elements --------------------------------------------------------

class AlgebraElement:
    """Finite rational combination of orbit matrices.

    ``kind`` selects the multiplication: ``schur`` for S0(n, r) and
    ``degenerate`` for DS0(n, r).
    """

    __slots__ = ("terms", "kind")

    def __init__(self, terms=None, kind="schur"):
        clean = {}
        if terms:
            for A, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[A] = c
        self.terms = clean
        self.kind = kind

    @classmethod
    def basis(cls, A, kind="schur"):
        return cls({A: 1}, kind)

    @classmethod
    def zero(cls, kind="schur"):
        return cls({}, kind)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for A, c in other.terms.items():
            out[A] = out.get(A, 0) + c
        return AlgebraElement(out, self.kind)

    def __neg__(self):
        return AlgebraElement({A: -c for A, c in self.terms.items()}, self.kind)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return AlgebraElement({A: scalar * c for A, c in self.terms.items()}, self.kind)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.__rmul__(other)
        return element_multiply(self, other)

    def coefficient(self, A):
        return self.terms.get(A, Fraction(0))

    def support(self):
        return sorted(self.terms)

    def __repr__(self):
        return "AlgebraElement(%s)" % format_element(self)

    def __str__(self):
        return format_element(self)


def element_multiply(x, y):
    if x.kind != y.kind:
        raise ValueError("cannot multiply %s and %s elements" % (x.kind, y.kind))
    mul = product if x.kind == "schur" else degenerate_product
    by_row = defaultdict(list)
    for B, b in y.terms.items():
        by_row[ro(B)].append((B, b))
    acc = defaultdict(Fraction)
    for A, a in x.terms.items():
        for B, b in by_row.get(co(A), ()):
            C = mul(A, B)
            if C is not None:
                acc[C] += a * b
    return AlgebraElement(acc, x.kind)


def format_element(x):
    if not x.terms:
        return "0"
    return " + ".join("%s * %s" % (x.terms[A], format_matrix(A)) for A in sorted(x.terms))


def parse_element(text, kind="schur"):
    text = text.strip()
    if text == "0":
        return AlgebraElement.zero(kind)
    terms = {}
    for pos, chunk in enumerate(text.split("+")):
        if "*" not in chunk:
            raise ValueError("term %d %r lacks 'coef * matrix'" % (pos + 1, chunk.strip()))
        c, m = chunk.split("*", 1)
        try:
            coef = Fraction(c.strip())
        except ValueError:
            raise ValueError("bad coefficient %r in term %d" % (c.strip(), pos + 1))
        A = parse_matrix(m)
        terms[A] = terms.get(A, 0) + coef
    return AlgebraElement(terms, kind)


def k(lam, kind="schur"):
    return AlgebraElement.basis(diag(tuple(lam)), kind)


# -- generator words as operators ---------------------------------------------

def apply_letters(word, lam, kind="schur"):
    """Orbit of word . k_lam (letters applied right to left) or None."""
    A = diag(tuple(lam))
    step = left_mul if kind == "schur" else degenerate_left_mul
    for g in reversed(word):
        A = step(g, A)
        if A is None:
            return None
    return A


def word_sum(terms, lam, kind="schur"):
    """Sum of coef * (word . k_lam) for (coef, word) pairs."""
    acc = defaultdict(Fraction)
    for c, word in terms:
        A = apply_letters(word, lam, kind)
        if A is not None:
            acc[A] += c
    return AlgebraElement(acc, kind)


def _E(i):
    return letter("e", i)


def _F(i):
    return letter("f", i)


def serre_P(i, j):
    e_i, e_j = _E(i), _E(j)
    if i == j - 1:
        return [(1, (e_i, e_i, e_j)), (-1, (e_i, e_j, e_i))]
    if i == j + 1:
        return [(-1, (e_i, e_j, e_i)), (1, (e_j, e_i, e_i))]
    return [(1, (e_i, e_j)), (-1, (e_j, e_i))]


def serre_N(i, j):
    f_i, f_j = _F(i), _F(j)
    if i == j - 1:
        return [(-1, (f_i, f_j, f_i)), (1, (f_j, f_i, f_i))]
    if i == j + 1:
        return [(1, (f_i, f_i, f_j)), (-1, (f_i, f_j, f_i))]
    return [(1, (f_i, f_j)), (-1, (f_j, f_i))]


def commutator(i, j):
    return [(1, (_E(i), _F(j))), (-1, (_F(j), _E(i)))]


def relation_value(family, i, j, lam, kind="schur"):
    """Evaluate one generator relation on k_lam; zero when it holds.

    ``family`` is P, N, C (commutator with the boundary correction, in
    S0) or C' (plain commutator, meant for DS0).
    """
    lam = tuple(lam)
    if family == "P":
        return word_sum(serre_P(i, j), lam, kind)
    if family == "N":
        return word_sum(serre_N(i, j), lam, kind)
    val = word_sum(commutator(i, j), lam, kind)
    if family == "C" and i == j:
        corr = (lam[i] == 0) - (lam[i - 1] == 0)
        if corr:
            val = val - corr * k(lam, kind)
    elif family not in ("C", "C'"):
        raise ValueError("unknown relation family %r" % family)
    return val


def check_generator_relations(n, r, kind="schur"):
    """All failing (family, i, j, lam) for the generator relations."""
    fams = ("P", "N", "C") if kind == "schur" else ("P", "N", "C'")
    bad = []
    for lam in enumerate_compositions(n, r):
        for i in range(1, n):
            for j in range(1, n):
                for fam in fams:
                    if relation_value(fam, i, j, lam, kind):
                        bad.append((fam, i, j, lam))
    return bad


# -- ideals and dimensions ---------------------------------------------------

def dimension_formulas(n, r):
    """(dim S0(n,r), dim I(n,r), dim of the quotient) from the closed forms."""
    dim = comb(n * n + r - 1, r)
    if r < n:
        return dim, dim, 0
    top = n * n + r - n - 1
    dim_i = sum(comb(n, s) * comb(top, r + s - n) for s in range(1, n + 1))
    return dim, dim_i, comb(top, r - n)


def dimension_counts(n, r):
    """The same three numbers by enumerating matrices."""
    all_pos = 0
    total = 0
    idx = [i * n + i for i in range(n)]
    for flat in enumerate_compositions(n * n, r):
        total += 1
        if all(flat[p] for p in idx):
            all_pos += 1
    if r < n:
        return total, total, 0
    return total, total - all_pos, all_pos


def ideal_membership(A, level):
    """Whether e_A lies in I_level, the ideal generated by k_mu with |mu| <= level."""
    n = len(A)
    if not 1 <= level <= n:
        raise ValueError("level must be in 1..%d" % n)
    if level == n:
        return True
    if level == 1:
        return is_generic(A)
    if level == n - 1:
        return any(A[i][i] == 0 for i in range(n))
    return ideal_membership_bruteforce(A, level)


def ideal_membership_bruteforce(A, level):
    lam, nu = ro(A), co(A)
    r = sum(lam)
    for mu in enumerate_compositions(len(A), r):
        if length(mu) > level:
            continue
        rights = set(orbits_with(mu, nu))
        for B in orbits_with(lam, mu):
            for C in rights:
                if product(B, C) == A:
                    return True
    return False


# -- orthogonal idempotents for n = 3 ------------------------------------------

def drop_open(x):
    """Image of x in the quotient by the block spanned by open orbits."""
    return AlgebraElement({A: c for A, c in x.terms.items() if not is_generic(A)}, x.kind)


def orthogonal_idempotents_n3(lam):
    """(k_a, k_b, kbar) for interior lam in S0(3, r), modulo open orbits."""
    lam = tuple(lam)
    if len(lam) != 3:
        raise ValueError("defined for n = 3 only")
    if not all(lam):
        raise ValueError("lambda %s is on the boundary" % format_composition(lam))
    a = idempotent_orbit(lam, (2, 1))
    b = idempotent_orbit(lam, (1, 2))

    def series(first, second):
        acc = defaultdict(Fraction)
        cur, sign, nxt = first, 1, second
        while not is_generic(cur):
            acc[cur] += sign
            cur = product(cur, nxt)
            nxt = first if nxt == second else second
            sign = -sign
        return AlgebraElement(acc)

    ka = series(a, b)
    kb = series(b, a)
    kbar = k(lam) - ka - kb
    return ka, kb, drop_open(kbar)


def quotient_mul(x, y):
    return drop_open(x * y)


def class_count(n, r):
    return len(enumerate_classes(n, r))


__all__ = [
    "AlgebraElement", "GeneratorWord", "apply_letters", "check_generator_relations",
    "class_count", "degenerate_product", "dimension_counts", "dimension_formulas",
    "drop_open", "element_multiply", "format_element", "fundamental_mul",
    "ideal_membership", "k", "left_mul", "letter", "lift", "open_orbit",
    "orthogonal_idempotents_n3", "parse_element", "product", "product_with_policy",
    "quotient_mul", "relation_value", "right_mul", "unletter", "unlift",
    "word_decompose", "word_of", "word_sum", "word_table", "enumerate_orbits",
]
