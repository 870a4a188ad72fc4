"""Projective modules over S0(n, r) and the basic algebra they assemble into.

Conventions: an orbit A with ro(A) = tau and co(A) = sigma lives in
k_tau S k_sigma and is read as an arrow sigma -> tau; products compose right
to left.  Classes are represented by compositions with the zeros moved to
the end unless a representative is passed explicitly.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, letter, left_mul, product
from .combinatorics import (
    boundary_mask, canonical_rep, class_members, collapse_c,
    enumerate_classes, enumerate_decompositions, format_composition, reduced,
)
from .linalg import Echelon, Inconsistent, solve
from .orbits import (
    crossing_masks, diag, distinct_idempotents, idempotent_orbit,
    orbits_with, transpose,
)


# -- orbit bases ---------------------------------------------------------------

def _col_generic(A, mask):
    return all(c & mask for c in crossing_masks(A))


def _row_generic(A, mask):
    return all(c & mask for c in crossing_masks(transpose(A)))


def projective_basis(lam, m, side="left"):
    """Orbit basis of S o_{lam,m} (left) or o_{lam,m} S (right)."""
    lam = tuple(lam)
    mask = boundary_mask(m)
    if side == "left":
        return [A for A in orbits_with(None, lam) if _col_generic(A, mask)]
    if side == "right":
        return [A for A in orbits_with(lam, None) if _row_generic(A, mask)]
    raise ValueError("side must be left or right")


@dataclass(frozen=True)
class HomBasis:
    source: tuple
    target: tuple
    basis: tuple

    def __len__(self):
        return len(self.basis)


def hom_basis(lam, m, mu, p):
    """Orbits spanning Hom(S o_{lam,m}, S o_{mu,p})."""
    lam, mu = tuple(lam), tuple(mu)
    mm, pm = boundary_mask(m), boundary_mask(p)
    basis = tuple(A for A in orbits_with(lam, mu)
                  if _row_generic(A, mm) and _col_generic(A, pm))
    return HomBasis((lam, tuple(m)), (mu, tuple(p)), basis)


@lru_cache(maxsize=None)
def nontrivial_decompositions(lam):
    """Decompositions m with o_{lam,m} different from k_lam, lexicographic."""
    lam = tuple(lam)
    k = diag(lam)
    return tuple(m for m in enumerate_decompositions(len(lam))
                 if idempotent_orbit(lam, m) != k)


@lru_cache(maxsize=None)
def _nontrivial_masks(lam):
    return tuple(sorted({boundary_mask(m) for m in nontrivial_decompositions(lam)}))


def _in_left_span(A, lam):
    return any(_col_generic(A, mk) for mk in _nontrivial_masks(lam))


def _in_right_span(A, lam):
    return any(_row_generic(A, mk) for mk in _nontrivial_masks(lam))


@lru_cache(maxsize=None)
def indec_basis(lam):
    """Orbits with co = lam that lie in no S o_{lam,m} for nontrivial m."""
    lam = tuple(lam)
    return tuple(A for A in orbits_with(None, lam) if not _in_left_span(A, lam))


@lru_cache(maxsize=None)
def indec_hom_basis(lam, mu):
    """Orbit basis of Hom(P_lam, P_mu) inside k_lam S k_mu."""
    lam, mu = tuple(lam), tuple(mu)
    return tuple(A for A in orbits_with(lam, mu)
                 if not _in_right_span(A, lam) and not _in_left_span(A, mu))


def indec_hom_dim(lam, mu):
    return len(indec_hom_basis(tuple(lam), tuple(mu)))


# -- the complement idempotent -----------------------------------------------

@lru_cache(maxsize=None)
def complement_idempotent(lam):
    """An idempotent x in k_lam S k_lam generating the sum of S o_{lam,m}.

    First tries a two-sided solution (x o = o = o x for every nontrivial
    idempotent orbit o, x supported on orbits in both the left and the right
    span); falls back to the left equations alone.  Returns (x, two_sided).
    """
    lam = tuple(lam)
    ids = sorted({idempotent_orbit(lam, m) for m in nontrivial_decompositions(lam)})
    if not ids:
        return AlgebraElement.zero(), True
    square = orbits_with(lam, lam)
    both = [B for B in square if _in_left_span(B, lam) and _in_right_span(B, lam)]
    try:
        x = _solve_identity(ids, both, two_sided=True)
        return x, True
    except Inconsistent:
        left = [B for B in square if _in_left_span(B, lam)]
        return _solve_identity(ids, left, two_sided=False), False


def _solve_identity(ids, unknowns, two_sided):
    eqs = []
    sides = [("left", o) for o in ids]
    if two_sided:
        sides += [("right", o) for o in ids]
    for side, o in sides:
        rows = defaultdict(dict)
        for B in unknowns:
            C = product(o, B) if side == "left" else product(B, o)
            rows[C][B] = rows[C].get(B, 0) + 1
        rows.setdefault(o, {})
        for C in sorted(rows):
            eqs.append((rows[C], 1 if C == o else 0))
    sol = solve(eqs)
    return AlgebraElement(sol)


def truncator(lam):
    """k_lam - x_lam, the idempotent cutting out P_lam."""
    lam = tuple(lam)
    return AlgebraElement.basis(diag(lam)) - complement_idempotent(lam)[0]


@dataclass
class IndecProjective:
    cls: tuple
    representative: tuple
    basis: tuple
    complement_idempotent: AlgebraElement
    two_sided: bool

    @property
    def dim(self):
        return len(self.basis)


def indec_projective(lam):
    lam = tuple(lam)
    x, two = complement_idempotent(lam)
    return IndecProjective(reduced(lam), lam, indec_basis(lam), x, two)


def verify_complement(lam):
    """Failures of the defining properties of x_lam (empty list when fine)."""
    lam = tuple(lam)
    x, _ = complement_idempotent(lam)
    bad = []
    if x * x != x:
        bad.append("x is not idempotent")
    t = truncator(lam)
    for m in nontrivial_decompositions(lam):
        o = AlgebraElement.basis(idempotent_orbit(lam, m))
        if o * x != o:
            bad.append("o_%s x != o" % (m,))
        if o * t:
            bad.append("o_%s (k - x) != 0" % (m,))
    for B in x.terms:
        if not _in_left_span(B, lam):
            bad.append("x has support outside the span")
            break
    return bad


# -- classes, Cartan matrix, decompositions --------------------------------

def representative(cls, n):
    return canonical_rep(tuple(cls), n)


def nontrivial_classes(n, r):
    return [c for c in enumerate_classes(n, r) if len(c) > 1]


def cartan_matrix(n, r, classes=None, reps=None):
    """Hom dimensions between indecomposable projectives, as a list of rows."""
    if classes is None:
        classes = enumerate_classes(n, r)
    if reps is None:
        reps = [representative(c, n) for c in classes]
    return [[indec_hom_dim(a, b) for b in reps] for a in reps]


def dim_projective_class(cls, n):
    return len(indec_basis(representative(cls, n)))


def decompose_projective(lam):
    """Classes of the indecomposable summands of S k_lam, one per idempotent."""
    lam = tuple(lam)
    n = len(lam)
    out = []
    for o, labels in sorted(distinct_idempotents(lam).items()):
        cs = {collapse_c(lam, m) for m in labels}
        if len(cs) != 1:
            raise AssertionError("labels of one idempotent disagree on the class")
        out.append(cs.pop())
    total = sum(dim_projective_class(c, n) for c in out)
    if total != len(orbits_with(None, lam)):
        raise AssertionError("summand dimensions %d do not add up to %d"
                             % (total, len(orbits_with(None, lam))))
    return sorted(out, key=lambda c: (len(c), c), reverse=True)


def proj_iso(lam, l, mu, m):
    return collapse_c(tuple(lam), tuple(l)) == collapse_c(tuple(mu), tuple(m))


# -- Ext^1 between simples ---------------------------------------------------

def ext_clause(lam, mu):
    """Which rule relates the representatives: 'adjacent', 'connecting' or None."""
    n = len(lam)
    d = [a - b for a, b in zip(lam, mu)]
    nz = [i for i, x in enumerate(d) if x]
    if len(nz) == 2 and nz[1] == nz[0] + 1:
        i, j = nz
        if d[i] == -d[j] and abs(d[i]) == 1 and lam[i] * lam[j] * mu[i] * mu[j]:
            return "adjacent"
    if len(nz) == 3 and nz[2] == nz[0] + 2:
        s = nz[1]
        if 0 < s < n - 1:
            if d[s - 1] == 1 and d[s] == -2 and d[s + 1] == 1 and lam[s] == 0 \
                    and mu[s - 1] * mu[s + 1]:
                return "connecting"
            if d[s - 1] == -1 and d[s] == 2 and d[s + 1] == -1 and mu[s] == 0 \
                    and lam[s - 1] * lam[s + 1]:
                return "connecting"
    return None


@lru_cache(maxsize=None)
def ext_kind(lam_cls, mu_cls, n):
    kinds = set()
    for a in class_members(lam_cls, n):
        for b in class_members(mu_cls, n):
            c = ext_clause(a, b)
            if c:
                kinds.add(c)
    if not kinds:
        return None
    return "adjacent" if "adjacent" in kinds else "connecting"


def ext1(lam_cls, mu_cls, n, r=None):
    lam_cls, mu_cls = reduced(lam_cls), reduced(mu_cls)
    if r is not None and (sum(lam_cls) != r or sum(mu_cls) != r):
        raise ValueError("classes do not belong to S0(%d, %d)" % (n, r))
    return 1 if ext_kind(lam_cls, mu_cls, n) else 0


def ext_table(n, r, classes=None):
    classes = classes if classes is not None else enumerate_classes(n, r)
    return [[ext1(a, b, n) for b in classes] for a in classes]


@dataclass
class Arrow:
    source: tuple
    target: tuple
    multiplicity: int
    label: str
    connecting: bool = False


@dataclass
class QuiverPresentation:
    vertices: list
    arrows: list
    relations: list = field(default_factory=list)

    def pairs(self, connecting=None):
        out = set()
        for a in self.arrows:
            if connecting is None or a.connecting == connecting:
                out.add(tuple(sorted((a.source, a.target))))
        return out


def gabriel_quiver(n, r, classes=None):
    verts = list(classes) if classes is not None else enumerate_classes(n, r)
    arrows = []
    for a in verts:
        for b in verts:
            kind = ext_kind(a, b, n) if a != b else None
            if kind:
                label = "%s->%s" % (format_composition(a), format_composition(b))
                arrows.append(Arrow(a, b, 1, label, kind == "connecting"))
    return QuiverPresentation(verts, arrows)


# -- irreducible maps --------------------------------------------------------

def _word_orbit(word, lam):
    """Orbit of the letter word (leftmost first) applied to k_lam, or None."""
    A = diag(tuple(lam))
    for g in reversed(word):
        A = left_mul(g, A)
        if A is None:
            return None
    return A


def _direct_word(src, dst):
    """Generator word from k_src to k_dst for a directly related pair."""
    d = [b - a for a, b in zip(src, dst)]
    nz = [i for i, x in enumerate(d) if x]
    if len(nz) == 2 and abs(d[nz[0]]) == 1 and d[nz[0]] == -d[nz[1]]:
        i, j = nz
        if all(src[t] == 0 and dst[t] == 0 for t in range(i + 1, j)) \
                and src[i] * src[j] * dst[i] * dst[j]:
            if d[i] == 1:  # unit travels from j to i
                return tuple(letter("e", t + 1) for t in range(i, j))
            return tuple(letter("f", t + 1) for t in range(j - 1, i - 1, -1))
    if ext_clause(src, dst) == "connecting":
        s = nz[1]
        if src[s] == 0:
            return (letter("f", s), letter("e", s + 1))
        return (letter("f", s + 1), letter("e", s))
    return None


def _zero_moves(lam):
    """Neighbours of lam in its class reachable by moving one part past a zero."""
    n = len(lam)
    for i in range(n - 1):
        a, b = lam[i], lam[i + 1]
        if a == 0 and b:
            nxt = lam[:i] + (b, 0) + lam[i + 2:]
            yield nxt, (letter("e", i + 1),) * b
        elif b == 0 and a:
            nxt = lam[:i] + (0, a) + lam[i + 2:]
            yield nxt, (letter("f", i + 1),) * a


@lru_cache(maxsize=None)
def transport_orbits(lam):
    """For each member of lam's class, an orbit iso k_member S <- k_lam S."""
    lam = tuple(lam)
    out = {lam: diag(lam)}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for nxt, word in sorted(_zero_moves(cur)):
            if nxt not in out:
                step = _word_orbit(word, cur)
                out[nxt] = product(step, out[cur])
                queue.append(nxt)
    return out


def _transport_back(lam, member):
    """Orbit from k_member back to k_lam (the inverse transport)."""
    fwd = transport_orbits(tuple(member))
    return fwd[tuple(lam)]


def irr_orbit(src, dst):
    """Orbit of a generator composite realising an irreducible map src -> dst."""
    src, dst = tuple(src), tuple(dst)
    w = _direct_word(src, dst)
    if w is not None:
        return _word_orbit(w, src)
    n = len(src)
    best = None
    for a in class_members(reduced(src), n):
        for b in class_members(reduced(dst), n):
            w = _direct_word(a, b)
            if w is None:
                continue
            cost = sum(x != y for x, y in zip(a, src)) + sum(x != y for x, y in zip(b, dst))
            if best is None or (cost, a, b) < best[:3]:
                best = (cost, a, b, w)
    if best is None:
        raise ValueError("no irreducible map between %s and %s"
                         % (format_composition(src), format_composition(dst)))
    _, a, b, w = best
    u = transport_orbits(src)[a]
    v = _transport_back(dst, b)
    return product(v, product(_word_orbit(w, a), u))


def irr_map_element(src, dst):
    """(k_dst - x_dst) g (k_src - x_src) for the generator composite g."""
    g = AlgebraElement.basis(irr_orbit(src, dst))
    el = truncator(dst) * g * truncator(src)
    if not el:
        raise AssertionError("irreducible map %s -> %s truncates to zero"
                             % (format_composition(src), format_composition(dst)))
    return el


# -- the basic algebra ---------------------------------------------------------

class BasicAlgebra:
    """End of the sum of the indecomposable projectives, in orbit coordinates.

    Basis vector (a, b, A) stands for (k_a - x_a) e_A (k_b - x_b) where a, b
    are class representatives and A runs over indec_hom_basis(a, b).  Its
    coordinates are the coefficients on those basis orbits.
    """

    def __init__(self, n, r, classes=None, reps=None):
        self.n, self.r = n, r
        self.classes = list(classes) if classes is not None else enumerate_classes(n, r)
        if reps is None:
            reps = [representative(c, n) for c in self.classes]
        self.reps = [tuple(x) for x in reps]
        self.rep_of = dict(zip(self.classes, self.reps))
        for lam in self.reps:
            _, two = complement_idempotent(lam)
            if not two:
                raise AssertionError("no two-sided complement idempotent for %s"
                                     % format_composition(lam))
        self.basis = []
        self.block = {}
        for a in self.reps:
            for b in self.reps:
                idx = []
                for A in indec_hom_basis(a, b):
                    idx.append(len(self.basis))
                    self.basis.append((a, b, A))
                self.block[(a, b)] = idx
        self.index = {A: i for i, (_, _, A) in enumerate(self.basis)}
        self._x = {lam: complement_idempotent(lam)[0] for lam in self.reps}

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, el):
        """Coordinates of an element of a sum of (k-x) S (k-x) blocks."""
        return {self.index[A]: c for A, c in el.terms.items() if A in self.index}

    def element(self, vec):
        acc = AlgebraElement.zero()
        for i, c in vec.items():
            a, b, A = self.basis[i]
            acc = acc + c * (truncator(a) * AlgebraElement.basis(A) * truncator(b))
        return acc

    def mul(self, i, j):
        """Structure constants of basis_i * basis_j as a sparse dict."""
        a, b, A = self.basis[i]
        b2, c, B = self.basis[j]
        if b != b2:
            return {}
        out = defaultdict(Fraction)
        C = product(A, B)
        if C in self.index:
            out[self.index[C]] += 1
        for D, coef in self._x[b].terms.items():
            C = product(product(A, D), B)
            if C in self.index:
                out[self.index[C]] -= coef
        return {k: v for k, v in out.items() if v}

    def mul_full(self, i, j):
        """The same product computed through full element arithmetic."""
        return self.coords(self.element({i: 1}) * self.element({j: 1}))

    def mul_vec(self, u, v):
        out = defaultdict(Fraction)
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul(i, j).items():
                    out[k] += a * b * c
        return {k: v for k, v in out.items() if v}

    def identity_index(self, lam):
        return self.index[diag(lam)]

    def radical_basis(self):
        ids = {self.identity_index(lam) for lam in self.reps}
        return [i for i in range(self.dim) if i not in ids]

    def radical_table(self):
        """dim rad/rad^2 in each block, keyed by (row class, column class)."""
        rad = self.radical_basis()
        ids = {self.identity_index(lam) for lam in self.reps}
        by_row = defaultdict(list)
        for i in rad:
            by_row[self.basis[i][0]].append(i)
        spans = defaultdict(Echelon)
        for i in rad:
            b = self.basis[i][1]
            for j in by_row[b]:
                vec = self.mul(i, j)
                if not vec:
                    continue
                if ids & vec.keys():
                    raise AssertionError("radical is not closed under products")
                key = (self.basis[i][0], self.basis[j][1])
                spans[key].add(vec)
        table = {}
        for a, ca in zip(self.reps, self.classes):
            for b, cb in zip(self.reps, self.classes):
                size = sum(1 for i in self.block[(a, b)] if i not in ids)
                table[(ca, cb)] = size - len(spans[(a, b)]) if (a, b) in spans else size
        return table


def radical_check(n, r, classes=None):
    """Pairs where dim rad/rad^2 disagrees with the Ext^1 rule (empty = ok)."""
    alg = BasicAlgebra(n, r, classes)
    table = alg.radical_table()
    bad = []
    for (a, b), v in sorted(table.items()):
        want = ext1(a, b, n) if a != b else 0
        if v != want:
            bad.append((a, b, v, want))
    return bad, table, alg


def embed(A, n):
    """Zero-pad an orbit matrix (or composition) to size n."""
    if A and isinstance(A[0], tuple):
        m = len(A)
        return tuple(tuple(A[i]) + (0,) * (n - m) if i < m else (0,) * n for i in range(n))
    return tuple(A) + (0,) * (n - len(A))


__all__ = [
    "Arrow", "BasicAlgebra", "HomBasis", "IndecProjective", "QuiverPresentation",
    "cartan_matrix", "complement_idempotent", "decompose_projective",
    "dim_projective_class", "embed", "ext1", "ext_clause", "ext_kind", "ext_table",
    "gabriel_quiver", "hom_basis", "indec_basis", "indec_hom_basis", "indec_hom_dim",
    "indec_projective", "irr_map_element", "irr_orbit", "nontrivial_classes",
    "nontrivial_decompositions", "proj_iso", "projective_basis", "radical_check",
    "representative", "transport_orbits", "truncator", "verify_complement",
]
