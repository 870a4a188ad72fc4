"""Relation files: bind labels to algebra elements and check word equations.

File format, one item per line (``#`` starts a comment)::

    @kind degenerate            # optional; default is schur
    b1 := irr 1,1,3 -> 1,2,2    # irreducible map from vertex 1,1,3 to 1,2,2
    k1 := idem 0,0,2            # the diagonal idempotent k_lambda
    t1 := trunc 1,2,2           # k_lambda minus its complement idempotent
    e := gen e2 @ 0,0,2         # the orbit of a generator word
    z := elem 1 * 0,1;1,0       # an explicit element
    b4.b2.b1 = b5.b3.b1         # relation; '=' may be chained
    b1.B1 = B2.b2 + B3.b3
    g1.G1 = -B3.b3

A word ``x.y.z`` is the product x*y*z, so the path it describes runs from
right to left.  When that product is not composable but the reversed one is,
the reversed product is used and the relation is flagged as reversed.
"""

import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .algebra import AlgebraElement, GeneratorWord, parse_element
from .combinatorics import parse_composition
from .linalg import Echelon, Inconsistent, solve
from .orbits import co, ro

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass
class Term:
    coef: Fraction
    word: tuple  # labels, leftmost first


@dataclass
class Relation:
    sides: list  # list of lists of Term
    text: str
    line: int


@dataclass
class RelationFile:
    kind: str = "schur"
    bindings: dict = field(default_factory=dict)  # label -> (verb, argument)
    fixed: set = field(default_factory=set)       # labels that cannot be rescaled
    relations: list = field(default_factory=list)


def _parse_term(tok, lineno):
    tok = tok.strip()
    coef = Fraction(1)
    if "*" in tok:
        c, tok = tok.split("*", 1)
        c = c.strip()
        if c in ("", "-"):
            coef = Fraction(-1 if c == "-" else 1)
        else:
            try:
                coef = Fraction(c)
            except ValueError:
                raise ValueError("line %d: bad coefficient %r" % (lineno, c))
        tok = tok.strip()
    elif tok.startswith("-"):
        coef = Fraction(-1)
        tok = tok[1:].strip()
    if tok == "0":
        return None
    labels = tuple(t.strip() for t in tok.split("."))
    for pos, lab in enumerate(labels):
        if not _NAME.match(lab):
            raise ValueError("line %d: bad label %r at position %d" % (lineno, lab, pos + 1))
    return Term(coef, labels)


def _parse_side(text, lineno):
    text = re.sub(r"\s-\s*", " + -", " " + text.strip())
    terms = []
    for chunk in text.split("+"):
        if not chunk.strip():
            continue
        t = _parse_term(chunk, lineno)
        if t is not None:
            terms.append(t)
    return terms


def parse_relation_text(text):
    out = RelationFile()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@kind"):
            out.kind = line.split()[1]
            if out.kind not in ("schur", "degenerate"):
                raise ValueError("line %d: unknown algebra kind %r" % (lineno, out.kind))
            continue
        if ":=" in line:
            name, rhs = (s.strip() for s in line.split(":=", 1))
            if not _NAME.match(name):
                raise ValueError("line %d: bad label %r" % (lineno, name))
            verb, _, arg = rhs.partition(" ")
            if verb not in ("irr", "idem", "trunc", "gen", "elem"):
                raise ValueError("line %d: unknown binding %r" % (lineno, verb))
            out.bindings[name] = (verb, arg.strip())
            if verb in ("idem", "trunc", "elem"):
                out.fixed.add(name)
            continue
        sides = [_parse_side(s, lineno) for s in line.split("=")]
        if len(sides) < 2:
            raise ValueError("line %d: relation needs '='" % lineno)
        out.relations.append(Relation(sides, line, lineno))
    return out


def load_relation_file(path):
    with open(path) as fh:
        return parse_relation_text(fh.read())


def fixture_text(name):
    """Text of a bundled relation file, e.g. ``b35``."""
    return resources.files("zschur").joinpath("data", name + ".rel").read_text()


def bind(rel_file):
    """Evaluate every binding to an AlgebraElement."""
    from .modules import irr_map_element, truncator
    kind = rel_file.kind
    env = {}
    for name, (verb, arg) in rel_file.bindings.items():
        if verb == "irr":
            src, _, dst = arg.partition("->")
            el = irr_map_element(parse_composition(src), parse_composition(dst))
        elif verb == "idem":
            el = AlgebraElement.basis(GeneratorWord((), parse_composition(arg)).apply())
        elif verb == "trunc":
            if kind != "schur":
                raise ValueError("trunc is only defined for the 0-Schur algebra")
            el = truncator(parse_composition(arg))
        elif verb == "gen":
            el = AlgebraElement.basis(_gen_orbit(arg, kind))
        else:
            el = parse_element(arg)
        env[name] = AlgebraElement(el.terms, kind)
    return env


def _gen_orbit(arg, kind):
    word = GeneratorWord.parse(arg)
    if kind == "schur":
        return word.apply()
    from .algebra import apply_letters, letter
    A = apply_letters(tuple(letter(k, i) for k, i in word.steps), word.base, kind)
    if A is None:
        raise ValueError("generator word %s is zero" % arg)
    return A


def _support_rc(el):
    rs = {ro(A) for A in el.terms}
    cs = {co(A) for A in el.terms}
    return rs, cs


def _composable(els):
    for left, right in zip(els, els[1:]):
        _, cl = _support_rc(left)
        rr, _ = _support_rc(right)
        if cl and rr and not cl & rr:
            return False
    return True


def evaluate_word(word, env, scale=None):
    """Product of the bound elements; returns (value, reversed?)."""
    for lab in word:
        if lab not in env:
            raise KeyError("unbound label %r" % lab)
    els = [env[lab] for lab in word]
    flipped = False
    if not _composable(els) and _composable(els[::-1]):
        els = els[::-1]
        flipped = True
    val = els[0]
    for el in els[1:]:
        val = val * el
    if scale:
        c = Fraction(1)
        for lab in word:
            c *= scale.get(lab, 1)
        val = c * val
    return val, flipped


@dataclass
class Verdict:
    relation: Relation
    status: str  # exact | proportional | failed
    scalar: Fraction = None
    detail: str = ""
    reversed: bool = False
    scalars: list = None


def _term_values(rel, env, scale=None):
    vals = []
    flipped = False
    for side_no, side in enumerate(rel.sides):
        row = []
        for t in side:
            v, f = evaluate_word(t.word, env, scale)
            flipped |= f
            row.append((t, v))
        vals.append(row)
    return vals, flipped


def _side_sum(row):
    acc = None
    for t, v in row:
        acc = t.coef * v if acc is None else acc + t.coef * v
    return acc if acc is not None else AlgebraElement.zero()


def _ratio(a, b):
    """c with a == c * b, or None."""
    if not a or not b or a.terms.keys() != b.terms.keys():
        return None
    key = min(a.terms)
    c = a.terms[key] / b.terms[key]
    return c if a == c * b else None


def verify_relation(rel, env, scale=None):
    """Exact, proportional (each side a nonzero multiple of the first) or failed.

    For a proportional verdict ``scalar`` is the factor of the second side, and
    ``scalars`` lists one factor per side.
    """
    vals, flipped = _term_values(rel, env, scale)
    sums = [_side_sum(row) for row in vals]
    if all(s == sums[0] for s in sums[1:]):
        return Verdict(rel, "exact", Fraction(1), reversed=flipped)
    ratios = [_ratio(s, sums[0]) for s in sums]
    if all(c is not None for c in ratios):
        return Verdict(rel, "proportional", ratios[1], reversed=flipped, scalars=ratios)
    return Verdict(rel, "failed", None,
                   "; ".join("side %d = %s" % (i + 1, s) for i, s in enumerate(sums)),
                   reversed=flipped)


# -- global rescaling --------------------------------------------------------

def _prime_factors(q):
    out = defaultdict(int)
    for num, sgn in ((abs(q.numerator), 1), (q.denominator, -1)):
        p = 2
        while p * p <= num:
            while num % p == 0:
                out[p] += sgn
                num //= p
            p += 1
        if num > 1:
            out[num] += sgn
    return out


def _term_list(rel):
    """Flatten sides into (coef, word) for sum_t coef_t w_t = 0."""
    out = []
    for i, side in enumerate(rel.sides):
        for t in side:
            out.append((t.coef if i == 0 else -t.coef, t.word))
    return out


def _monomial_constraints(rel, env):
    """Constraints prod(scale)^exps = value from a single relation.

    Every adjacent pair of sides gives one equation sum_t c_t s_t T_t = 0,
    where s_t is the product of the scalars of the labels in term t.
    Returns (constraints, ok).
    """
    cons = []
    for left, right in zip(rel.sides, rel.sides[1:]):
        terms = [(t.coef, t.word) for t in left] + [(-t.coef, t.word) for t in right]
        vals = [(c, w, evaluate_word(w, env)[0]) for c, w in terms]
        live = [(c, w, v) for c, w, v in vals if v]
        if not live:
            continue
        if len(live) == 1:
            return cons, False
        # kernel of the linear map y -> sum y_t T_t, restricted to live terms
        ker = _kernel([v for _, _, v in live])
        if len(ker) != 1:
            return cons, False
        y = ker[0]
        if any(y[i] == 0 for i in range(len(live))):
            return cons, False
        c0, w0, _ = live[0]
        for i in range(1, len(live)):
            ci, wi, _ = live[i]
            # c_i s_i / (c_0 s_0) = y_i / y_0
            ratio = (y[i] / y[0]) * (c0 / ci)
            exps = defaultdict(int)
            for lab in wi:
                exps[lab] += 1
            for lab in w0:
                exps[lab] -= 1
            cons.append((dict(exps), ratio))
    return cons, True


def _kernel(vectors):
    """Basis of {y : sum y_i v_i = 0} for AlgebraElements v_i."""
    keys = sorted({A for v in vectors for A in v.terms})
    ech = Echelon()
    for A in keys:
        ech.add({i: v.terms.get(A, 0) for i, v in enumerate(vectors) if v.terms.get(A)})
    pivots = set(ech.rows)
    free = [i for i in range(len(vectors)) if i not in pivots]
    basis = []
    for f in free:
        y = {i: Fraction(0) for i in range(len(vectors))}
        y[f] = Fraction(1)
        for piv, row in ech.rows.items():
            y[piv] = -row.get(f, 0)
        basis.append(y)
    return basis


def solve_rescaling(relations, env, fixed=()):
    """Nonzero rational scalars per label making all relations exact.

    Returns (scale, problems).  Signs are solved over GF(2) and prime
    exponents over the integers (via a rational solve and an integrality
    check).
    """
    cons = []
    problems = []
    for rel in relations:
        c, ok = _monomial_constraints(rel, env)
        if not ok:
            problems.append(rel)
        cons.extend(c)
    labels = sorted({lab for exps, _ in cons for lab in exps if lab not in fixed})
    # signs
    sign_rows = []
    for exps, val in cons:
        row = {lab: e % 2 for lab, e in exps.items() if lab not in fixed and e % 2}
        sign_rows.append((row, 1 if val < 0 else 0))
    signs = _solve_gf2(sign_rows)
    if signs is None:
        return None, problems + ["sign constraints inconsistent"]
    primes = sorted({p for _, val in cons for p in _prime_factors(val)})
    exps_of = {lab: defaultdict(int) for lab in labels}
    for p in primes:
        eqs = []
        for exps, val in cons:
            row = {lab: e for lab, e in exps.items() if lab not in fixed and e}
            eqs.append((row, _prime_factors(val).get(p, 0)))
        try:
            sol = solve(eqs)
        except Inconsistent:
            return None, problems + ["exponent constraints inconsistent at prime %d" % p]
        for lab, e in sol.items():
            if e.denominator != 1:
                return None, problems + ["non-integral exponent for %s" % lab]
            exps_of[lab][p] = int(e)
    scale = {}
    for lab in labels:
        v = Fraction(-1 if signs.get(lab) else 1)
        for p, e in exps_of[lab].items():
            v *= Fraction(p) ** e
        scale[lab] = v
    return scale, problems


def _solve_gf2(rows):
    pivots = {}
    for row, rhs in rows:
        vec = {k for k, v in row.items() if v}
        b = rhs
        for piv in sorted(pivots):
            if piv in vec:
                pv, pb = pivots[piv]
                vec ^= pv
                b ^= pb
        if not vec:
            if b:
                return None
            continue
        piv = min(vec)
        for other in list(pivots):
            pv, pb = pivots[other]
            if piv in pv:
                pivots[other] = (pv ^ vec, pb ^ b)
        pivots[piv] = (vec, b)
    return {piv: b for piv, (vec, b) in pivots.items() if b}


@dataclass
class VerificationReport:
    verdicts: list
    scale: dict
    rescaled: list
    problems: list

    @property
    def ok(self):
        return (all(v.status != "failed" for v in self.verdicts)
                and self.scale is not None
                and all(v.status == "exact" for v in self.rescaled))


def verify_file(rel_file, env=None):
    env = env if env is not None else bind(rel_file)
    verdicts = [verify_relation(r, env) for r in rel_file.relations]
    scale, problems = solve_rescaling(rel_file.relations, env, rel_file.fixed)
    rescaled = []
    if scale is not None:
        rescaled = [verify_relation(r, env, scale) for r in rel_file.relations]
    return VerificationReport(verdicts, scale, rescaled, problems)
