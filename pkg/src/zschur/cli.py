"""Command line interface: ``zschur <command> n r ...``.

Exit status is 0 on success, 1 when a check or verification fails and 2 on
bad input.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import acceptance, export
from .algebra import class_count, dimension_formulas, product
from .combinatorics import (
    enumerate_classes, enumerate_compositions, format_composition,
    format_decomposition, parse_composition,
)
from .modules import (
    decompose_projective, ext1, gabriel_quiver, indec_hom_dim, nontrivial_classes,
    representative,
)
from .orbits import (
    co, degenerates_to, distinct_idempotents, format_matrix, orbits_with,
    parse_matrix, ro, total,
)
from .relations import (
    bind, fixture_text, load_relation_file, parse_relation_text, verify_file,
)


class UsageError(Exception):
    pass


# -- argument helpers -----------------------------------------------------------

def _threads():
    raw = os.environ.get("ZSCHUR_THREADS", "")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError("ZSCHUR_THREADS must be an integer, got %r" % raw)


def _guard(args):
    if args.n < 1 or args.r < 0:
        raise UsageError("need n >= 1 and r >= 0")
    count = acceptance.orbit_count(args.n, args.r)
    if count > args.cap:
        raise UsageError("S0(%d,%d) has %d orbits, above the cap of %d (raise it with --cap)"
                         % (args.n, args.r, count, args.cap))


def _matrix(text, args, what):
    try:
        A = parse_matrix(text)
    except ValueError as exc:
        raise UsageError("%s: %s" % (what, exc))
    if len(A) != args.n:
        raise UsageError("%s is %dx%d but n = %d" % (what, len(A), len(A), args.n))
    if total(A) != args.r:
        raise UsageError("%s has entry sum %d but r = %d" % (what, total(A), args.r))
    return A


def _composition(text, args, what):
    try:
        lam = parse_composition(text)
    except ValueError as exc:
        raise UsageError("%s: %s" % (what, exc))
    if len(lam) != args.n or sum(lam) != args.r:
        raise UsageError("%s = %s is not a composition of %d into %d parts"
                         % (what, text, args.r, args.n))
    return lam


def _report(args, results, failures):
    return {"command": args.command,
            "params": {k: v for k, v in sorted(vars(args).items())
                       if k not in ("command", "func", "format", "output", "cap")},
            "results": results, "failures": failures}


def _as_json(obj):
    return json.dumps(obj, sort_keys=True, indent=1)


def _classes_for(args):
    if getattr(args, "include_trivial", False):
        return enumerate_classes(args.n, args.r)
    return nontrivial_classes(args.n, args.r)


def _cartan_row(job):
    reps, i = job
    return [indec_hom_dim(reps[i], b) for b in reps]


def _ext_row(job):
    classes, n, i = job
    return [ext1(classes[i], b, n) if classes[i] != b else 0 for b in classes]


def _table(row_fn, jobs):
    """Rows in order; spread over ZSCHUR_THREADS worker processes if set."""
    workers = _threads()
    if workers == 1 or len(jobs) < 2:
        return [row_fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(row_fn, jobs))


def _render_table(args, classes, rows, name):
    if args.format == "csv":
        return export.table_csv(classes, rows), 0
    if args.format == "json":
        results = [{"classes": export.class_labels(classes), name: rows}]
        return _as_json(_report(args, results, [])), 0
    return export.table_text(classes, rows), 0


# -- commands -------------------------------------------------------------------

def cmd_dims(args):
    _guard(args)
    dim, dim_i, quo = dimension_formulas(args.n, args.r)
    classes = class_count(args.n, args.r)
    if args.format == "json":
        res = [{"dim": dim, "dim_I": dim_i, "dim_quotient": quo, "classes": classes}]
        return _as_json(_report(args, res, [])), 0
    return "dim=%d dim_I=%d dim_quotient=%d classes=%d" % (dim, dim_i, quo, classes), 0


def cmd_product(args):
    _guard(args)
    A = _matrix(args.A, args, "first matrix")
    B = _matrix(args.B, args, "second matrix")
    C = product(A, B)
    text = "0" if C is None else format_matrix(C)
    if args.format == "json":
        return _as_json(_report(args, [{"product": None if C is None else text}], [])), 0
    return text, 0


def cmd_degenerates(args):
    _guard(args)
    A = _matrix(args.A, args, "first matrix")
    B = _matrix(args.B, args, "second matrix")
    if ro(A) != ro(B) or co(A) != co(B):
        raise UsageError("the matrices have different row or column sums")
    ans = degenerates_to(A, B)
    if args.format == "json":
        return _as_json(_report(args, [{"degenerates": ans}], [])), 0
    return "true" if ans else "false", 0


def cmd_idempotents(args):
    _guard(args)
    if args.lam is not None:
        lams = [_composition(args.lam, args, "lambda")]
    else:
        lams = enumerate_compositions(args.n, args.r)
    results = []
    lines = []
    for lam in lams:
        for A, labels in sorted(distinct_idempotents(lam).items()):
            labs = [format_decomposition(m) for m in labels]
            results.append({"lambda": format_composition(lam), "matrix": format_matrix(A),
                            "labels": labs})
            lines.append("%s  %s  %s" % (format_composition(lam), format_matrix(A),
                                         " ".join(labs)))
    if args.format == "json":
        return _as_json(_report(args, results, [])), 0
    return "\n".join(lines), 0


def cmd_homdim(args):
    _guard(args)
    lam = _composition(args.lam, args, "lambda")
    mu = _composition(args.mu, args, "mu")
    if args.indec:
        d = indec_hom_dim(lam, mu)
    else:
        d = len(orbits_with(lam, mu))
    if args.format == "json":
        return _as_json(_report(args, [{"dim": d}], [])), 0
    return str(d), 0


def cmd_cartan(args):
    _guard(args)
    classes = _classes_for(args)
    reps = [representative(c, args.n) for c in classes]
    rows = _table(_cartan_row, [(reps, i) for i in range(len(reps))])
    return _render_table(args, classes, rows, "cartan")


def cmd_ext(args):
    _guard(args)
    classes = _classes_for(args)
    rows = _table(_ext_row, [(classes, args.n, i) for i in range(len(classes))])
    return _render_table(args, classes, rows, "ext1")


def cmd_decompose(args):
    _guard(args)
    lam = _composition(args.lam, args, "lambda")
    parts = decompose_projective(lam)
    if args.format == "json":
        return _as_json(_report(args, [{"summands": [format_composition(c) for c in parts]}],
                                [])), 0
    return " + ".join("P[%s]" % format_composition(c) for c in parts), 0


def cmd_quiver(args):
    _guard(args)
    classes = _classes_for(args)
    q = gabriel_quiver(args.n, args.r, classes)
    if args.dot:
        Path(args.dot).write_text(export.quiver_dot(q))
    if args.format == "json":
        return export.quiver_json(q), 0
    if args.format == "dot" or not args.dot:
        return export.quiver_dot(q).rstrip("\n"), 0
    return "wrote %d vertices and %d arrows to %s" % (len(q.vertices), len(q.arrows), args.dot), 0


def _load_relations(source):
    if os.path.exists(source):
        return load_relation_file(source)
    try:
        return parse_relation_text(fixture_text(source))
    except FileNotFoundError:
        raise UsageError("no relation file or bundled fixture named %r" % source)


def cmd_verify(args):
    _guard(args)
    try:
        rf = _load_relations(args.relations)
        env = bind(rf)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))
    for name, el in env.items():
        for A in list(el.terms)[:1]:
            if (len(A), total(A)) != (args.n, args.r):
                raise UsageError("label %s lives in (n, r) = (%d, %d), not (%d, %d)"
                                 % (name, len(A), total(A), args.n, args.r))
    rep = verify_file(rf, env)
    results, failures, lines = [], [], []
    for v in rep.verdicts:
        entry = {"relation": v.relation.text, "line": v.relation.line, "status": v.status,
                 "scalar": None if v.scalar is None else str(v.scalar)}
        results.append(entry)
        line = "%-12s %s" % (v.status, v.relation.text)
        if v.status == "proportional":
            line += "   [sides x %s]" % ", ".join(str(c) for c in v.scalars)
        lines.append(line)
        if v.status == "failed":
            failures.append("line %d: %s" % (v.relation.line, v.relation.text))
    if rep.scale is None:
        msg = "no global rescaling: " + "; ".join(
            p if isinstance(p, str) else p.text for p in rep.problems)
        failures.append(msg)
        lines.append(msg)
    else:
        changed = {k: str(v) for k, v in sorted(rep.scale.items()) if v != 1}
        lines.append("rescaling: " + (", ".join("%s*=%s" % kv for kv in changed.items())
                                      or "none needed"))
        bad = [v.relation.text for v in rep.rescaled if v.status != "exact"]
        if bad:
            failures.append("not exact after rescaling: %s" % bad)
        results.append({"rescaling": changed})
    status = 0 if not failures else 1
    if args.format == "json":
        return _as_json(_report(args, results, failures)), status
    lines.append("ok" if not failures else "FAILED")
    return "\n".join(lines), status


def cmd_check(args):
    if args.all:
        res = acceptance.run_criteria(args.tier)
    else:
        _guard(args)
        try:
            res = acceptance.suite(args.n, args.r, args.tier)
        except ValueError as exc:
            raise UsageError(str(exc))
    failures = ["%s: %s" % (r.key, f) for r in res for f in r.failures]
    status = 0 if not failures else 1
    if args.format == "json":
        return _as_json(_report(args, [r.as_dict() for r in res], failures)), status
    lines = [r.line() for r in res]
    lines.append("%d/%d checks passed" % (sum(r.ok for r in res), len(res)))
    return "\n".join(lines), status


# -- parser ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="zschur", description="Computations in 0-Schur algebras.")
    p.add_argument("--format", choices=["text", "json", "csv", "dot"], default="text")
    p.add_argument("--output", "-o", help="write output to this file instead of stdout")
    p.add_argument("--cap", type=int, default=acceptance.ORBIT_CAP,
                   help="refuse algebras with more orbits than this (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def cmd(name, func, help_text, nr=True):
        sp = sub.add_parser(name, help=help_text)
        if nr:
            sp.add_argument("n", type=int)
            sp.add_argument("r", type=int)
        sp.set_defaults(func=func)
        return sp

    cmd("dims", cmd_dims, "dimensions of S0(n,r), its ideal I and the quotient")
    sp = cmd("product", cmd_product, "product of two orbit matrices")
    sp.add_argument("A")
    sp.add_argument("B")
    sp = cmd("degenerates", cmd_degenerates, "whether A degenerates to B")
    sp.add_argument("A")
    sp.add_argument("B")
    sp = cmd("idempotents", cmd_idempotents, "distinct idempotent orbits")
    sp.add_argument("--lambda", dest="lam")
    sp = cmd("homdim", cmd_homdim, "dimension of Hom between projectives")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("--indec", action="store_true", help="use indecomposable projectives")
    sp = cmd("cartan", cmd_cartan, "Cartan matrix")
    sp.add_argument("--include-trivial", action="store_true")
    sp = cmd("decompose", cmd_decompose, "indecomposable summands of S k_lambda")
    sp.add_argument("lam")
    sp = cmd("quiver", cmd_quiver, "Gabriel quiver")
    sp.add_argument("--dot", metavar="PATH", help="write Graphviz DOT to PATH")
    sp.add_argument("--include-trivial", action="store_true")
    sp = cmd("ext", cmd_ext, "Ext^1 table between simple modules")
    sp.add_argument("--include-trivial", action="store_true")
    sp = cmd("verify", cmd_verify, "verify a relation file")
    sp.add_argument("--relations", required=True,
                    help="path to a relation file, or a bundled name such as b35")
    sp = sub.add_parser("check", help="acceptance checks at (n, r), or all criteria with --all")
    sp.add_argument("n", type=int, nargs="?")
    sp.add_argument("r", type=int, nargs="?")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--tier", choices=["quick", "full"], default="quick")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and not args.all and (args.n is None or args.r is None):
        parser.error("check needs n and r, or --all")
    if args.format == "csv" and args.command not in ("cartan", "ext"):
        parser.error("csv output is only available for cartan and ext")
    if args.format == "dot" and args.command != "quiver":
        parser.error("dot output is only available for quiver")
    try:
        text, status = args.func(args)
    except UsageError as exc:
        print("zschur: error: %s" % exc, file=sys.stderr)
        return 2
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
