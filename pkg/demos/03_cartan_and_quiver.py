"""Cartan matrix and Gabriel quiver of S0(3,5), with a DOT export."""

import sys

from zschur.combinatorics import format_composition
from zschur.export import quiver_dot, table_text
from zschur.modules import cartan_matrix, gabriel_quiver, nontrivial_classes, radical_check

n, r = 3, 5
classes = nontrivial_classes(n, r)
C = cartan_matrix(n, r, classes=classes)
print("Cartan matrix over the nontrivial classes (total %d):" % sum(map(sum, C)))
print(table_text(classes, C))

bad, _, alg = radical_check(n, r)
print("basic algebra over all %d classes: dimension %d; rad/rad^2 vs ext1 mismatches: %d"
      % (len(alg.classes), alg.dim, len(bad)))

q = gabriel_quiver(n, r, classes=classes)
dashed = sum(a.connecting for a in q.arrows)
print("%d arrows, %d of them connecting maps" % (len(q.arrows), dashed))
for a in q.arrows[:6]:
    print("  %s -> %s%s" % (format_composition(a.source), format_composition(a.target),
                            "  (connecting)" if a.connecting else ""))

out = sys.argv[1] if len(sys.argv) > 1 else None
if out:
    with open(out, "w") as fh:
        fh.write(quiver_dot(q))
    print("wrote", out)
