"""Splitting S k_lambda into indecomposable projectives."""

from zschur.combinatorics import format_composition
from zschur.modules import (
    decompose_projective, dim_projective_class, indec_projective, verify_complement,
)
from zschur.orbits import format_matrix, idempotent_hasse

for lam in [(2, 0, 3, 2), (2, 1, 3, 1)]:
    verts, edges = idempotent_hasse(lam)
    parts = decompose_projective(lam)
    print("lambda =", format_composition(lam))
    print("  %d distinct idempotents, %d covering relations" % (len(verts), len(edges)))
    print("  S k_lambda = " + " + ".join("P[%s]" % format_composition(c) for c in parts))
    print("  dimensions:", [dim_projective_class(c, len(lam)) for c in parts])

p = indec_projective((1, 2, 2))
print("P[1,2,2] has dimension", len(p.basis))
print("its complement idempotent x has", len(p.complement_idempotent.terms), "terms;",
      "two-sided:", p.two_sided)
print("contract failures:", verify_complement((1, 2, 2)) or "none")
for A in sorted(p.complement_idempotent.terms)[:3]:
    print("   ", p.complement_idempotent.terms[A], "*", format_matrix(A))
