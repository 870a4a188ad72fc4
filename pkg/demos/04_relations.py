"""Checking quiver relations against the algebra itself.

The bundled files bind every arrow label to an element of S0(n, r) and list
word equations.  Printed sign conventions do not always fit together, so
each file is checked twice: first per relation, then for one global
rescaling of the arrows.
"""

from zschur.relations import fixture_text, parse_relation_text, verify_file

for name in ["s32", "ds32", "b35", "b35_consistent", "b45", "b45_consistent"]:
    rep = verify_file(parse_relation_text(fixture_text(name)))
    counts = {}
    for v in rep.verdicts:
        counts[v.status] = counts.get(v.status, 0) + 1
    print("%-15s %s  rescaling: %s" % (
        name, dict(sorted(counts.items())),
        "found" if rep.scale is not None else "impossible"))
    for v in rep.verdicts:
        if v.status == "failed":
            print("    failed:", v.relation.text)

# why b35 has no rescaling: the one non-exact relation pair
rep = verify_file(parse_relation_text(fixture_text("b35")))
for v in rep.verdicts:
    if v.status == "proportional":
        print("proportional:", v.relation.text, "side factors", [str(c) for c in v.scalars])
