"""Orbit matrices, generator words and the product they induce."""

from zschur.algebra import dimension_counts, dimension_formulas, product, word_decompose
from zschur.orbits import degenerates_to, extreme_orbit, format_matrix, idempotent_orbit

n, r = 3, 5
print("S0(%d,%d): dims from closed forms %s, by counting %s"
      % (n, r, dimension_formulas(n, r), dimension_counts(n, r)))

A = ((0, 2, 0), (2, 1, 0), (0, 0, 0))
B = ((1, 1, 0), (0, 2, 1), (0, 0, 0))
w = word_decompose(A)
print("A =", format_matrix(A), "is built by the word", w)
C = product(A, B)
print("A * B =", format_matrix(C) if C else 0)

# idempotents sit in a lattice ordered by degeneration
lam = (1, 2, 3)
o = idempotent_orbit(lam, (3,))
for m in [(2, 1), (1, 2), (1, 1, 1)]:
    om = idempotent_orbit(lam, m)
    print("o_%s = %s, above o_lambda: %s, squares to itself: %s"
          % (m, format_matrix(om), degenerates_to(o, om), product(om, om) == om))

# open times open stays open
x = extreme_orbit("open", (1, 2, 2), (2, 2, 1))
y = extreme_orbit("open", (2, 2, 1), (3, 1, 1))
print("open * open =", format_matrix(product(x, y)),
      "== open:", product(x, y) == extreme_orbit("open", (1, 2, 2), (3, 1, 1)))
