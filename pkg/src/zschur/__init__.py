"""Exact computations in 0-Schur algebras S0(n, r)."""

from .algebra import (
    AlgebraElement, GeneratorWord, degenerate_product, dimension_formulas,
    element_multiply, fundamental_mul, ideal_membership, product, word_decompose,
)
from .combinatorics import (
    collapse_c, enumerate_classes, enumerate_compositions, meet, refinement_le,
)
from .modules import (
    BasicAlgebra, cartan_matrix, decompose_projective, ext1, gabriel_quiver,
    hom_basis, indec_hom_dim, indec_projective, irr_map_element, projective_basis,
    radical_check,
)
from .orbits import (
    block_generic, classify_idempotent, corner_sums, degenerates_to, extreme_orbit,
    generator_orbit, idempotent_hasse, idempotent_orbit, is_closed,
)
from .relations import parse_relation_text, verify_file, verify_relation

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "BasicAlgebra", "GeneratorWord", "block_generic", "cartan_matrix",
    "classify_idempotent", "collapse_c", "corner_sums", "decompose_projective",
    "degenerate_product", "degenerates_to", "dimension_formulas", "element_multiply",
    "enumerate_classes", "enumerate_compositions", "ext1", "extreme_orbit",
    "fundamental_mul", "gabriel_quiver", "generator_orbit", "hom_basis",
    "ideal_membership", "idempotent_hasse", "idempotent_orbit", "indec_hom_dim",
    "indec_projective", "irr_map_element", "is_closed", "meet", "parse_relation_text",
    "product", "projective_basis", "radical_check", "refinement_le", "verify_file",
    "verify_relation", "word_decompose",
]
