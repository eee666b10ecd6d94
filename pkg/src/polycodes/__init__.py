"""Polycyclic codes over product rings GF(q)^l.

Construction via component generator polynomials, annihilator duality,
Gray images under invertible block maps, exhaustive minimum distances and
CSS quantum-code parameters, plus a CLI and a bundled verification corpus.
"""

from .gf import Field, field_from_order, field_make
from .poly import Factorization, Poly, divisors, factor, gcd, is_squarefree, lagrange_idempotents, parse_poly, splits_distinct_linear
from .ring import IdempotentBasis, ProductRing, assemble, format_element, format_vector, make_basis, parse_ring_element, parse_ring_vector, project, quotient_splits_check, standard_basis, tensor_idempotents, verify_idempotent_basis
from .polycode import PolycyclicCode, ShiftSpec, code_cardinality, code_contains, code_is_monic, code_new, code_rank, count_codes, decompose, enumerate_codes, is_seq_closed, is_shift_closed, membership, poly_shift, seq_shift, shift_spec_of
from .duality import GramMatrix, ann_brute, ann_dual, ann_dual_space, bform, count_ann_lcd, count_ann_self_dual, count_ann_self_orthogonal, dual_relation_check, gram, gram_nondegenerate, gram_of, is_ann_dual_containing, is_ann_lcd, is_ann_self_dual, is_ann_self_orthogonal
from .gray import GraySpec, block_gram, gray_image, gray_spec, gray_weight, identity_gray, is_quasi_cyclic, is_quasi_sequential, phi, phi_inv, psi, psi_gram_identity_check, psi_inv, quasi_seq_shift, quasi_shift, symbol_weight
from .lincode import LinearCode, classify, dual, from_rows, is_lcd, min_distance, min_distance_gray_walk, weight_enumerator
from .quantum import QuantumParams, css, quantum_from_polycyclic, scaled_orthogonality

__version__ = "0.1.0"
