"""Exact workbench for Reed-Solomon deep-hole certificates.

Builds the symmetric-basis form of the top remainder coefficient attached
to a received word, searches for rational witness points proving words
are not deep holes, scans singular loci exhaustively at desk scale, and
evaluates the explicit nonexistence bounds in exact arithmetic.
"""

__version__ = "0.1.0"

from .gf import Felt, FieldSpec, field_from_order, find_irreducible, make_field, trace, units
from .poly import MVPoly, UPoly, elementary_symmetric, mv_eval, mv_partial, uni_distinct_roots, uni_rem
from .symmetric import (SymPoly, TopPoly, eval_hf, expand_to_vars, g_f, grad_hf,
                        grad_hf_horner, h_basis_explicit, h_basis_recursive,
                        jacobian_identities)
from .rscode import RSCode, Word, canonical_top, distance_to_code, is_deep_hole, word_from_poly
from .witness import (ASWitness, SearchResult, WitnessCert, artin_schreier_witness,
                      certificate_from_point, count_variety_points, equivalence_sweep,
                      scan_infinity_singular, scan_rational_singular_points,
                      search_good_point)
from .bounds import (BoundReport, SqrtVal, affine_lower_bound, c_sm_bound,
                     gl_estimate_terms, n1_bound, n2_bound, theorem_conditions,
                     useful_points_lower_bound)
