"""Cohomology rings of real toric spaces.

Pipeline: a simplicial complex on m vertices plus an n x m characteristic
matrix over Z_2 determine a quotient of the real moment-angle complex by the
kernel subgroup; the cochain algebra model computes its cohomology over Z,
Q, or F_p, with an independent cellular oracle, a Koszul/Tor comparison, a
square-free small model, and a fan front-end for real toric varieties.
"""

from .chain_model import ChainModel, MElement
from .combinatorics import (
    SimplicialComplex,
    complex_document,
    parse_complex,
    prefix_sum,
    shuffle_exponent,
    support,
)
from .dga import (
    AElement,
    CochainAlgebra,
    SquarefreeModel,
    koszul_tor,
    restrict,
    space_cohomology,
    squarefree_model,
)
from .errors import CrossCheckError, ValidationError
from .group_data import (
    CharMatrix,
    assert_free_action,
    char_matrix_for_subgroup,
    free_action_violation,
    is_free_action,
    parse_char_matrix,
    parse_subgroup,
    subgroup_elements,
)
from .linalg import (
    CohomologyResult,
    GradedIntegerComplex,
    RingTable,
    SparseMat,
    cohomology,
    parse_coeff,
    ring_table,
    smith_normal_form,
    universal_coefficients_ok,
)
from .oracle import (
    CubeComplex,
    QuotientComplex,
    build_cellular_complex,
    cells_document,
    oracle_cohomology,
    quotient_complex,
)
from .toric import (
    COMPLETE_FANS,
    Fan,
    affine_space,
    blowup_p2,
    characteristic_data,
    component_count,
    fan_document,
    fan_suite,
    hirzebruch,
    maximality_check,
    maximality_diagnostic,
    parse_fan,
    product_p1_p1,
    projective_space,
    two_circles,
    variety_cohomology,
)

__version__ = "0.1.0"

__all__ = [
    "AElement",
    "COMPLETE_FANS",
    "ChainModel",
    "CharMatrix",
    "CochainAlgebra",
    "CohomologyResult",
    "CrossCheckError",
    "CubeComplex",
    "Fan",
    "GradedIntegerComplex",
    "MElement",
    "QuotientComplex",
    "RingTable",
    "SimplicialComplex",
    "SparseMat",
    "SquarefreeModel",
    "ValidationError",
    "affine_space",
    "assert_free_action",
    "blowup_p2",
    "build_cellular_complex",
    "cells_document",
    "char_matrix_for_subgroup",
    "characteristic_data",
    "cohomology",
    "complex_document",
    "component_count",
    "fan_document",
    "fan_suite",
    "free_action_violation",
    "hirzebruch",
    "is_free_action",
    "koszul_tor",
    "maximality_check",
    "maximality_diagnostic",
    "oracle_cohomology",
    "parse_char_matrix",
    "parse_coeff",
    "parse_complex",
    "parse_fan",
    "parse_subgroup",
    "prefix_sum",
    "product_p1_p1",
    "projective_space",
    "quotient_complex",
    "restrict",
    "ring_table",
    "shuffle_exponent",
    "smith_normal_form",
    "space_cohomology",
    "squarefree_model",
    "subgroup_elements",
    "support",
    "two_circles",
    "universal_coefficients_ok",
    "variety_cohomology",
]
