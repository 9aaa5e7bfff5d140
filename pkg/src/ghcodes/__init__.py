"""Generalized Hermitian algebraic-geometry codes over GF(2^r)."""

from .codes import (
    CodeReport,
    GHCode,
    dimension,
    dual_parameter,
    duality_sweep,
    generator_matrix,
    gh_code,
    goppa_bound,
    hermitian_code,
    omega_code_as_gh,
    self_flags,
)
from .curve import AffinePoint, CurveContext, MonomialExponent, hermitian_basis
from .distance import (
    DistanceResult,
    code_distance,
    example39_table,
    exact_min_distance,
    record_code_check,
    section5_table,
)
from .field import FieldContext, FieldElement
from .linalg import CodeMatrix, kernel_basis, matmul, parse_matrix, rank, read_matrix, rref, write_matrix
from .semigroup import (
    NumericalSemigroup,
    feng_rao_telescopic_low,
    feng_rao_telescopic_window,
    gh_generators,
    is_telescopic,
    telescopic_conductor_genus,
)

__version__ = "0.1.0"
