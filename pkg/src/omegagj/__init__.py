"""Exact staged Gauss-Jordan elimination of row-finite infinite matrices.

Rows are reduced one at a time with rightmost pivots; the package tracks
the passage matrix, reordered quasi-Hermite prefixes, stabilization
certificates, and fully symbolic solutions of the associated linear
systems over the rationals or a prime field.
"""

from .canon import (
    FormReport,
    NonIncreasingLengths,
    NotReduced,
    fulkerson_recurrence,
    is_hermite_basis,
    is_lref,
    is_lrrf,
    is_qhf,
    is_uref,
    is_urrf,
    rank_nullity,
    right_set,
    verify_row_equivalence,
)
from .engine import (
    CertificateViolation,
    EliminationState,
    IndexOutOfRange,
    PivotCollision,
    PivotFloor,
    certified_stable,
    nullspace_basis,
    prefix_stability,
    run_to,
    snapshot,
    step,
    step_lps,
)
from .matrices import (
    BUILTINS,
    DuplicateOffset,
    MonomialOrdering,
    RowFiniteMatrix,
    make_explicit,
    make_stencil,
)
from .reorder import (
    DuplicateLength,
    ReorderState,
    extended_run,
    one_shot_state,
    qhf_prefix_stability,
    reorder_prefix,
)
from .rows import Row, axpy, dense_width, maxs, normalize_rightmost, parse_row, zeta
from .scalars import (
    RATIONAL,
    DivisionByZero,
    Field,
    FieldMismatch,
    LinForm,
    Scalar,
)
from .solver import (
    SolveResult,
    SymbolicSequence,
    consistency_constraints,
    general_solution,
    homogeneous_solution,
    particular_solution,
    transform_rhs,
    verify_solution,
)

__all__ = [
    "BUILTINS",
    "CertificateViolation",
    "DivisionByZero",
    "DuplicateLength",
    "DuplicateOffset",
    "EliminationState",
    "Field",
    "FieldMismatch",
    "FormReport",
    "IndexOutOfRange",
    "LinForm",
    "MonomialOrdering",
    "NonIncreasingLengths",
    "NotReduced",
    "PivotCollision",
    "PivotFloor",
    "RATIONAL",
    "ReorderState",
    "Row",
    "RowFiniteMatrix",
    "Scalar",
    "SolveResult",
    "SymbolicSequence",
    "axpy",
    "certified_stable",
    "consistency_constraints",
    "dense_width",
    "extended_run",
    "fulkerson_recurrence",
    "general_solution",
    "homogeneous_solution",
    "is_hermite_basis",
    "is_lref",
    "is_lrrf",
    "is_qhf",
    "is_uref",
    "is_urrf",
    "make_explicit",
    "make_stencil",
    "maxs",
    "normalize_rightmost",
    "nullspace_basis",
    "one_shot_state",
    "parse_row",
    "particular_solution",
    "prefix_stability",
    "qhf_prefix_stability",
    "rank_nullity",
    "reorder_prefix",
    "right_set",
    "run_to",
    "snapshot",
    "step",
    "step_lps",
    "transform_rhs",
    "verify_row_equivalence",
    "verify_solution",
    "zeta",
]

__version__ = "0.1.0"
