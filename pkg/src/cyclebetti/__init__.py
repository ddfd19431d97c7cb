"""Exact Betti numbers of cycle graphs and the tableau bijection behind them.

The package computes graded Betti numbers of cycle graphs by brute force
over vertex-subset restrictions, enumerates standard Young tableaux of
hook-plus-column shapes, and realises the bijection between those tableaux
and marked vertex subsets, in both directions, with exhaustive verifiers.
All arithmetic is exact.
"""

from .bijection import (
    BijectionReport,
    format_marked_subset,
    marked_subset_to_tableau,
    tableau_to_marked_subset,
    transpose_duality_holds,
    verify_bijection,
)
from .cycle import (
    CycleRestriction,
    MarkedSubset,
    admissible_markers,
    cycle_edges,
    marked_subsets,
    marker_set,
    restrict,
)
from .errors import (
    DomainError,
    ImpossibleBranchError,
    InvalidCycleError,
    InvalidMarkedSubsetError,
    TableauParseError,
    TableauValidationError,
    UndefinedMarkerError,
    VertexRangeError,
    WrongShapeError,
)
from .hochster import MAX_CYCLE_SIZE, BettiTable, betti, betti_table, linear_strand
from .homology import (
    IntMatrix,
    SimplicialComplex,
    boundary_matrix,
    cycle_complex,
    graph_homology_oracle,
    is_zero_matrix,
    mat_mul,
    matrix_rank,
    nullity,
    reduced_betti_dim,
    restriction_complex,
)
from .tableaux import (
    Shape,
    Tableau,
    enumerate_standard_tableaux,
    format_tableau,
    hook_length_count,
    hook_shape,
    parse_tableau,
    transpose,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BijectionReport",
    "CycleRestriction",
    "DomainError",
    "ImpossibleBranchError",
    "IntMatrix",
    "InvalidCycleError",
    "InvalidMarkedSubsetError",
    "MAX_CYCLE_SIZE",
    "MarkedSubset",
    "Shape",
    "SimplicialComplex",
    "Tableau",
    "TableauParseError",
    "TableauValidationError",
    "UndefinedMarkerError",
    "VertexRangeError",
    "WrongShapeError",
    "admissible_markers",
    "betti",
    "betti_table",
    "boundary_matrix",
    "cycle_complex",
    "cycle_edges",
    "enumerate_standard_tableaux",
    "format_marked_subset",
    "format_tableau",
    "graph_homology_oracle",
    "hook_length_count",
    "hook_shape",
    "is_zero_matrix",
    "linear_strand",
    "marked_subset_to_tableau",
    "marked_subsets",
    "marker_set",
    "mat_mul",
    "matrix_rank",
    "nullity",
    "parse_tableau",
    "reduced_betti_dim",
    "restrict",
    "restriction_complex",
    "tableau_to_marked_subset",
    "transpose",
    "transpose_duality_holds",
    "verify_bijection",
]
