"""Exact calculator and atlas for collapsed link Floer homology of
genus-one nearly fibered links."""

from .atlas import (
    AtlasEntry,
    Classification,
    EntryCheck,
    RebuildReport,
    TableDiff,
    catalog,
    classify,
    rebuild_table,
    render_report,
    validate_catalog,
)
from .graded import (
    CollapsedGroup,
    EmptyGroupError,
    MultiGradedGroup,
    check_symmetry,
    collapse,
    disjoint_union,
    half_str,
    is_fibered,
    is_nearly_fibered,
    mirror,
    parse_half,
    rank_at,
    reverse_component,
    s_top,
    total_rank,
)
from .groupfile import GroupFileError, parse, serialize
from .hfunction import (
    AlexanderPolynomial,
    HFunction,
    alexander_from_text,
    cable_h_diagonal,
    h_from_alexander,
    torsion_coefficient,
)
from .surgery import (
    SurgeryMatrix,
    chain_matrix,
    det_exact,
    h1_order,
    matrix_from_text,
    matrix_to_text,
    smith_normal_form,
    solve_framing_constraint,
    zero_surgery_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderPolynomial",
    "AtlasEntry",
    "Classification",
    "CollapsedGroup",
    "EmptyGroupError",
    "EntryCheck",
    "GroupFileError",
    "HFunction",
    "MultiGradedGroup",
    "RebuildReport",
    "SurgeryMatrix",
    "TableDiff",
    "alexander_from_text",
    "cable_h_diagonal",
    "catalog",
    "chain_matrix",
    "check_symmetry",
    "classify",
    "collapse",
    "det_exact",
    "disjoint_union",
    "h1_order",
    "h_from_alexander",
    "half_str",
    "is_fibered",
    "is_nearly_fibered",
    "matrix_from_text",
    "matrix_to_text",
    "mirror",
    "parse",
    "parse_half",
    "rank_at",
    "rebuild_table",
    "render_report",
    "reverse_component",
    "s_top",
    "serialize",
    "smith_normal_form",
    "solve_framing_constraint",
    "torsion_coefficient",
    "total_rank",
    "validate_catalog",
    "zero_surgery_matrix",
]
