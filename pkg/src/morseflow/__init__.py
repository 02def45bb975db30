"""Combinatorial analysis of gradient-like Morse flows on closed orientable
surfaces: ADE critical-point classification, dimension invariants of the
classifying manifolds, separatrix-graph validation, gradient-likeness
checking with exact energy witnesses, canonical codes, and exhaustive
enumeration of flows with few saddles.
"""

from .dims import DimensionReport, HomotopyType, report
from .enumeration import (
    ClassRecord,
    CountTable,
    EnumSpec,
    count_table,
    enumerate_classes,
    enumerate_flows,
    naive_enumerate_classes,
)
from .equiv import CanonicalCode, canonical_code, equivalent, relabel
from .flowgraph import (
    FlowGraph,
    build,
    euler_characteristic,
    face_coherence_check,
    faces,
    genus,
    poincare_hopf_check,
    reverse,
)
from .gradcheck import (
    CheckReport,
    EnergyAssignment,
    NotGradientLike,
    NotRealizable,
    SaddleDigraph,
    admits_gradient_like,
    build_energy,
    check_gradient_like,
    energy_violations,
    saddle_digraph,
)
from .singularity import (
    AdeLabel,
    FunctionProfile,
    ProfileCounts,
    SingularityClass,
    check_profile_consistency,
    classify,
    format_label,
    gradient_index,
    is_degenerate_extremum,
    parse_label,
    profile_counts,
)

__version__ = "0.1.0"

__all__ = [
    "AdeLabel",
    "CanonicalCode",
    "CheckReport",
    "ClassRecord",
    "CountTable",
    "DimensionReport",
    "EnergyAssignment",
    "EnumSpec",
    "FlowGraph",
    "FunctionProfile",
    "HomotopyType",
    "NotGradientLike",
    "NotRealizable",
    "ProfileCounts",
    "SaddleDigraph",
    "SingularityClass",
    "admits_gradient_like",
    "build",
    "build_energy",
    "canonical_code",
    "check_gradient_like",
    "check_profile_consistency",
    "classify",
    "count_table",
    "energy_violations",
    "enumerate_classes",
    "enumerate_flows",
    "equivalent",
    "euler_characteristic",
    "face_coherence_check",
    "faces",
    "format_label",
    "genus",
    "gradient_index",
    "is_degenerate_extremum",
    "naive_enumerate_classes",
    "parse_label",
    "poincare_hopf_check",
    "profile_counts",
    "relabel",
    "report",
    "reverse",
]
