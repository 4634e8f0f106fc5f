"""Exact verification of support tau-tilting pairs over bound quiver algebras
and the matching of their indecomposable summands."""

from .algebra import (
    AlgebraError,
    Arrow,
    BoundQuiverAlgebra,
    MalformedRelationError,
    NotFiniteDimensionalError,
    Path,
    Quiver,
    Relation,
    build_algebra,
)
from .bijection import (
    BijectionError,
    BijectionReport,
    CandidateSets,
    EdgeConditions,
    HallResult,
    MatchingEnumeration,
    NoPerfectMatchingError,
    VerificationError,
    all_matchings,
    build_report,
    candidate_sets,
    classify_edge,
    find_matching,
    hall_check,
    restricted_sets,
)
from .reps import (
    EndAlgebraInfo,
    Morphism,
    Representation,
    RepresentationError,
    direct_sum,
    dual_rep,
    end_info,
    hom_basis,
    hom_dim,
    injective,
    is_indecomposable,
    is_isomorphic,
    iso_witness,
    minimal_projective_presentation,
    projective,
    projective_cover_map,
    radical_submodule,
    simple,
    top_multiplicities,
    validate,
    zero_rep,
)
from .tau import (
    PairReport,
    RigidityVerdict,
    SupportPair,
    TauResult,
    as_projective_sum,
    is_tau_rigid,
    is_tau_rigid_pair,
    nakayama,
    tau,
    tau_minus,
    verify_support_pair,
)
from .workspace import WorkspaceError, WorkspaceSpec, parse_workspace

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "Arrow", "BoundQuiverAlgebra", "MalformedRelationError",
    "NotFiniteDimensionalError", "Path", "Quiver", "Relation", "build_algebra",
    "BijectionError", "BijectionReport", "CandidateSets", "EdgeConditions",
    "HallResult", "MatchingEnumeration", "NoPerfectMatchingError",
    "VerificationError", "all_matchings", "build_report", "candidate_sets",
    "classify_edge", "find_matching", "hall_check", "restricted_sets",
    "EndAlgebraInfo", "Morphism", "Representation", "RepresentationError",
    "direct_sum", "dual_rep", "end_info", "hom_basis", "hom_dim", "injective",
    "is_indecomposable", "is_isomorphic", "iso_witness",
    "minimal_projective_presentation", "projective", "projective_cover_map",
    "radical_submodule", "simple", "top_multiplicities", "validate", "zero_rep",
    "PairReport", "RigidityVerdict", "SupportPair", "TauResult",
    "as_projective_sum", "is_tau_rigid", "is_tau_rigid_pair", "nakayama",
    "tau", "tau_minus", "verify_support_pair",
    "WorkspaceError", "WorkspaceSpec", "parse_workspace",
]
