"""Exact computations in the Picard lattice of blowups of the plane.

The package decides nef-cone membership on the K-nonpositive side by
reducing classes into an explicit rational polyhedral fundamental cone
under the Cremona group, enumerates (-1)-classes, and analyzes the
fundamental cone itself: Cartan matrices, Coxeter diagrams, extremal
rays, and finite-volume criteria.  All arithmetic is integer/rational.
"""

from .curves import (
    Decomposition,
    MinusOneClass,
    decompose_inequality,
    enumerate_minus_one,
    is_minus_one_class,
)
from .lattice import (
    LightConePosition,
    PicClass,
    RationalRay,
    anticanonical_class,
    basis_vector,
    canonical_class,
    degree,
    light_cone_position,
    pairing,
    primitive,
)
from .nef import (
    NEF,
    NOT_NEF,
    NefVerdict,
    curve_check,
    fundamental_cone,
    is_nef_K_nonpositive,
)
from .polytopes import (
    AngleClass,
    CartanEntry,
    ConePolytope,
    CoxeterCheck,
    CoxeterDiagram,
    DiagramEdge,
    Halfspace,
    MembershipResult,
    Ray,
    RegionRReport,
    VertexFormulaReport,
    boundary_rays,
    build_P,
    build_P_minus,
    build_P_tilde,
    cartan_matrix,
    classify_angle,
    coxeter_diagram,
    extremal_rays,
    finite_volume,
    gram_matrix,
    is_coxeter,
    is_implied,
    membership,
    redundant_constraints,
    render_cartan_entry,
    verify_region_R,
    verify_vertex_formulas,
    vertex_formula_families,
)
from .verify import CheckResult, VerificationReport, check_names, run_suite
from .weyl import (
    KPositiveError,
    OrbitResult,
    Phi,
    ReductionResult,
    Sigma,
    WeylWord,
    all_generators,
    apply_generator,
    apply_word,
    fixed_hyperplane_normal,
    orbit,
    reduce_class,
    sort_coordinates,
)

__version__ = "0.1.0"

__all__ = [
    "PicClass",
    "RationalRay",
    "LightConePosition",
    "pairing",
    "basis_vector",
    "canonical_class",
    "anticanonical_class",
    "degree",
    "light_cone_position",
    "primitive",
    "Phi",
    "Sigma",
    "WeylWord",
    "ReductionResult",
    "OrbitResult",
    "KPositiveError",
    "apply_generator",
    "apply_word",
    "fixed_hyperplane_normal",
    "sort_coordinates",
    "reduce_class",
    "all_generators",
    "orbit",
    "is_minus_one_class",
    "enumerate_minus_one",
    "decompose_inequality",
    "Decomposition",
    "MinusOneClass",
    "Halfspace",
    "ConePolytope",
    "MembershipResult",
    "AngleClass",
    "CartanEntry",
    "CoxeterCheck",
    "CoxeterDiagram",
    "DiagramEdge",
    "Ray",
    "VertexFormulaReport",
    "RegionRReport",
    "build_P_tilde",
    "build_P",
    "build_P_minus",
    "membership",
    "gram_matrix",
    "classify_angle",
    "cartan_matrix",
    "render_cartan_entry",
    "is_coxeter",
    "coxeter_diagram",
    "extremal_rays",
    "boundary_rays",
    "finite_volume",
    "is_implied",
    "redundant_constraints",
    "vertex_formula_families",
    "verify_vertex_formulas",
    "verify_region_R",
    "NEF",
    "NOT_NEF",
    "NefVerdict",
    "fundamental_cone",
    "is_nef_K_nonpositive",
    "curve_check",
    "CheckResult",
    "VerificationReport",
    "run_suite",
    "check_names",
    "__version__",
]
