"""Monodromy, commutants, and reducing-subspace structure of finite
Blaschke products acting by multiplication on the Bergman space.

The pipeline: root-cluster polynomial solving (`cpoly`), product/branch
geometry (`blaschke`), certified fiber continuation (`tracking`), monodromy
permutations and their group invariants (`monodromy`), the commutant algebra
and its minimal projections (`commutant`), globally continued inverse
branches and the bundle unitary (`bundle`), the exact power-map oracle
(`znmodel`), and a JSON/CSV command line (`cli`).
"""

from .blaschke import (
    BlaschkeProduct,
    BranchData,
    default_taylor_length,
    from_spec,
    random_product,
    taylor,
    to_spec,
    truncated_matrix,
)
from .bundle import (
    CutDisc,
    GammaSample,
    QuadratureGrid,
    build_cut_disc,
    build_quadrature_grid,
    bundle_report,
    exact_inner,
    gamma_apply,
    isometry_details,
    partition_check,
    point_in_cut_disc,
    route_in_cut_disc,
    sigma_samples,
    sigma_values,
    verify_disjoint_images,
    verify_intertwining,
    verify_isometry,
)
from .commutant import (
    CommutantBasis,
    analyze_commutant,
    commutant_basis,
    is_commutative,
    minimal_projections,
    permutation_matrix,
)
from .config import DEFAULTS, Settings
from .cpoly import Poly, RootCluster, roots
from .errors import (
    AmbiguousMatching,
    BranchCountError,
    DegenerateClustering,
    DegenerateGenericElement,
    FiberCollision,
    GroupTooLarge,
    LoopConstructionFailed,
    NoConvergence,
    NonCommutative,
    PathBlocked,
    StepFloorReached,
    ToolkitError,
)
from .monodromy import (
    MonodromyRep,
    Permutation,
    boundary_product,
    compute_representation,
    group_closure,
    is_transitive,
    orbital_count,
)
from .tracking import (
    Arc,
    Fiber,
    Line,
    LoopSystem,
    PathSpec,
    build_loops,
    choose_base_point,
    initial_fiber,
    loop_permutation,
    separation_slope,
    track,
    track_with_trace,
    winding_number,
)
from .znmodel import ZnCase, cycle_projections, u_i_norm_check, zn_end_to_end, zn_projection

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatching",
    "Arc",
    "BlaschkeProduct",
    "BranchCountError",
    "BranchData",
    "CommutantBasis",
    "CutDisc",
    "DEFAULTS",
    "DegenerateClustering",
    "DegenerateGenericElement",
    "Fiber",
    "FiberCollision",
    "GammaSample",
    "GroupTooLarge",
    "Line",
    "LoopConstructionFailed",
    "LoopSystem",
    "MonodromyRep",
    "NoConvergence",
    "NonCommutative",
    "PathBlocked",
    "PathSpec",
    "Permutation",
    "Poly",
    "QuadratureGrid",
    "RootCluster",
    "Settings",
    "StepFloorReached",
    "ToolkitError",
    "ZnCase",
    "analyze_commutant",
    "boundary_product",
    "build_cut_disc",
    "build_loops",
    "build_quadrature_grid",
    "bundle_report",
    "choose_base_point",
    "commutant_basis",
    "compute_representation",
    "cycle_projections",
    "default_taylor_length",
    "exact_inner",
    "from_spec",
    "gamma_apply",
    "group_closure",
    "initial_fiber",
    "is_commutative",
    "is_transitive",
    "isometry_details",
    "loop_permutation",
    "minimal_projections",
    "orbital_count",
    "partition_check",
    "permutation_matrix",
    "point_in_cut_disc",
    "random_product",
    "roots",
    "route_in_cut_disc",
    "separation_slope",
    "sigma_samples",
    "sigma_values",
    "taylor",
    "to_spec",
    "track",
    "track_with_trace",
    "truncated_matrix",
    "u_i_norm_check",
    "verify_disjoint_images",
    "verify_intertwining",
    "verify_isometry",
    "winding_number",
    "zn_end_to_end",
    "zn_projection",
]
