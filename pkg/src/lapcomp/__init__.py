"""Exact generating functions and lattice-point counts for the cones cut
out by graph Laplacian minors.

The pipeline: build a graph and one of its Laplacian minors
(`graph_core`), treat the minor as the constraint matrix of a simplicial
cone and enumerate its fundamental parallelepiped (`cone_engine`,
`exact_linalg`), read off rational generating functions, and specialize
them to trees (`tree_transforms`), cycles (`cycle_families`), conjecture
checks (`conjecture_lab`), and Ehrhart/reflexivity computations
(`ehrhart_reflexive`).  Everything is exact: arbitrary-precision integers
and fractions throughout.
"""

from .cone_engine import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FppPointSet,
    IntegerPointTransform,
    SimplicialCone,
    UnivariateRationalGF,
    brute_force_count,
    cone_from_constraints,
    fpp_points,
    integer_point_transform,
    series_expand,
    specialize,
)
from .conjecture_lab import (
    CyclicCheckReport,
    CyclicClass,
    NearSymmetryReport,
    ShiftProfileEntry,
    check_conjecture_cyclic,
    check_near_symmetry,
    compositions,
    count_cyclic_classes,
    cyclic_classes,
    integral_shift_profile,
    profile_entry_for,
)
from .cycle_families import (
    CongruenceSystem,
    ModStructureReport,
    cycle_inverse_closed,
    cycle_multivariate_gf,
    cycle_system,
    leafed_gf,
    leafed_inverse_closed,
    leafed_system,
    mod_structure,
    phi_histogram_dp,
    phi_zero_histogram_dp,
    solve_Sn,
)
from .ehrhart_reflexive import (
    HalfspaceReport,
    HStarData,
    LatticeSimplex,
    NormalityReport,
    build_slice_simplex,
    dilate_count,
    dilate_points,
    h_star,
    interior_count,
    interior_point,
    normality_probe,
    reflexivity_by_halfspaces,
    reflexivity_by_interior_counts,
)
from .exact_linalg import (
    IntegerMatrix,
    RationalMatrix,
    SingularMatrixError,
    adjugate_pair,
    determinant,
    inverse,
)
from .graph_core import (
    MAX_VERTICES,
    Graph,
    GraphError,
    LaplacianMinor,
    build_family,
    complete_graph,
    cycle_graph,
    family_from_string,
    incidence_matrix,
    incidence_subminor,
    kary_tree,
    laplacian,
    laplacian_minor,
    leafed_cycle_graph,
    parse_graph,
    path_graph,
    spanning_tree_count,
)
from .tree_transforms import (
    BlockProblem,
    TreeInverse,
    block_reduction,
    block_reduction_inverse,
    incidence_inverse,
    kary_exponent,
    kary_gf,
    q_integer,
    random_tree,
    tree_from_pruefer,
    tree_gf,
    tree_gf_exponents,
    tree_inverse_combinatorial,
    verify_tree_identities,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # linear algebra
    "IntegerMatrix", "RationalMatrix", "SingularMatrixError",
    "determinant", "inverse", "adjugate_pair",
    # graphs
    "MAX_VERTICES", "Graph", "GraphError", "LaplacianMinor", "build_family",
    "family_from_string", "path_graph", "cycle_graph", "leafed_cycle_graph",
    "kary_tree", "complete_graph", "laplacian", "laplacian_minor",
    "incidence_matrix", "incidence_subminor", "spanning_tree_count",
    "parse_graph",
    # cones
    "SimplicialCone", "FppPointSet", "IntegerPointTransform",
    "UnivariateRationalGF", "BudgetExceededError", "DEFAULT_BUDGET",
    "cone_from_constraints", "fpp_points", "integer_point_transform",
    "specialize", "series_expand", "brute_force_count",
    # trees
    "TreeInverse", "BlockProblem", "tree_inverse_combinatorial",
    "incidence_inverse", "block_reduction", "block_reduction_inverse",
    "tree_gf_exponents", "tree_gf", "q_integer", "kary_exponent", "kary_gf",
    "tree_from_pruefer", "random_tree", "verify_tree_identities",
    # cycles
    "CongruenceSystem", "ModStructureReport", "cycle_system",
    "leafed_system", "cycle_inverse_closed", "leafed_inverse_closed",
    "mod_structure", "solve_Sn", "phi_histogram_dp",
    "phi_zero_histogram_dp", "leafed_gf", "cycle_multivariate_gf",
    # conjectures
    "CyclicClass", "ShiftProfileEntry", "CyclicCheckReport",
    "NearSymmetryReport", "compositions", "cyclic_classes",
    "count_cyclic_classes", "integral_shift_profile", "profile_entry_for",
    "check_conjecture_cyclic", "check_near_symmetry",
    # Ehrhart
    "LatticeSimplex", "HStarData", "HalfspaceReport", "NormalityReport",
    "build_slice_simplex", "interior_point", "reflexivity_by_halfspaces",
    "dilate_points", "dilate_count", "interior_count", "h_star",
    "reflexivity_by_interior_counts", "normality_probe",
]
