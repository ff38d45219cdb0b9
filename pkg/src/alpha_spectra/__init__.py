"""A_alpha spectral radii of mixed graphs and trees.

Mixed graphs carry directed arcs and undirected edges. This package builds
their A_alpha matrices, computes Perron roots, applies Kelmans
transformations, enumerates mixed trees up to isomorphism and checks the
sharp upper and lower bounds on the A_alpha spectral radius of mixed trees.
"""

from .bounds import (
    BoundsReport,
    BoundsRow,
    arc_tree_radius,
    lower_bound,
    lower_bound_k,
    star_quadratic_root,
    upper_bound,
    verify_bounds,
)
from .enumeration import (
    Poset,
    build_poset,
    classify_maximal,
    climb_to_maximal,
    enumerate_mixed_trees,
    is_maximal,
)
from .errors import *  # noqa: F401,F403
from .kelmans import (
    KelmansParams,
    TreeLegality,
    alpha_kelmans_params,
    graph_kelmans,
    graph_kelmans_params,
    matrix_kelmans,
    swap_isomorphism_check,
    tree_kelmans_legal,
)
from .mixed_graph import (
    CanonicalForm,
    MixedGraph,
    canonical_form,
    compare_dict,
    components,
    degree_sequence,
    diameter,
    distance,
    graph_from_json,
    graph_to_json,
    in_neighbors,
    is_isomorphic,
    is_mixed_star,
    is_mixed_tree,
    mixed_star,
    new_mixed_graph,
    out_neighbors,
    path_graph,
)
from .spectral import (
    CharPoly,
    Partition,
    a_alpha,
    adjacency_matrix,
    char_poly,
    char_poly_components,
    equitable_quotient,
    out_degree_matrix,
    quotient_matrix,
    rho_alpha,
    spectral_radius,
)

__version__ = "0.1.0"
