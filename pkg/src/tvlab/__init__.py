"""Combinatorial topology toolkit: matroid complexes, deleted joins and
products, GF(2) homology, non-pure shellability, and Tverberg-number
bound calculators."""

from .complexes import (
    FTriangle,
    SimplicialComplex,
    Vertex,
    complex_from_facets,
    connected_components,
    degree,
    deleted_join,
    deletion,
    euler_characteristic,
    f_triangle,
    join,
    link,
    points,
    reduced_euler,
    restriction,
    simplex,
    skeleton,
)
from .homology import (
    BettiVector,
    ChainComplexF2,
    InducedMap,
    betti_f2,
    betti_numbers,
    chain_complex,
    induced_involution,
    is_free_f2z2,
)
from .bounds import (
    BoundQuery,
    BoundReport,
    bound_report,
    ell,
    is_prime_power,
    npp_ceiling,
    tt_lower_bound,
    tt_upper_bound,
)
from .fundamental import GroupPresentation, pi1_presentation, try_trivialize
from .matroids import (
    Matroid,
    block_deleted_join,
    block_matroid,
    chessboard,
    direct_sum,
    disjoint_bases,
    has_coloops,
    is_matroid,
    uniform_matroid,
)
from .products import (
    CWProductComplex,
    conf2,
    deleted_product,
    homological_connectivity,
    product_betti,
    product_chain_complex,
)
from .shelling import (
    SearchResult,
    ShellingOrder,
    VertexColoring,
    balanced_b_skeleton,
    compatible_skeleton_shelling,
    covering_by_facet_dimension,
    homotopy_from_shelling,
    is_vertex_decomposable,
    search_shelling,
    shell_balanced_skeleton,
    shell_block_deleted_join,
    verify_shelling_intersection,
    verify_shelling_pairwise,
)
from .verification import run_registry

__version__ = "0.1.0"
