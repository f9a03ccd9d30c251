"""Exact decision procedures for well-covered, W2, Cohen-Macaulay and
Gorenstein graphs and simplicial complexes, plus an exhaustive small-graph
survey verifying that for triangle-free graphs without isolated vertices
the three conditions (W2 membership, Gorensteinness, the second-power
criterion for the edge ideal) coincide.
"""

from ._kernels import BACKEND
from ._version import __version__
from .complexes import (
    SimplicialComplex,
    cone_apexes,
    core_of,
    core_vertices,
    delete_set,
    f_vector,
    faces,
    independence_complex,
    is_cone,
    is_pure,
    join,
    link,
    parse_facets,
    reduced_euler_characteristic,
    restrict,
    simplex,
    star,
)
from .criteria import (
    TheoremVerdict,
    check_theorem,
    is_cm_graph,
    is_cohen_macaulay,
    is_doubly_cm,
    is_eulerian,
    is_gorenstein,
    is_gorenstein_graph,
    is_second_power_cm,
)
from .graphs import (
    Graph,
    complete_graph,
    components,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    edge_localize,
    edge_localized_vertices,
    from_edge_list,
    generate,
    girth,
    girth4_planar,
    has_isolated_vertices,
    independence_number,
    induced_subgraph,
    is_alpha_critical,
    is_connected,
    is_in_w2,
    is_independent_set,
    is_triangle_free,
    is_well_covered,
    localize,
    localized_vertices,
    maximal_independent_sets,
    parse_edge_list,
    parse_graph6,
    path_graph,
    write_edge_list,
    write_graph6,
)
from .homology import (
    GF2,
    GF3,
    GF5,
    RATIONALS,
    FieldSpec,
    SparseMatrix,
    boundary_matrix,
    is_k_acyclic,
    matrix_rank,
    reduced_betti,
)
from .survey import build_record, report_to_csv, report_to_json, survey
