"""Exact metric dimension, its variants and their fault-tolerant versions."""

from .constructions import (
    ConstructionError,
    LabeledFamily,
    build_A,
    build_D_box,
    build_H,
    build_I,
    build_J,
    ft_bound,
    ft_construct,
    ft_construct_edge,
    ft_construct_metric,
    ft_construct_truncated,
    pendant_extend,
)
from .ek import (
    SubsetFamily,
    UnionCollision,
    clique_to_family,
    ek_bruteforce,
    family_to_graph,
    find_union_collision,
    is_union_distinct,
    verify_mc_ek,
)
from .graph import (
    INF,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    all_pairs_distances,
    clique_number,
    enumerate_labeled_graphs,
    graph_from_edge_list,
    graph_from_graph6,
    graph_to_edge_list,
    graph_to_graph6,
    max_clique,
    read_graph,
    write_graph,
)
from .resolve import (
    ADJACENCY,
    ALL_VARIANTS,
    EDGE_METRIC,
    LOCAL,
    VERTEX_METRIC,
    Certificate,
    DistinguishMatrix,
    InfeasibleError,
    Kind,
    VariantSpec,
    build_distinguish_matrix,
    count_at_distance,
    count_within_distance,
    degree_bound,
    is_fault_tolerant,
    is_resolving,
    item_vector,
    landmark_degree_report,
    mdim,
    min_fault_tolerant,
    min_multicover,
    min_resolving,
    parse_variant,
    truncated,
)

__version__ = "0.1.0"
