"""Strong-product structure toolkit.

Embeds planar and k-apex graphs into strong products of two apex-forests and
a small clique factor, with every structural guarantee re-verifiable; builds
and validates the extremal gadgets showing the clique factor cannot be traded
against a tree factor.
"""

from .decomposition import (
    PathDecomposition,
    TreeDecomposition,
    Violation,
    distension_path_decomposition,
    distension_tree_decomposition,
    exact_pathwidth,
    exact_treewidth,
    is_apex_forest,
    is_triangle_forest,
    validate_decomposition,
)
from .embedding import (
    ProductEmbedding,
    apex_product_structure,
    embedding_to_partitions,
    expand_matching_embedding,
    join_embed,
    k_apex_product_structure,
    partitions_to_embedding,
    validate_embedding,
)
from .errors import (
    CanonicalCapError,
    InternalInvariantError,
    NotKApexError,
    ParseError,
    PreconditionError,
    ProdstructError,
    SizeGuardError,
    TreewidthCapError,
)
from .graph import (
    Graph,
    Matching,
    VertexMap,
    VertexPartition,
    blocks,
    complete_graph,
    cone,
    connected_components,
    cycle_graph,
    empty_graph,
    is_connected,
    is_forest,
    is_tree,
    path_graph,
    quotient_by_matching,
    quotient_by_partition,
    singleton_partition,
    strong_product,
)
from .lowerbound import (
    CounterexampleStructure,
    DistensionGraph,
    RainbowK4,
    counterexample_graph,
    distension,
    double_fan,
    double_fan_rainbow_k4,
    fan,
    fan_path_decomposition,
    fan_tree_decomposition,
    fan_two_parts_witness,
    find_rainbow_k4,
    four_cliques,
    intersection_cap_violation,
    is_tree_partition,
    rainbow_k4_oracle,
    validate_distension,
)
from .partition import (
    contractible_matching,
    planar_contractible_matching,
    two_triangle_forest_partition,
)
from .planarity import is_planar

__version__ = "0.1.0"

__all__ = [
    "CanonicalCapError",
    "CounterexampleStructure",
    "DistensionGraph",
    "Graph",
    "InternalInvariantError",
    "Matching",
    "NotKApexError",
    "ParseError",
    "PathDecomposition",
    "PreconditionError",
    "ProdstructError",
    "ProductEmbedding",
    "RainbowK4",
    "SizeGuardError",
    "TreeDecomposition",
    "TreewidthCapError",
    "VertexMap",
    "VertexPartition",
    "Violation",
    "apex_product_structure",
    "blocks",
    "complete_graph",
    "cone",
    "connected_components",
    "contractible_matching",
    "counterexample_graph",
    "cycle_graph",
    "distension",
    "distension_path_decomposition",
    "distension_tree_decomposition",
    "double_fan",
    "double_fan_rainbow_k4",
    "embedding_to_partitions",
    "empty_graph",
    "exact_pathwidth",
    "exact_treewidth",
    "expand_matching_embedding",
    "fan",
    "fan_path_decomposition",
    "fan_tree_decomposition",
    "fan_two_parts_witness",
    "find_rainbow_k4",
    "four_cliques",
    "intersection_cap_violation",
    "is_apex_forest",
    "is_connected",
    "is_forest",
    "is_planar",
    "is_tree",
    "is_tree_partition",
    "is_triangle_forest",
    "join_embed",
    "k_apex_product_structure",
    "partitions_to_embedding",
    "path_graph",
    "planar_contractible_matching",
    "quotient_by_matching",
    "quotient_by_partition",
    "rainbow_k4_oracle",
    "singleton_partition",
    "strong_product",
    "two_triangle_forest_partition",
    "validate_decomposition",
    "validate_distension",
    "validate_embedding",
]
