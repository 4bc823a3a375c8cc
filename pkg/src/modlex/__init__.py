"""modlex: modular decomposition, graph products, and distance preservation.

A small numpy-backed library for analyzing finite simple graphs through
their modular structure: maximal modular partitions and minimal
quotients, the generalised lexicographic product that inverts them,
Cartesian products, and certificate-producing deciders for the
distance-preserving (dp) and sequentially-distance-preserving (sdp)
properties.
"""

from .budget import Budget
from .errors import (
    BudgetExceededError,
    CertificateError,
    EdgeListParseError,
    ModlexError,
    PreconditionError,
)
from .graph import (
    Graph,
    VertexSubset,
    are_isomorphic,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    distances,
    induced,
    is_connected,
    neighborhood,
    neighborhood_of_set,
    path_graph,
)
from .isometry import (
    DeletionSets,
    DpCertificate,
    NdpReport,
    SdpOrder,
    deletion_sets,
    geodesic,
    is_dp,
    is_isometric,
    ndp_set,
    sdp_order,
)
from .modular import (
    ModularPartition,
    QuotientGraph,
    has_k2_quotient,
    is_module,
    is_prime,
    maximal_modular_partition,
    minimal_quotient,
    modular_partition,
    quotient,
    smallest_module_containing,
)
from .products import (
    GraphFamily,
    ProductGraph,
    cartesian_product,
    generalized_lex_product,
    lex_distance,
    lex_product,
    project_pi,
)
from .dp import (
    NonDpInterval,
    cartesian_deletion_rule,
    cartesian_dp_certificate,
    constant_size_dp_criterion,
    construct_product_dp_certificate,
    isometry_transfer_check,
    lift_sdp_order,
    no_long_induced_cycle,
    non_dp_intervals,
    product_dp_criterion,
)
from .datasets import dataset_names, fig1_family, fig2_family, load_dataset
from .io import emit_dot, emit_edge_list, parse_edge_list

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "CertificateError",
    "DeletionSets",
    "DpCertificate",
    "EdgeListParseError",
    "Graph",
    "GraphFamily",
    "ModlexError",
    "ModularPartition",
    "NdpReport",
    "NonDpInterval",
    "PreconditionError",
    "ProductGraph",
    "QuotientGraph",
    "SdpOrder",
    "VertexSubset",
    "are_isomorphic",
    "build_graph",
    "cartesian_deletion_rule",
    "cartesian_dp_certificate",
    "cartesian_product",
    "complement",
    "complete_graph",
    "constant_size_dp_criterion",
    "construct_product_dp_certificate",
    "cycle_graph",
    "dataset_names",
    "deletion_sets",
    "diameter",
    "distances",
    "emit_dot",
    "emit_edge_list",
    "fig1_family",
    "fig2_family",
    "generalized_lex_product",
    "geodesic",
    "has_k2_quotient",
    "induced",
    "is_connected",
    "is_dp",
    "is_isometric",
    "is_module",
    "is_prime",
    "isometry_transfer_check",
    "lex_distance",
    "lex_product",
    "lift_sdp_order",
    "load_dataset",
    "maximal_modular_partition",
    "minimal_quotient",
    "modular_partition",
    "ndp_set",
    "neighborhood",
    "neighborhood_of_set",
    "no_long_induced_cycle",
    "non_dp_intervals",
    "parse_edge_list",
    "path_graph",
    "product_dp_criterion",
    "project_pi",
    "quotient",
    "sdp_order",
    "smallest_module_containing",
]
