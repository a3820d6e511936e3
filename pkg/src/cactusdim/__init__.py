"""Exact vertex and edge metric dimension of cactus graphs."""

__version__ = "0.1.0"

from .cactus import (
    CactusDecomposition,
    Cycle,
    Region,
    Thread,
    ThreadProfile,
    branch_active_vertices,
    compute_B,
    compute_L,
    decompose_cactus,
    regional_set,
    thread_profile,
    unicyclic_region,
)
from .errors import (
    Disconnected,
    DuplicateEdge,
    InfeasibleParams,
    InternalInconsistency,
    MalformedLine,
    NotACactus,
    NotBiactiveBranchResolving,
    SelfLoop,
    TooLarge,
)
from .generators import extremal_family, random_cactus, random_tree
from .graph import Graph, all_pairs_distances, cyclomatic_number, parse_edge_list, vertex_edge_distance
from .oracle import (
    audit_bounds,
    is_generator_bruteforce,
    metric_dimension_bruteforce,
    zero_forcing_closure,
    zero_forcing_number,
)
from .resolving import (
    active_vertices,
    canonical_labeling,
    critical_incidences,
    critical_vertices,
    detect_configurations,
    geodesic_triple_exists,
    is_biactive,
    is_branch_resolving,
    is_generator_structural,
    s_path,
)
from .solver import DimensionReport, compute_dimensions, min_vertex_cover

