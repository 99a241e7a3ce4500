"""facbal: facility-placement scores, balancedness oracles, and certificates on graphs."""

from ._kernels import BACKEND
from .generators import (
    ExpanderInstance,
    ReducedInstance,
    complete,
    cycle,
    dominating_set_reduction,
    empty,
    four_branch_tree,
    path,
    sample_gnd,
    star,
    unbalanced_expander,
)
from .graph import (
    UNREACHABLE,
    DegreeStats,
    DistanceVector,
    EdgeListFormatError,
    Graph,
    InfiniteRadiusError,
    NeighborhoodTable,
    bfs_distances,
    degree_stats,
    is_connected,
    neighborhood_table,
    radius,
    read_edgelist,
    write_edgelist,
)
from .oracle import (
    BalancednessVerdict,
    EnumerationCapError,
    UnbalancednessDecision,
    count_unbalanced_placements,
    is_graph_z_balanced,
    unbalancedness_decision,
)
from .scoring import (
    ClosestSet,
    Placement,
    ScoreReport,
    closest_sets,
    is_z_balanced_placement,
    score_bounds,
    scores,
)
from .seeding import rng_from_seed
from .spectral import (
    AcceptanceEstimate,
    MixingCheck,
    SpectralCertificate,
    dense_spectrum,
    estimate_acceptance,
    mixing_lemma_check,
    power_method_second,
    power_method_top,
    second_largest_in_magnitude,
    spectral_certificate,
)
from .traversal import (
    TraversalCertificate,
    traversal_certificate,
    verify_traversal_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "UNREACHABLE",
    "__version__",
    "AcceptanceEstimate",
    "BalancednessVerdict",
    "ClosestSet",
    "DegreeStats",
    "DistanceVector",
    "EdgeListFormatError",
    "EnumerationCapError",
    "ExpanderInstance",
    "Graph",
    "InfiniteRadiusError",
    "MixingCheck",
    "NeighborhoodTable",
    "Placement",
    "ReducedInstance",
    "ScoreReport",
    "SpectralCertificate",
    "TraversalCertificate",
    "UnbalancednessDecision",
    "bfs_distances",
    "closest_sets",
    "complete",
    "count_unbalanced_placements",
    "cycle",
    "degree_stats",
    "dense_spectrum",
    "dominating_set_reduction",
    "empty",
    "estimate_acceptance",
    "four_branch_tree",
    "is_connected",
    "is_graph_z_balanced",
    "is_z_balanced_placement",
    "mixing_lemma_check",
    "neighborhood_table",
    "path",
    "power_method_second",
    "power_method_top",
    "radius",
    "read_edgelist",
    "rng_from_seed",
    "sample_gnd",
    "score_bounds",
    "scores",
    "second_largest_in_magnitude",
    "spectral_certificate",
    "star",
    "traversal_certificate",
    "unbalanced_expander",
    "unbalancedness_decision",
    "verify_traversal_certificate",
    "write_edgelist",
]
