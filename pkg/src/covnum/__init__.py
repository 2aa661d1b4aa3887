"""Monochromatic component covers of spanning edge-colorings.

Exact decomposition and cover solvers for complete r-partite r-uniform
hypergraphs, the general-hypergraph vertex-cover/matching side with the
translations between the two settings, named extremal constructions, and
desk-scale verification sweeps with per-claim forensics.
"""

__version__ = "0.1.0"

from .biclique_cover import BicliqueClassCheck, cover_biclique_k3, is_union_of_bicliques
from .claims import (
    ClaimReport,
    ClaimVerdict,
    check_claim_distinguishing,
    check_claim_distr,
    check_claim_rsame,
    check_claim_samepart,
    check_claim_smalldist,
    check_claim_t1diff,
    claim_suite,
    forensic_report,
)
from .constructions import (
    SpanningSample,
    cyclic_biclique,
    random_spanning_coloring,
    truncated_projective_plane,
)
from .cover import (
    CoverInstance,
    CoverResult,
    min_cover_exact,
    min_cover_greedy,
    validate_cover,
)
from .errors import GuardExceeded, RetryLimitExceeded
from .hypercore import (
    ComponentTable,
    EdgeColoring,
    Shape,
    VertexId,
    decompose,
    hamming,
    is_spanning,
    make_shape,
    vector_of,
)
from .ryser import (
    ColoredCompleteGraph,
    GeneralHypergraph,
    GraphComponents,
    cover_to_vertex_cover,
    graph_components,
    graph_cover_instance,
    is_intersecting,
    is_vertex_cover,
    max_matching,
    min_vertex_cover,
    to_colored_graph,
    to_partite_hypergraph,
)
from .sweep import SweepConfig, SweepResult, Violation, sweep

__all__ = [
    "BicliqueClassCheck",
    "ClaimReport",
    "ClaimVerdict",
    "ColoredCompleteGraph",
    "ComponentTable",
    "CoverInstance",
    "CoverResult",
    "EdgeColoring",
    "GeneralHypergraph",
    "GraphComponents",
    "GuardExceeded",
    "RetryLimitExceeded",
    "Shape",
    "SpanningSample",
    "SweepConfig",
    "SweepResult",
    "VertexId",
    "Violation",
    "check_claim_distinguishing",
    "check_claim_distr",
    "check_claim_rsame",
    "check_claim_samepart",
    "check_claim_smalldist",
    "check_claim_t1diff",
    "claim_suite",
    "cover_biclique_k3",
    "cover_to_vertex_cover",
    "cyclic_biclique",
    "decompose",
    "forensic_report",
    "graph_components",
    "graph_cover_instance",
    "hamming",
    "is_intersecting",
    "is_spanning",
    "is_union_of_bicliques",
    "is_vertex_cover",
    "make_shape",
    "max_matching",
    "min_cover_exact",
    "min_cover_greedy",
    "min_vertex_cover",
    "random_spanning_coloring",
    "sweep",
    "to_colored_graph",
    "to_partite_hypergraph",
    "truncated_projective_plane",
    "validate_cover",
    "vector_of",
]
