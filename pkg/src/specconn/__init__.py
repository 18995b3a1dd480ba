"""Vertex-connectivity certificates from edge counts and spectral radii."""

from .connectivity import (
    ConnectivityReport,
    CutCertificate,
    connectivity_report,
    is_k_connected,
    is_maximally_connected,
    is_super_kappa,
    local_connectivity,
    minimum_cuts,
    vertex_connectivity,
)
from .errors import CapabilityError, ConvergenceError, DisconnectedGraphError, Graph6Error, GraphError
from .extremal import (
    FamilyParams,
    TfExtremalSpec,
    build_join_split,
    build_super_exception,
    build_tf_exception,
    build_tf_sharpness,
    is_spanning_subgraph_of_join_split,
    matches_join_split,
    matches_tf_exception,
)
from .graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    delete_edge,
    disjoint_union,
    is_connected,
    is_triangle_free,
    join,
    min_degree,
    path,
)
from .graph6 import decode, encode
from .harness import SweepConfig, SweepReport, enumerate_connected, run_sweep, sharpness_scan
from .isomorphism import are_isomorphic, find_isomorphism
from .spectral import (
    QuotientCubic,
    SpectralEstimate,
    SuperQuartic,
    cubic_largest_root,
    hong_bound,
    quartic_largest_root,
    spectral_radius,
    threshold_g,
)
from .theorems import THEOREM_IDS, TheoremVerdict, check, check_all

__version__ = "0.1.0"
