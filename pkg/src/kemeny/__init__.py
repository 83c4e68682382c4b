"""Kemeny's constant of graphs and their complements.

Exact computation by three independent routes (spectral, effective
resistance, hitting times), proven bounds and closed forms for named
families, exhaustive small-graph forest oracles, Monte-Carlo estimators,
and a corpus scanner for the graph/complement scatter experiment.
"""

from .bounds import (
    BoundReport,
    DrgClassicalParams,
    PsiConstants,
    SrgParams,
    drg_classical_kemeny,
    hamming_kemeny,
    min_kemeny_degree_bound,
    psi_constants,
    srg_complement_params,
    srg_kemeny,
    two_clique_kemeny,
)
from .engine import (
    ComputationError,
    KemenyReport,
    compute_report,
    kemeny_eig,
    kemeny_mfpt,
    kemeny_resistance,
    kirchhoff_indices,
    mfpt_matrix,
    resistance_matrix,
    spanning_tree_count,
    two_forest_matrix,
    wiener_and_tree_kemeny,
)
from .families import FAMILIES, FamilySpec
from .graph import (
    Graph,
    GraphError,
    bridges,
    chain_of_graphs,
    complement,
    diameter,
    from_edge_list,
    is_connected,
    join,
    parse_edge_list,
)
from .graph6 import CodecError, emit_graph6, parse_graph6
from .scan import ScanRecord, ScanSummary, scan_lines, summarize, verify_bounds_sweep
from .walks import WalkEstimate, estimate_join_claim, estimate_kemeny, estimate_mfpt

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "GraphError",
    "CodecError",
    "ComputationError",
    "KemenyReport",
    "BoundReport",
    "PsiConstants",
    "SrgParams",
    "DrgClassicalParams",
    "FamilySpec",
    "FAMILIES",
    "ScanRecord",
    "ScanSummary",
    "WalkEstimate",
    "from_edge_list",
    "parse_edge_list",
    "parse_graph6",
    "emit_graph6",
    "complement",
    "join",
    "bridges",
    "chain_of_graphs",
    "is_connected",
    "diameter",
    "compute_report",
    "kemeny_eig",
    "kemeny_resistance",
    "kemeny_mfpt",
    "resistance_matrix",
    "mfpt_matrix",
    "spanning_tree_count",
    "two_forest_matrix",
    "kirchhoff_indices",
    "wiener_and_tree_kemeny",
    "psi_constants",
    "min_kemeny_degree_bound",
    "two_clique_kemeny",
    "srg_kemeny",
    "srg_complement_params",
    "drg_classical_kemeny",
    "hamming_kemeny",
    "scan_lines",
    "summarize",
    "verify_bounds_sweep",
    "estimate_mfpt",
    "estimate_kemeny",
    "estimate_join_claim",
]
