"""Resistance-based invariants, edge contraction identities and Wiener index enumeration
for metrized graphs with exact rational edge lengths."""

from .families import beta, circle, make_family, path, star
from .freetrees import CapExceeded, FreeTreeIter, enumerate_free_trees
from .graph import (
    BadEdgeId,
    BadIndex,
    BadParams,
    ContractionSeq,
    DisconnectedGraph,
    Edge,
    GraphError,
    MetrizedGraph,
    NonPositiveLength,
    SelfLoopContraction,
    VertexMap,
    build,
    contract_edge,
    delete_edge_interior,
)
from .graphio import read_graph, write_graph
from .identities import CATALOG_IDS, IdentityReport, PreconditionUnmet, verify, verify_catalog
from .invariants import (
    index_report,
    kirchhoff_index,
    r_gamma,
    wiener_index,
    x_invariant,
    xy_invariants,
    y_invariant,
)
from .inverse_wiener import (
    AttainedSet,
    BoundNeedsLargerTrees,
    BoundTooLargeForBudget,
    excluded_integers,
    f_value,
    forbidden_wiener,
    g_value,
)
from .kernels import BACKEND
from .resistance import (
    contraction_coefficient,
    edge_reduction,
    effective_resistance,
    numeric_mode,
    resistance_matrix,
    voltage,
)

__version__ = "0.1.0"
