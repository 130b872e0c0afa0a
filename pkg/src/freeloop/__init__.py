"""freeloop: free-groupoid retracts of graph pushouts, with loop certificates.

The package builds, from a pushout of groupoids presented over a common
object set, an explicit free retract of computable rank, and applies it to
finite 1-complex models: two-piece decompositions yield pushout instances,
separation-property failures yield decompositions, and both yield concrete
noncontractible loops whose nontriviality is checkable by free reduction
alone.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import DomainError, SchemaError
from .graphs import (
    DirectedGraph,
    Forest,
    VertexPartition,
    components,
    euler_ranks,
    graph_pushout,
    graph_pushout_with_origins,
    spanning_forest,
    spanning_forest_containing,
    validate_graph,
)
from .retract import (
    GLetter,
    GWord,
    PushoutInstance,
    RetractReport,
    build_retract,
    certify_rank_at_least_one,
    check_connected,
    component_counts,
    include_f,
    rho,
    theorem_rank,
    witness,
)
from .vankampen import (
    Decomposition,
    GeneratorPresentation,
    PbpScenario,
    SpaceGraph,
    ZRetractCertificate,
    decomposition_to_instance,
    detect_z_retract,
    groupoid_generators,
    induced_subgraph,
    pbi_fails,
    pbp_to_decomposition,
    separates,
)
from .words import (
    FreeGroupElement,
    Letter,
    Word,
    compose,
    identity,
    invert,
    letter_ends,
    loop_coordinates,
    reduce,
    rehost,
    tree_path,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DomainError",
    "SchemaError",
    "DirectedGraph",
    "Forest",
    "VertexPartition",
    "components",
    "euler_ranks",
    "graph_pushout",
    "graph_pushout_with_origins",
    "spanning_forest",
    "spanning_forest_containing",
    "validate_graph",
    "GLetter",
    "GWord",
    "PushoutInstance",
    "RetractReport",
    "build_retract",
    "certify_rank_at_least_one",
    "check_connected",
    "component_counts",
    "include_f",
    "rho",
    "theorem_rank",
    "witness",
    "Decomposition",
    "GeneratorPresentation",
    "PbpScenario",
    "SpaceGraph",
    "ZRetractCertificate",
    "decomposition_to_instance",
    "detect_z_retract",
    "groupoid_generators",
    "induced_subgraph",
    "pbi_fails",
    "pbp_to_decomposition",
    "separates",
    "FreeGroupElement",
    "Letter",
    "Word",
    "compose",
    "identity",
    "invert",
    "letter_ends",
    "loop_coordinates",
    "reduce",
    "rehost",
    "tree_path",
    "__version__",
]
