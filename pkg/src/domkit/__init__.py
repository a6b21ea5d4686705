"""domkit: graph domination toolkit.

Dominating-set solvers (exact and polynomial special cases), minimum
maximal matching on graphs with few maximal stable sets, line-graph
recognition and root reconstruction, and generators plus verifiers for
three hardness reductions.
"""

from .domset import (
    DominationCertificate,
    gamma_bounded,
    gamma_clawfree_diam2,
    gamma_exact,
    gamma_girth5_diam2,
    gamma_line_diam2,
    is_dominating_set,
    simplicial_reduce,
    solve_gamma,
)
from .errors import (
    ClassMismatchError,
    ContractViolationError,
    DomkitError,
    GadgetWiringError,
    InputError,
    InternalInvariantError,
    ParseError,
    ResourceLimitError,
    UnsupportedPatternError,
)
from .gadgets import (
    ReductionInstance,
    ReductionReport,
    reduce_cubic_clawfree,
    reduce_split_trianglefree,
    reduce_vc_k14,
    verify_reduction,
)
from .graphs import (
    Graph,
    VertexSet,
    complement,
    diameter,
    girth,
    induced_subgraph,
    parse_graph,
    to_edge_list,
)
from .matching import (
    BipartiteView,
    Matching,
    bipartite_max_matching,
    hall_violator,
    is_maximal_matching,
    maximum_matching,
)
from .mmm import (
    StableSetCandidate,
    enumerate_maximal_stable_sets,
    evaluate_stable_set,
    improve_stable_set,
    minimum_maximal_matching,
    run_mmm,
)
from .patterns import Pattern, contains_induced, pattern
from .recognition import (
    ClassReport,
    classify,
    find_split_partition,
    is_isomorphic,
    line_graph_of,
    root_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteView",
    "ClassMismatchError",
    "ClassReport",
    "ContractViolationError",
    "DominationCertificate",
    "DomkitError",
    "GadgetWiringError",
    "Graph",
    "InputError",
    "InternalInvariantError",
    "Matching",
    "ParseError",
    "Pattern",
    "ReductionInstance",
    "ReductionReport",
    "ResourceLimitError",
    "StableSetCandidate",
    "UnsupportedPatternError",
    "VertexSet",
    "bipartite_max_matching",
    "classify",
    "complement",
    "contains_induced",
    "diameter",
    "enumerate_maximal_stable_sets",
    "evaluate_stable_set",
    "find_split_partition",
    "gamma_bounded",
    "gamma_clawfree_diam2",
    "gamma_exact",
    "gamma_girth5_diam2",
    "gamma_line_diam2",
    "girth",
    "hall_violator",
    "improve_stable_set",
    "induced_subgraph",
    "is_dominating_set",
    "is_isomorphic",
    "is_maximal_matching",
    "line_graph_of",
    "maximum_matching",
    "minimum_maximal_matching",
    "parse_graph",
    "pattern",
    "reduce_cubic_clawfree",
    "reduce_split_trianglefree",
    "reduce_vc_k14",
    "root_graph",
    "run_mmm",
    "simplicial_reduce",
    "solve_gamma",
    "to_edge_list",
    "verify_reduction",
]
