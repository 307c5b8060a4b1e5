"""Rainbow path and cycle search over graph collections.

A collection is a family of graphs sharing one vertex set; a path is rainbow
when its edges receive pairwise distinct colors, each edge present in the
graph of its color. The package searches for rainbow paths and cycles,
certifies rainbow panconnectivity, recognizes the extremal families where it
fails, and replays the constructive arguments behind the degree-threshold
results.
"""
from .core import (
    MAX_COLORS,
    MAX_VERTICES,
    ColoredCycle,
    ColoredPath,
    GraphCollection,
    SimpleGraph,
    SubCollectionView,
    as_view,
    build_graph,
    check_colored_cycle,
    check_colored_path,
    collection_min_degree,
    min_degree,
    restrict,
    verify_colored_cycle,
    verify_colored_path,
)
from .io import (
    InstanceFormatError,
    format_instance,
    parse_instance,
    read_instance,
    write_instance,
)
from .search import (
    BudgetExceeded,
    SearchBudget,
    assign_colors,
    default_budget,
    find_rainbow_cycle,
    find_rainbow_ham_path,
    find_rainbow_path,
    rainbow_distance,
)
from .analysis import (
    ExtremalWitness,
    HamConnectivityReport,
    ObstructionClassification,
    PairReport,
    PanconnectivityCertificate,
    Theorem15Result,
    classify_ham_path_obstruction,
    is_panconnected_single,
    is_rainbow_ham_connected,
    is_rainbow_panconnected,
    recognize_F_family,
    recognize_join_partition,
    recognize_two_cliques,
    verify_theorem_1_5,
)
from .constructions import (
    BranchTrace,
    ConstructiveReport,
    EndpointBoundReport,
    HypothesisViolation,
    constructive_panconnect,
    endpoint_bound_report,
    five_vertex_4path,
    ham_path_k_path,
    join_partition_k_path,
    near_cycle_k_path,
    rotation_k_path,
    two_clique_k_path,
)
from .generate import (
    GenSpec,
    gen_cor23_obstruction,
    gen_extremal_F,
    gen_lemma_shape,
    gen_random_collection,
    generate,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_COLORS",
    "MAX_VERTICES",
    "ColoredCycle",
    "ColoredPath",
    "GraphCollection",
    "SimpleGraph",
    "SubCollectionView",
    "as_view",
    "build_graph",
    "check_colored_cycle",
    "check_colored_path",
    "collection_min_degree",
    "min_degree",
    "restrict",
    "verify_colored_cycle",
    "verify_colored_path",
    "InstanceFormatError",
    "format_instance",
    "parse_instance",
    "read_instance",
    "write_instance",
    "BudgetExceeded",
    "SearchBudget",
    "assign_colors",
    "default_budget",
    "find_rainbow_cycle",
    "find_rainbow_ham_path",
    "find_rainbow_path",
    "rainbow_distance",
    "ExtremalWitness",
    "HamConnectivityReport",
    "ObstructionClassification",
    "PairReport",
    "PanconnectivityCertificate",
    "Theorem15Result",
    "classify_ham_path_obstruction",
    "is_panconnected_single",
    "is_rainbow_ham_connected",
    "is_rainbow_panconnected",
    "recognize_F_family",
    "recognize_join_partition",
    "recognize_two_cliques",
    "verify_theorem_1_5",
    "BranchTrace",
    "ConstructiveReport",
    "EndpointBoundReport",
    "HypothesisViolation",
    "constructive_panconnect",
    "endpoint_bound_report",
    "five_vertex_4path",
    "ham_path_k_path",
    "join_partition_k_path",
    "near_cycle_k_path",
    "rotation_k_path",
    "two_clique_k_path",
    "GenSpec",
    "gen_cor23_obstruction",
    "gen_extremal_F",
    "gen_lemma_shape",
    "gen_random_collection",
    "generate",
    "__version__",
]
