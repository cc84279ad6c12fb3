"""Power graphs of finite groups: overfullness, edge-chromatic class, colorings.

The power graph of a finite group joins two distinct elements whenever one is
a power of the other. This package builds those graphs from explicit group
tables, decides overfullness and the edge-chromatic class exactly, and backs
every class decision with a machine-verified edge coloring: 1-factorization
restrictions for even orders, rotation schemes for odd complete graphs, and a
Kempe-chain edge-exchange transform for the dense odd cases, with exhaustive
search as the small-instance ground truth.
"""

from .coloring import (
    ColorConflict,
    ColoringError,
    EdgeColoring,
    KempeCycleError,
    KempePath,
    VerificationReport,
    base_rotation_coloring,
    coloring_from_mapping,
    coloring_to_csv,
    coloring_to_json,
    kempe_invert,
    kempe_path,
    parse_coloring_csv,
    parse_coloring_json,
    restrict_coloring,
    rotation_classes,
    round_robin_coloring,
    verify_assignment,
    verify_proper,
)
from .exchange import (
    ExchangeFailure,
    ExchangeState,
    ExchangeStepError,
    GroupColoring,
    STRATEGIES,
    color_power_graph,
    exchange_coloring,
    exchange_edge,
)
from .groups import (
    Factorization,
    Group,
    GroupSpecError,
    GroupTableError,
    construct_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    euler_phi,
    factorize,
    is_cyclic,
    is_power_of,
    load_table_file,
    load_table_text,
    quaternion_group,
    validate_table,
)
from .oracle import (
    ColorabilityResult,
    DEFAULT_NODE_BUDGET,
    OracleResult,
    exact_chromatic_index,
    is_k_edge_colorable,
    misra_gries_coloring,
)
from .overfull import (
    ClassPrediction,
    CoreWitness,
    GroupFacts,
    OverfullReport,
    core_class1_check,
    deficiency_report,
    is_overfull,
    predict_class,
)
from .powergraph import (
    Edge,
    Graph,
    build_power_graph,
    complement_edges,
    complete_graph,
    core_subgraph,
    full_degree_vertices,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    internal_vertex,
    make_edge,
    max_degree,
    display_vertex,
)
from .toolkit import Catalog, ClassReport, SurveyResult, generate_catalog, run_survey

__version__ = "0.1.0"
