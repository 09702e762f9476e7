"""Matroid chordality: modular and round flats, rotunda graphs, rotunda trees, tree-width."""
from .catalog import by_name, graph_catalog, matroid_of, named_fixtures
from .classification import (
    ChordalityProfile,
    ModularChain,
    chords,
    classify,
    is_c_chordal,
    is_saturated,
    is_sss,
    is_supersolvable,
    modular_chains,
    strong_chord_witness,
)
from .correspondence import (
    ComplianceMap,
    ComplianceReport,
    check_compliance,
    check_rcg_equals_rotunda_graph,
    compliant_graph,
    graph_for_matroid,
    matroid_for_graph,
    rcg_to_rotunda_graph_roundtrip,
    two_connectivize,
)
from .errors import (
    EnumerationBoundError,
    InputError,
    InvalidMatroidError,
    PreconditionError,
    RotundaError,
    TheoremViolation,
)
from .graphs import (
    CliqueGraph,
    CliqueTree,
    Graph,
    clique_graph,
    clique_trees,
    graph_tree_width,
    is_chordal,
    maximal_cliques,
    reduced_clique_graph,
)
from .matroid import (
    BasisMatroid,
    CircuitMatroid,
    DirectSum,
    Flat,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
    enumeration_limit,
)
from .modularity import is_modular_flat, modular_covers, modular_flats, modular_hyperplanes, projection
from .rotunda_graph import (
    CARDINALITY,
    RANK,
    LegitimateWeighting,
    RotundaGraph,
    RotundaTree,
    is_rotunda_tree,
    max_weight_rotunda_tree,
    rotunda_graph,
    rotunda_trees,
)
from .roundness import covering_rotunda, is_round, round_flats, rotunda, vertical_covers
from .treewidth import (
    TreeDecomposition,
    brute_force_treewidth,
    node_width,
    rotunda_treewidth,
    width,
)

__version__ = "0.1.0"
