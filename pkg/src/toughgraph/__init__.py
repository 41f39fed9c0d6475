"""toughgraph: exact graph toughness and minimally t-tough machinery.

Toughness tau(G) is the minimum of |S| / omega(G-S) over all cutsets S,
infinite for complete graphs. The package computes it exactly (rational
arithmetic end to end), certifies minimally t-tough and minimally
k-connected graphs with per-edge witnesses, embeds arbitrary graphs as
induced subgraphs into minimally t-tough hosts for any positive rational
t, and sweeps exhaustive small-graph corpora against a battery of named
structural checks.
"""

from .errors import (
    FalsificationError,
    Graph6Error,
    PreconditionError,
    ResourceBudgetError,
    ToughgraphError,
    UnsupportedSizeError,
)
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .graph6 import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph6_stream,
)
from .invariants import (
    find_claw,
    independence_number,
    is_alpha_critical,
    is_claw_free,
    is_hamiltonian,
    vertex_connectivity,
)
from .rational import INFINITY, Rational
from .toughness import (
    ToughnessCertificate,
    all_tough_sets,
    compare_toughness,
    find_violating_cutset,
    is_t_tough,
    toughness_clawfree,
    toughness_exact,
    toughness_naive,
)
from .minimality import (
    MinimalityReport,
    is_minimally_k_connected,
    is_minimally_t_tough,
    k_of_edge,
    witness_1tough,
)
from .embedding import (
    EmbeddingParams,
    EmbeddingResult,
    alpha_criticalize,
    blow_up,
    construct_host_ge1,
    construct_host_lt1,
    embed_minimally_t_tough,
    prune_to_minimal,
)
from .corpus import (
    CHECKS,
    CorpusReport,
    census,
    corpus_graphs,
    enumerate_graphs,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CorpusReport",
    "EmbeddingParams",
    "EmbeddingResult",
    "FalsificationError",
    "Graph",
    "Graph6Error",
    "INFINITY",
    "MinimalityReport",
    "PreconditionError",
    "Rational",
    "ResourceBudgetError",
    "ToughgraphError",
    "ToughnessCertificate",
    "UnsupportedSizeError",
    "all_tough_sets",
    "alpha_criticalize",
    "blow_up",
    "census",
    "complete_bipartite_graph",
    "complete_graph",
    "compare_toughness",
    "construct_host_ge1",
    "construct_host_lt1",
    "corpus_graphs",
    "cycle_graph",
    "disjoint_union",
    "embed_minimally_t_tough",
    "emit_edge_list",
    "emit_graph6",
    "empty_graph",
    "enumerate_graphs",
    "find_claw",
    "find_violating_cutset",
    "independence_number",
    "is_alpha_critical",
    "is_claw_free",
    "is_hamiltonian",
    "is_minimally_k_connected",
    "is_minimally_t_tough",
    "is_t_tough",
    "k_of_edge",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "prune_to_minimal",
    "read_graph6_stream",
    "run_checks",
    "star_graph",
    "toughness_clawfree",
    "toughness_exact",
    "toughness_naive",
    "vertex_connectivity",
    "witness_1tough",
]
