"""Research-interest similarity on citation networks.

Walk-based transition probabilities (exact and sampled), shortest-path
variants, a spectral embedding of the walk matrix, author-level
aggregation, and an AUC evaluation harness, plus block-model generators
for benchmarks.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import CitewalkError, GuardExceeded, ParseError
from .graph import (
    Graph,
    build_graph,
    clean_pipeline,
    connected_components,
    filter_min_degree,
    from_index_edges,
    is_connected,
    largest_component,
    load_edge_list,
    load_graph,
    save_graph,
)
from .exact import adjacency_matrix, transition_matrix, transition_pairs, transition_row
from .walks import VisitCounts, WalkConfig, estimate_pairs, estimate_row, sample_visits, zero_fraction
from .paths import (
    path_length_pairs,
    path_probability_pairs,
    path_probability_row,
    shortest_path_lengths,
)
from .spectral import Embedding, cosine_pairs, cosine_similarity, embed_transition
from .scores import (
    MEASURES,
    LabeledPairSet,
    PairScore,
    read_pair_set,
    read_scores,
    write_pair_set,
    write_scores,
)
from .measures import pair_values, resolve_pairs, score_pairs, similarity_values
from .authors import (
    AuthorCorpus,
    AuthorProfile,
    PaperRecord,
    author_similarity,
    build_collab_pairs,
    derive_collaborations,
    load_corpus,
    select_author_papers,
)
from .evaluate import (
    AUCResult,
    auc_score,
    bootstrap_auc,
    coclass_pairs,
    degree_correlation,
    discipline_matrix,
    log_transform,
    piecewise_fit,
)
from .sbm import (
    BenchmarkRecord,
    SBMSpec,
    generate_sbm,
    probs_for_mean_degree,
    run_benchmark,
    summarize_benchmark,
)

__all__ = [
    "CitewalkError",
    "GuardExceeded",
    "ParseError",
    "Graph",
    "build_graph",
    "clean_pipeline",
    "connected_components",
    "filter_min_degree",
    "from_index_edges",
    "is_connected",
    "largest_component",
    "load_edge_list",
    "load_graph",
    "save_graph",
    "adjacency_matrix",
    "transition_matrix",
    "transition_pairs",
    "transition_row",
    "VisitCounts",
    "WalkConfig",
    "estimate_pairs",
    "estimate_row",
    "sample_visits",
    "zero_fraction",
    "path_length_pairs",
    "path_probability_pairs",
    "path_probability_row",
    "shortest_path_lengths",
    "Embedding",
    "cosine_pairs",
    "cosine_similarity",
    "embed_transition",
    "MEASURES",
    "LabeledPairSet",
    "PairScore",
    "read_pair_set",
    "read_scores",
    "write_pair_set",
    "write_scores",
    "pair_values",
    "resolve_pairs",
    "score_pairs",
    "similarity_values",
    "AuthorCorpus",
    "AuthorProfile",
    "PaperRecord",
    "author_similarity",
    "build_collab_pairs",
    "derive_collaborations",
    "load_corpus",
    "select_author_papers",
    "AUCResult",
    "auc_score",
    "bootstrap_auc",
    "coclass_pairs",
    "degree_correlation",
    "discipline_matrix",
    "log_transform",
    "piecewise_fit",
    "BenchmarkRecord",
    "SBMSpec",
    "generate_sbm",
    "probs_for_mean_degree",
    "run_benchmark",
    "summarize_benchmark",
    "__version__",
]
