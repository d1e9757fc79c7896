"""Overlapping community detection and citation-weighted influence ranking
for co-author networks, with a query service for interactive exploration."""

from .betweenness import (
    BetweennessScores,
    PairBetweenness,
    SplitResult,
    edge_vertex_betweenness,
    pair_betweenness,
    split_betweenness,
)
from .conga import (
    Dendrogram,
    DendrogramEvent,
    RemoveEdge,
    SplitVertex,
    best_cut,
    cut_at_count,
    modularity,
    run_conga,
)
from .dataset import Dataset, dataset_summary, load_dataset
from .influence import (
    InfluenceReport,
    community_h_index,
    community_influence,
    mean_citation_influence,
    min_citation_influence,
    rank_top_k,
)
from .model import (
    AuthorRecord,
    CoauthorGraph,
    Community,
    CommunitySet,
    PaperRecord,
    build_coauthor_graph,
    filter_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "AuthorRecord",
    "BetweennessScores",
    "CoauthorGraph",
    "Community",
    "CommunitySet",
    "Dataset",
    "Dendrogram",
    "DendrogramEvent",
    "InfluenceReport",
    "PairBetweenness",
    "PaperRecord",
    "RemoveEdge",
    "SplitResult",
    "SplitVertex",
    "best_cut",
    "build_coauthor_graph",
    "community_h_index",
    "community_influence",
    "cut_at_count",
    "dataset_summary",
    "edge_vertex_betweenness",
    "filter_corpus",
    "load_dataset",
    "mean_citation_influence",
    "min_citation_influence",
    "modularity",
    "pair_betweenness",
    "rank_top_k",
    "run_conga",
    "split_betweenness",
]
