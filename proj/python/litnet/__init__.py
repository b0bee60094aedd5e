"""Literature co-occurrence and co-expression network toolkit."""

from litnet._core import (
    CooccurrenceRecord,
    CooccurrenceTable,
    EdgeSet,
    OccurrenceIndex,
    build_cooccurrence_table,
    build_index,
    build_index_from_records,
    cooccurrence_count,
    edge_universe_size,
    hypothesis_set,
    intersect_networks,
    k_mention_network,
    pearson,
    poisson_lambda,
    poisson_network,
    poisson_pmf,
    poisson_threshold,
    read_correlations,
    read_sif,
    threshold_sweep,
    write_sif,
)

__all__ = [
    "CooccurrenceRecord",
    "CooccurrenceTable",
    "EdgeSet",
    "OccurrenceIndex",
    "build_cooccurrence_table",
    "build_index",
    "build_index_from_records",
    "cooccurrence_count",
    "edge_universe_size",
    "hypothesis_set",
    "intersect_networks",
    "k_mention_network",
    "pearson",
    "poisson_lambda",
    "poisson_network",
    "poisson_pmf",
    "poisson_threshold",
    "read_correlations",
    "read_sif",
    "threshold_sweep",
    "write_sif",
]
