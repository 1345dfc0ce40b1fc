//! Functional-complexity analysis for small undirected graphs.
//!
//! The central quantity is C_F, an information measure of how a network
//! function's topology spreads reachability across scales: per-node
//! reachability entropies are summed over every connected induced subgraph,
//! averaged per subgraph size, compared against a linear reference, and the
//! absolute deviations accumulated over scales 1..diameter.
//!
//! The crate provides the graph representation (bitmask adjacency, up to 64
//! vertices), classical metrics (distances, diameter, average path length,
//! clustering), connected-subgraph enumeration, the complexity pipeline
//! itself, and sweep/correlation machinery over labeled, isomorphism-class,
//! and sampled graph populations. Everything is deterministic: same inputs,
//! same bytes, regardless of thread count.

mod complexity;
mod error;
mod graph;
mod metrics;
mod numfmt;
mod stats;
mod subgraphs;
mod sweep;

pub use complexity::{
    average_information, functional_complexity, interaction_probability, node_entropy,
    single_scale_curve, subgraph_information, ComplexityReport, ScaleCurve,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, generate, parse_edge_list, write_dot, write_edge_list, Graph, TopologyFamily,
    MAX_NODES,
};
pub use metrics::{
    average_clustering, average_path_length, bfs_within, connected_components, diameter,
    is_connected, local_clustering, reach_count, DistanceRow,
};
pub use numfmt::format_sig;
pub use stats::{multiple_correlation, pearson, pearson_weighted};
pub use subgraphs::{
    brute_force_connected_subsets, census, enumerate_connected_subgraphs, NodeSet, SubgraphCensus,
    SubgraphIter,
};
pub use sweep::{
    canonical_form, correlation_vs_size, enumerate_labeled_connected_graphs, read_records,
    run_sweep, sample_connected_graphs, summarize_records, write_records, CorrelationSummary,
    SampleParams, SweepMode, SweepRecord, CANONICAL_MAX_NODES, LABELED_ENUM_MAX_NODES,
    REJECTION_LIMIT, SWEEP_CSV_HEADER,
};
