//! Free-tree and small labelled-graph streams, structural class filters and
//! exact minimiser search.

mod filter;
mod labeled;
mod search;
mod trees;

pub use filter::{filter_class, TreeClassFilter};
pub use labeled::{connected_graphs_labeled, connected_graphs_with_min_gamma, LABELED_LIMIT};
pub use search::{find_minimizer, find_minimizer_parallel, RuntimeStats, SearchResult};
pub use trees::{
    free_trees, free_trees_with_limit, layout_to_graph, FreeTrees, TreeCheckpoint,
    DEFAULT_TREE_LIMIT,
};
