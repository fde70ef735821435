//! Influential-node identification on undirected networks.
//!
//! The crate computes the effective-distance gravity centrality (EffG) next to
//! six baseline measures (degree, betweenness, closeness, eigenvector,
//! PageRank and the hop-distance gravity model), simulates SI epidemics to
//! obtain spreading-power ground truth, and compares rankings with Kendall's
//! tau and top-k overlap.
//!
//! ```
//! use gravrank::{centrality, effective, Graph, ParseOptions};
//!
//! let (g, _) = Graph::parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c", &ParseOptions::default()).unwrap();
//! let d = effective::effective_distance_matrix(&g);
//! let effg = centrality::effg_centrality(&g, &d).unwrap();
//! let ranking = effg.rank();
//! assert_eq!(g.label(ranking.order()[0]), "c");
//! ```

pub mod centrality;
pub mod distance;
pub mod effective;
pub mod epidemics;
mod error;
pub mod evaluation;
pub mod graph;
pub mod stats;

pub use centrality::{Measure, MeasureOptions, Ranking, ScoreVector};
pub use distance::{DistanceKind, DistanceMatrix};
pub use epidemics::{DrawMode, SiConfig, SiOutcome};
pub use error::{Error, Result};
pub use evaluation::{OverlapReport, RankComparison, TauConvention};
pub use graph::{Graph, HopDistanceRow, NodeId, ParseOptions, ParseReport};
pub use stats::TopologyStats;
