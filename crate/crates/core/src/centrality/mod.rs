//! Node centrality measures and deterministic rankings.

mod gravity;
mod paths;
mod spectral;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::effective::effective_distance_matrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub use gravity::{effg_centrality, effg_centrality_with, gravity_centrality, EffgPeers};
pub use paths::{betweenness_centrality, closeness_centrality};
pub use spectral::{eigenvector_centrality, pagerank};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Dc,
    Bc,
    Cc,
    Ec,
    #[serde(rename = "pagerank")]
    PageRank,
    Gm,
    Effg,
}

impl Measure {
    pub const ALL: [Measure; 7] = [
        Measure::Dc,
        Measure::Bc,
        Measure::Cc,
        Measure::Ec,
        Measure::PageRank,
        Measure::Gm,
        Measure::Effg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Dc => "dc",
            Measure::Bc => "bc",
            Measure::Cc => "cc",
            Measure::Ec => "ec",
            Measure::PageRank => "pagerank",
            Measure::Gm => "gm",
            Measure::Effg => "effg",
        }
    }

    pub fn valid_names() -> String {
        Measure::ALL.map(Measure::name).join(", ")
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == lower || (lower == "pc" && *m == Measure::PageRank))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown measure `{s}` (valid: {})",
                    Measure::valid_names()
                ))
            })
    }
}

/// Convergence record of an iterative measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Convergence {
    pub iterations: usize,
    pub residual: f64,
    /// Rayleigh-quotient estimate of the leading eigenvalue (eigenvector centrality only).
    pub eigenvalue: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
    pub convergence: Option<Convergence>,
}

impl ScoreVector {
    pub fn new(measure: Measure, scores: Vec<f64>) -> Self {
        debug_assert!(scores.iter().all(|s| s.is_finite()));
        ScoreVector {
            measure,
            scores,
            convergence: None,
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn score(&self, node: NodeId) -> f64 {
        self.scores[node.index()]
    }

    pub fn rank(&self) -> Ranking {
        Ranking::from_scores(&self.scores)
    }
}

/// Nodes in descending score order; equal scores keep ascending node index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ranking {
    order: Vec<NodeId>,
    /// 1-based rank per node index.
    ranks: Vec<usize>,
}

impl Ranking {
    pub fn from_scores(scores: &[f64]) -> Ranking {
        let mut order: Vec<NodeId> = (0..scores.len()).map(NodeId::from).collect();
        // stable sort keeps index order among equal scores
        order.sort_by(|a, b| scores[b.index()].total_cmp(&scores[a.index()]));
        Self::from_order(order)
    }

    pub fn from_order(order: Vec<NodeId>) -> Ranking {
        let mut ranks = vec![0; order.len()];
        for (pos, v) in order.iter().enumerate() {
            ranks[v.index()] = pos + 1;
        }
        Ranking { order, ranks }
    }

    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn rank_of(&self, node: NodeId) -> usize {
        self.ranks[node.index()]
    }

    pub fn top(&self, k: usize) -> &[NodeId] {
        &self.order[..k.min(self.order.len())]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

pub fn degree_centrality(g: &Graph) -> ScoreVector {
    ScoreVector::new(Measure::Dc, g.degrees().into_iter().map(|k| k as f64).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub damping: f64,
    pub effg_peers: EffgPeers,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            damping: 1.0,
            effg_peers: EffgPeers::AllReachable,
        }
    }
}

/// Runs one measure by name. EffG builds the effective-distance matrix on the way.
pub fn compute(g: &Graph, measure: Measure, opts: &MeasureOptions) -> Result<ScoreVector> {
    match measure {
        Measure::Dc => Ok(degree_centrality(g)),
        Measure::Bc => Ok(betweenness_centrality(g)),
        Measure::Cc => Ok(closeness_centrality(g)),
        Measure::Ec => eigenvector_centrality(g, opts.tol, opts.max_iter),
        Measure::PageRank => pagerank(g, opts.tol, opts.max_iter, opts.damping),
        Measure::Gm => Ok(gravity_centrality(g)),
        Measure::Effg => {
            let d = effective_distance_matrix(g);
            effg_centrality_with(g, &d, opts.effg_peers)
        }
    }
}

const SOURCE_CHUNK: usize = 32;

/// Sums per-source contribution vectors in parallel with a fixed reduction
/// order, so repeated runs are bit-identical.
pub(crate) fn per_source_sum<F>(n: usize, per_chunk: F) -> Vec<f64>
where
    F: Fn(std::ops::Range<usize>, &mut [f64]) + Sync,
{
    let chunks: Vec<Vec<f64>> = (0..n.div_ceil(SOURCE_CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![0.0; n];
            per_chunk(c * SOURCE_CHUNK..((c + 1) * SOURCE_CHUNK).min(n), &mut acc);
            acc
        })
        .collect();
    let mut total = vec![0.0; n];
    for chunk in chunks {
        for (t, c) in total.iter_mut().zip(chunk) {
            *t += c;
        }
    }
    total
}
