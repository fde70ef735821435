//! Gravity-style centralities: degree products over squared distance.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::{Measure, ScoreVector};
use crate::distance::{DistanceKind, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{bfs_into, Graph, HopDistanceRow, NodeId};

/// Which reachable peers enter the EffG sum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EffgPeers {
    /// Every peer at finite distance.
    #[default]
    AllReachable,
    /// Also drop peers at effective distance exactly 1 (zero path cost). Only
    /// a degree-1 source has such a peer. Some published EffG tables were
    /// produced this way; the flag exists to reproduce them.
    SkipUnitDistance,
}

/// Sums `k_i k_j / d²` in ascending term order so that nodes with the same
/// multiset of terms get bit-identical scores.
fn sorted_sum(terms: &mut [f64]) -> f64 {
    terms.sort_unstable_by(f64::total_cmp);
    terms.iter().sum()
}

/// `C(i) = Σ_{j≠i reachable} k_i k_j / d_ij²` with hop distances, no cutoff.
pub fn gravity_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let degrees = g.degrees();
    let scores = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![HopDistanceRow::UNREACHABLE; n], VecDeque::new(), Vec::new()),
            |(dist, queue, terms), s| {
                dist.fill(HopDistanceRow::UNREACHABLE);
                bfs_into(g, NodeId::from(s), dist, queue);
                terms.clear();
                let ki = degrees[s] as f64;
                for (j, &d) in dist.iter().enumerate() {
                    if j != s && d != HopDistanceRow::UNREACHABLE {
                        let d = d as f64;
                        terms.push(ki * degrees[j] as f64 / (d * d));
                    }
                }
                sorted_sum(terms)
            },
        )
        .collect();
    ScoreVector::new(Measure::Gm, scores)
}

/// `C_EffG(i) = Σ_{j≠i, D(i→j) finite} k_i k_j / D(i→j)²`, reading the
/// outbound row of `distances`.
pub fn effg_centrality(g: &Graph, distances: &DistanceMatrix) -> Result<ScoreVector> {
    effg_centrality_with(g, distances, EffgPeers::AllReachable)
}

pub fn effg_centrality_with(
    g: &Graph,
    distances: &DistanceMatrix,
    peers: EffgPeers,
) -> Result<ScoreVector> {
    let n = g.node_count();
    if distances.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: distances.len(),
        });
    }
    let skip_unit = peers == EffgPeers::SkipUnitDistance && distances.kind() == DistanceKind::Effective;
    let degrees = g.degrees();
    let scores = (0..n)
        .into_par_iter()
        .map_init(Vec::new, |terms, i| {
            terms.clear();
            let ki = degrees[i] as f64;
            for (j, &d) in distances.row(NodeId::from(i)).iter().enumerate() {
                if j == i || !d.is_finite() || (skip_unit && d == 1.0) {
                    continue;
                }
                terms.push(ki * degrees[j] as f64 / (d * d));
            }
            sorted_sum(terms)
        })
        .collect();
    Ok(ScoreVector::new(Measure::Effg, scores))
}
