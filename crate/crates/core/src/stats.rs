//! Whole-network descriptors: size, mean degree, mean hop distance, average
//! local clustering and degree assortativity.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_into, Graph, HopDistanceRow, NodeId};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopologyStats {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    /// Mean hop distance over ordered reachable pairs `i != j`.
    pub avg_distance: f64,
    /// Share of ordered pairs `i != j` left out of `avg_distance` because no path exists.
    pub unreachable_fraction: f64,
    pub clustering: f64,
    /// `None` when the degree variance over edge endpoints is zero (e.g. regular graphs)
    /// or there are no edges.
    pub assortativity: Option<f64>,
}

pub fn topology_stats(g: &Graph) -> Result<TopologyStats> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count();
    let (sum, reachable) = distance_totals(g);
    let ordered_pairs = n as u64 * (n as u64 - 1);
    let avg_distance = if reachable > 0 {
        sum as f64 / reachable as f64
    } else {
        0.0
    };
    let unreachable_fraction = if ordered_pairs > 0 {
        (ordered_pairs - reachable) as f64 / ordered_pairs as f64
    } else {
        0.0
    };
    Ok(TopologyStats {
        n,
        m,
        avg_degree: 2.0 * m as f64 / n as f64,
        avg_distance,
        unreachable_fraction,
        clustering: average_clustering(g),
        assortativity: degree_assortativity(g),
    })
}

/// (sum of finite hop distances, number of reachable ordered pairs).
fn distance_totals(g: &Graph) -> (u64, u64) {
    let n = g.node_count();
    (0..n)
        .into_par_iter()
        .map_init(
            || (vec![HopDistanceRow::UNREACHABLE; n], VecDeque::new()),
            |(dist, queue), s| {
                dist.fill(HopDistanceRow::UNREACHABLE);
                bfs_into(g, NodeId::from(s), dist, queue);
                dist.iter()
                    .filter(|&&d| d != HopDistanceRow::UNREACHABLE && d > 0)
                    .fold((0u64, 0u64), |(s, c), &d| (s + d as u64, c + 1))
            },
        )
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

/// Local clustering of one node; zero below degree two.
pub fn local_clustering(g: &Graph, v: NodeId) -> f64 {
    let nbrs = g.neighbors(v);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        let na = g.neighbors(NodeId(a));
        links += nbrs[i + 1..]
            .iter()
            .filter(|&&b| na.binary_search(&b).is_ok())
            .count();
    }
    2.0 * links as f64 / (k * (k - 1)) as f64
}

pub fn average_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    if n == 0 {
        return 0.0;
    }
    let total: f64 = (0..n)
        .into_par_iter()
        .map(|i| local_clustering(g, NodeId::from(i)))
        .collect::<Vec<_>>()
        .iter()
        .sum();
    total / n as f64
}

/// Pearson correlation of the degrees at either end of an edge, each edge
/// counted in both directions.
pub fn degree_assortativity(g: &Graph) -> Option<f64> {
    let m = g.edge_count();
    if m == 0 {
        return None;
    }
    let (mut sxy, mut sx, mut sxx) = (0.0f64, 0.0f64, 0.0f64);
    for (u, v) in g.edges() {
        let (a, b) = (g.deg(u) as f64, g.deg(v) as f64);
        sxy += 2.0 * a * b;
        sx += a + b;
        sxx += a * a + b * b;
    }
    let count = 2.0 * m as f64;
    let mean = sx / count;
    let var = sxx / count - mean * mean;
    let cov = sxy / count - mean * mean;
    if var <= f64::EPSILON * mean * mean {
        return None;
    }
    Some((cov / var).clamp(-1.0, 1.0))
}
