//! Effective distance between ordered node pairs.
//!
//! A random walker at `m` steps to each neighbour with probability `1/k_m`.
//! The effective distance from `m` to `n` is `1 - log2(P*)`, where `P*` is the
//! largest product of step probabilities along any path from `m` to `n`. The
//! constant 1 is added once per path, not once per leg.
//!
//! Maximising a product of probabilities is minimising the sum of
//! `-log2 P_uv = log2 k_u`, which is nonnegative, so each row is a single
//! Dijkstra run over directed edge weights `log2 k_u` followed by `+1`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::distance::{DistanceKind, DistanceMatrix};
use crate::error::Result;
use crate::graph::{Graph, NodeId};

/// One step of an unbiased random walk out of `source`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionRow {
    pub source: NodeId,
    /// `(neighbour, probability)` in ascending neighbour order.
    pub entries: Vec<(NodeId, f64)>,
    /// Set when `source` has no neighbours; `entries` is then empty.
    pub isolated: bool,
}

impl TransitionRow {
    /// Probability of stepping to `target`; zero for non-neighbours and the diagonal.
    pub fn prob(&self, target: NodeId) -> f64 {
        self.entries
            .binary_search_by(|(v, _)| v.cmp(&target))
            .map(|i| self.entries[i].1)
            .unwrap_or(0.0)
    }
}

pub fn transition_probabilities(g: &Graph, m: NodeId) -> Result<TransitionRow> {
    g.check(m)?;
    let nbrs = g.neighbors(m);
    let p = 1.0 / nbrs.len() as f64;
    Ok(TransitionRow {
        source: m,
        entries: nbrs.iter().map(|&v| (NodeId(v), p)).collect(),
        isolated: nbrs.is_empty(),
    })
}

/// Effective distances out of one source. `dist[source]` and every
/// unreachable target are `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveDistanceRow {
    pub source: NodeId,
    pub dist: Vec<f64>,
}

impl EffectiveDistanceRow {
    /// `None` for the source itself and for unreachable targets.
    pub fn get(&self, target: NodeId) -> Option<f64> {
        let d = self.dist[target.index()];
        d.is_finite().then_some(d)
    }
}

pub fn effective_distances(g: &Graph, source: NodeId) -> Result<EffectiveDistanceRow> {
    g.check(source)?;
    let costs = log2_degrees(g);
    let mut dist = vec![f64::INFINITY; g.node_count()];
    let mut heap = BinaryHeap::new();
    effective_row_into(g, &costs, source, &mut dist, &mut heap);
    Ok(EffectiveDistanceRow { source, dist })
}

/// Every row of the effective-distance matrix, computed independently per source.
pub fn effective_distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.node_count();
    let costs = log2_degrees(g);
    let rows = (0..n)
        .into_par_iter()
        .map_init(BinaryHeap::new, |heap, s| {
            let mut dist = vec![f64::INFINITY; n];
            effective_row_into(g, &costs, NodeId::from(s), &mut dist, heap);
            dist
        })
        .collect();
    DistanceMatrix::from_rows(DistanceKind::Effective, rows)
}

fn log2_degrees(g: &Graph) -> Vec<f64> {
    g.nodes().map(|v| (g.deg(v) as f64).log2()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Entry {
    cost: f64,
    node: u32,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on cost
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn effective_row_into(
    g: &Graph,
    costs: &[f64],
    source: NodeId,
    dist: &mut [f64],
    heap: &mut BinaryHeap<Entry>,
) {
    heap.clear();
    // path cost = -log2 of the best probability product
    let mut best = vec![f64::INFINITY; dist.len()];
    let mut settled = vec![false; dist.len()];
    best[source.index()] = 0.0;
    heap.push(Entry {
        cost: 0.0,
        node: source.0,
    });
    while let Some(Entry { cost, node }) = heap.pop() {
        let u = node as usize;
        if settled[u] {
            continue;
        }
        settled[u] = true;
        let step = costs[u];
        for &v in g.neighbors(NodeId(node)) {
            let next = cost + step;
            if next < best[v as usize] {
                best[v as usize] = next;
                heap.push(Entry { cost: next, node: v });
            }
        }
    }
    for (d, &b) in dist.iter_mut().zip(&best) {
        *d = if b.is_finite() { 1.0 + b } else { f64::INFINITY };
    }
    dist[source.index()] = f64::INFINITY;
}
