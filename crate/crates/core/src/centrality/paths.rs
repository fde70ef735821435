//! Shortest-path measures: betweenness (Brandes accumulation) and closeness.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{per_source_sum, Measure, ScoreVector};
use crate::graph::{bfs_into, Graph, HopDistanceRow, NodeId};

/// Unnormalised betweenness over unordered endpoint pairs; endpoints never
/// count as passing through.
pub fn betweenness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let totals = per_source_sum(n, |sources, acc| {
        let mut state = BrandesState::new(n);
        for s in sources {
            state.accumulate(g, NodeId::from(s), acc);
        }
    });
    // each unordered pair was visited from both ends
    let scores = totals.into_iter().map(|x| x / 2.0).collect();
    ScoreVector::new(Measure::Bc, scores)
}

struct BrandesState {
    stack: Vec<u32>,
    queue: VecDeque<u32>,
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
}

impl BrandesState {
    fn new(n: usize) -> Self {
        BrandesState {
            stack: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
            dist: vec![HopDistanceRow::UNREACHABLE; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
        }
    }

    fn accumulate(&mut self, g: &Graph, s: NodeId, acc: &mut [f64]) {
        self.dist.fill(HopDistanceRow::UNREACHABLE);
        self.sigma.fill(0.0);
        self.delta.fill(0.0);
        self.stack.clear();

        self.dist[s.index()] = 0;
        self.sigma[s.index()] = 1.0;
        self.queue.push_back(s.0);
        while let Some(v) = self.queue.pop_front() {
            self.stack.push(v);
            let dv = self.dist[v as usize];
            for &w in g.neighbors(NodeId(v)) {
                let w = w as usize;
                if self.dist[w] == HopDistanceRow::UNREACHABLE {
                    self.dist[w] = dv + 1;
                    self.queue.push_back(w as u32);
                }
                if self.dist[w] == dv + 1 {
                    self.sigma[w] += self.sigma[v as usize];
                }
            }
        }

        // predecessors of w are exactly the neighbours one hop closer to s
        while let Some(w) = self.stack.pop() {
            let w = w as usize;
            let dw = self.dist[w];
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in g.neighbors(NodeId(w as u32)) {
                let v = v as usize;
                if dw > 0 && self.dist[v] == dw - 1 {
                    self.delta[v] += self.sigma[v] * coeff;
                }
            }
            if w != s.index() {
                acc[w] += self.delta[w];
            }
        }
    }
}

/// `1 / sum of hop distances` to reachable peers; zero when there are none.
pub fn closeness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let scores = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![HopDistanceRow::UNREACHABLE; n], VecDeque::new()),
            |(dist, queue), s| {
                dist.fill(HopDistanceRow::UNREACHABLE);
                bfs_into(g, NodeId::from(s), dist, queue);
                let total: u64 = dist
                    .iter()
                    .filter(|&&d| d != HopDistanceRow::UNREACHABLE)
                    .map(|&d| d as u64)
                    .sum();
                if total == 0 {
                    0.0
                } else {
                    1.0 / total as f64
                }
            },
        )
        .collect();
    ScoreVector::new(Measure::Cc, scores)
}
