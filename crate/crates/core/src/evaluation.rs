//! Ranking comparison: Kendall's tau, top-k overlap, tau against SI ground
//! truth over a beta grid, and rank-ordered spreading power.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::Ranking;
use crate::epidemics::{clamp_beta, single_seed_mean, spreading_power, SiConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TauConvention {
    /// `(n₊ - n₋) / (N(N-1)/2)`, range [-1, 1].
    #[default]
    Standard,
    /// `(n₊ - n₋) / (N(N-1))`, range [-0.5, 0.5].
    PaperEq11,
}

impl TauConvention {
    pub fn denominator(self, n: u64) -> u64 {
        match self {
            TauConvention::Standard => n * (n - 1) / 2,
            TauConvention::PaperEq11 => n * (n - 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankComparison {
    pub tau: f64,
    pub concordant: u64,
    pub discordant: u64,
    /// Unordered index pairs, `N(N-1)/2`.
    pub pairs_total: u64,
    pub convention: TauConvention,
    /// No strictly ordered pair in both sequences: tau is 0 by convention.
    pub degenerate: bool,
}

/// Kendall's tau-a numerator over all unordered pairs. A pair tied in either
/// sequence is neither concordant nor discordant.
///
/// Counts are obtained in `O(N log N)`: sort by `(x, y)`, count inversions of
/// `y` with a merge sort (discordant pairs), then recover the concordant
/// count from the tie totals.
pub fn kendall_tau(x: &[f64], y: &[f64], convention: TauConvention) -> Result<RankComparison> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "kendall tau needs at least two observations, got {n}"
        )));
    }
    if x.iter().chain(y).any(|v| v.is_nan()) {
        return Err(Error::InvalidArgument("kendall tau input contains NaN".into()));
    }
    // +0.0 folds -0.0 into 0.0 so total_cmp agrees with `<`
    let mut pairs: Vec<(f64, f64)> = x.iter().zip(y).map(|(&a, &b)| (a + 0.0, b + 0.0)).collect();
    pairs.sort_unstable_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));

    let total = n as u64 * (n as u64 - 1) / 2;
    let x_ties = tie_pairs(&pairs, |p, q| p.0 == q.0);
    let joint_ties = tie_pairs(&pairs, |p, q| p == q);

    let mut ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let mut buf = vec![0.0; n];
    let discordant = count_inversions(&mut ys, &mut buf);
    let y_ties = tie_pairs(&ys, |p, q| p == q);

    let concordant = total + joint_ties - x_ties - y_ties - discordant;
    let diff = concordant as f64 - discordant as f64;
    Ok(RankComparison {
        tau: diff / convention.denominator(n as u64) as f64,
        concordant,
        discordant,
        pairs_total: total,
        convention,
        degenerate: concordant + discordant == 0,
    })
}

/// Pairs within runs of equal neighbours in an already-sorted slice.
fn tie_pairs<T>(sorted: &[T], eq: impl Fn(&T, &T) -> bool) -> u64 {
    let mut total = 0u64;
    let mut run = 1u64;
    for w in sorted.windows(2) {
        if eq(&w[0], &w[1]) {
            run += 1;
        } else {
            total += run * (run - 1) / 2;
            run = 1;
        }
    }
    total + run * (run - 1) / 2
}

/// Sorts ascending and returns the number of strictly inverted pairs.
fn count_inversions(v: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left_buf, right_buf) = buf.split_at_mut(mid);
    let mut swaps = {
        let (l, r) = v.split_at_mut(mid);
        count_inversions(l, left_buf) + count_inversions(r, right_buf)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[j] < v[i] {
            buf[k] = v[j];
            j += 1;
            swaps += (mid - i) as u64;
        } else {
            buf[k] = v[i];
            i += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buf[..n]);
    swaps
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OverlapReport {
    pub k: usize,
    pub shared: usize,
}

/// Size of the intersection of the two top-`k` sets.
pub fn top_k_overlap(a: &Ranking, b: &Ranking, k: usize) -> Result<OverlapReport> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if k > a.len() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} exceeds the {} ranked nodes",
            a.len()
        )));
    }
    let top_a: HashSet<NodeId> = a.top(k).iter().copied().collect();
    let shared = b.top(k).iter().filter(|v| top_a.contains(v)).count();
    Ok(OverlapReport { k, shared })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TauRow {
    pub measure: String,
    pub beta: f64,
    pub comparison: RankComparison,
}

/// For every beta (clamped into [0, 1]) the spreading power of each node is
/// estimated once and each score vector is correlated with it.
pub fn tau_vs_beta_sweep<S: AsRef<str> + Sync>(
    g: &Graph,
    measures: &[(S, &[f64])],
    betas: &[f64],
    cfg: &SiConfig,
    convention: TauConvention,
) -> Result<Vec<TauRow>> {
    let n = g.node_count();
    for (name, scores) in measures {
        if scores.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} has {} scores for {n} nodes",
                name.as_ref(),
                scores.len()
            )));
        }
    }
    let mut rows = Vec::with_capacity(measures.len() * betas.len());
    for &beta in betas {
        let beta = clamp_beta(beta)?;
        let truth = spreading_power(g, &cfg.with_beta(beta))?;
        for (name, scores) in measures {
            rows.push(TauRow {
                measure: name.as_ref().to_owned(),
                beta,
                comparison: kendall_tau(scores, &truth, convention)?,
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpreadRow {
    pub rank: usize,
    pub node: NodeId,
    pub mean_final: f64,
}

/// Single-seed mean final infected count for every node, listed in rank order.
/// Uses the same random streams as `spreading_power`.
pub fn rank_vs_spread(g: &Graph, ranking: &Ranking, cfg: &SiConfig) -> Result<Vec<SpreadRow>> {
    cfg.validate()?;
    if ranking.len() != g.node_count() {
        return Err(Error::DimensionMismatch {
            expected: g.node_count(),
            found: ranking.len(),
        });
    }
    ranking
        .order()
        .par_iter()
        .enumerate()
        .map(|(pos, &node)| {
            Ok(SpreadRow {
                rank: pos + 1,
                node,
                mean_final: single_seed_mean(g, node, cfg)?,
            })
        })
        .collect()
}
