//! Discrete-time SI spreading with seeded, reproducible ensembles.
//!
//! Each step, every infected node independently tries to infect each
//! susceptible neighbour with probability `beta`; the step's infections land
//! together at its end, so new cases transmit from the following step on.
//!
//! Every run owns a private random stream keyed by `(master seed, experiment,
//! run)`, so ensembles parallelise without changing a single bit of output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DrawMode {
    /// Bernoulli draws consumed from the run's stream in visiting order.
    #[default]
    Sequential,
    /// Each transmission attempt `u → v` at step `t` compares `beta` against a
    /// uniform fixed by `(stream, t, u, v)` alone. Runs that differ only in
    /// `beta` or in the seed set are then coupled edge by edge.
    Shared,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SiConfig {
    pub beta: f64,
    pub t_max: usize,
    pub runs: usize,
    pub seed: u64,
    pub draw_mode: DrawMode,
}

impl Default for SiConfig {
    fn default() -> Self {
        SiConfig {
            beta: 0.2,
            t_max: 20,
            runs: 50,
            seed: 1,
            draw_mode: DrawMode::Sequential,
        }
    }
}

impl SiConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::InvalidArgument(format!(
                "beta must lie in [0, 1], got {}",
                self.beta
            )));
        }
        if self.runs == 0 {
            return Err(Error::InvalidArgument("runs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_beta(self, beta: f64) -> Self {
        SiConfig { beta, ..self }
    }
}

/// Clamps a transmission probability into `[0, 1]`, warning when it had to.
pub fn clamp_beta(beta: f64) -> Result<f64> {
    if beta.is_nan() || beta < 0.0 {
        return Err(Error::InvalidArgument(format!("beta must be nonnegative, got {beta}")));
    }
    if beta > 1.0 {
        log::warn!("beta {beta} exceeds 1 and is clamped to 1");
        return Ok(1.0);
    }
    Ok(beta)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SiOutcome {
    /// Ensemble-mean infected count for `t = 0..=t_max`.
    pub f_curve: Vec<f64>,
    pub final_mean: f64,
    pub per_run_finals: Vec<u32>,
    #[serde(skip)]
    pub per_run_curves: Vec<Vec<u32>>,
}

impl SiOutcome {
    /// Standard error of the ensemble mean at step `t`.
    pub fn std_error_at(&self, t: usize) -> f64 {
        let runs = self.per_run_curves.len();
        if runs < 2 {
            return 0.0;
        }
        let mean = self.f_curve[t];
        let var = self
            .per_run_curves
            .iter()
            .map(|c| (c[t] as f64 - mean).powi(2))
            .sum::<f64>()
            / (runs - 1) as f64;
        (var / runs as f64).sqrt()
    }
}

/// SplitMix64 finaliser.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one experiment (a measure's seed set, a single-node probe, ...).
pub fn experiment_seed(master: u64, experiment: u64) -> u64 {
    mix64(mix64(master) ^ experiment.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

fn shared_uniform(stream: u64, t: usize, u: u32, v: u32) -> f64 {
    let h = mix64(stream ^ mix64((t as u64) << 32 ^ u as u64) ^ mix64(v as u64).rotate_left(17));
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// One trajectory: infected counts for `t = 0..=t_max`.
pub fn run_trajectory(
    g: &Graph,
    seeds: &[NodeId],
    beta: f64,
    t_max: usize,
    mode: DrawMode,
    stream_seed: u64,
    run: u64,
) -> Vec<u32> {
    let n = g.node_count();
    let mut infected = vec![false; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    for &s in seeds {
        if !infected[s.index()] {
            infected[s.index()] = true;
            order.push(s.0);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed);
    rng.set_stream(run);
    let shared_stream = mix64(stream_seed ^ mix64(run));

    let mut curve = Vec::with_capacity(t_max + 1);
    curve.push(order.len() as u32);
    let mut fresh: Vec<u32> = Vec::new();
    for t in 1..=t_max {
        if order.len() == n {
            curve.push(n as u32);
            continue;
        }
        fresh.clear();
        for &u in &order {
            for &v in g.neighbors(NodeId(u)) {
                if infected[v as usize] {
                    continue;
                }
                let draw = match mode {
                    DrawMode::Sequential => rng.random::<f64>(),
                    DrawMode::Shared => shared_uniform(shared_stream, t, u, v),
                };
                if draw < beta {
                    // marks now so later attempts this step skip it; it is
                    // not in `order` yet, so it cannot transmit until t+1
                    infected[v as usize] = true;
                    fresh.push(v);
                }
            }
        }
        order.extend_from_slice(&fresh);
        curve.push(order.len() as u32);
    }
    curve
}

/// Ensemble SI simulation for one seed set.
pub fn simulate_si(g: &Graph, seeds: &[NodeId], cfg: &SiConfig) -> Result<SiOutcome> {
    simulate_si_experiment(g, seeds, cfg, 0)
}

/// As [`simulate_si`], drawing from the streams of `experiment`.
pub fn simulate_si_experiment(
    g: &Graph,
    seeds: &[NodeId],
    cfg: &SiConfig,
    experiment: u64,
) -> Result<SiOutcome> {
    cfg.validate()?;
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("seed set is empty".into()));
    }
    for &s in seeds {
        g.check(s)?;
    }
    let stream = experiment_seed(cfg.seed, experiment);
    let per_run_curves: Vec<Vec<u32>> = (0..cfg.runs as u64)
        .into_par_iter()
        .map(|run| run_trajectory(g, seeds, cfg.beta, cfg.t_max, cfg.draw_mode, stream, run))
        .collect();
    Ok(summarise(per_run_curves, cfg.t_max))
}

fn summarise(per_run_curves: Vec<Vec<u32>>, t_max: usize) -> SiOutcome {
    let runs = per_run_curves.len() as f64;
    let f_curve: Vec<f64> = (0..=t_max)
        .map(|t| per_run_curves.iter().map(|c| c[t] as u64).sum::<u64>() as f64 / runs)
        .collect();
    let per_run_finals = per_run_curves.iter().map(|c| c[t_max]).collect();
    SiOutcome {
        final_mean: f_curve[t_max],
        f_curve,
        per_run_finals,
        per_run_curves,
    }
}

/// Mean final infected count with each node as the sole seed. Node `v` uses
/// experiment `v`, so a node's score does not depend on which others are probed.
pub fn spreading_power(g: &Graph, cfg: &SiConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    g.nodes()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|v| single_seed_mean(g, v, cfg))
        .collect()
}

pub(crate) fn single_seed_mean(g: &Graph, v: NodeId, cfg: &SiConfig) -> Result<f64> {
    let stream = experiment_seed(cfg.seed, v.0 as u64);
    let total: u64 = (0..cfg.runs as u64)
        .map(|run| {
            let curve = run_trajectory(g, &[v], cfg.beta, cfg.t_max, cfg.draw_mode, stream, run);
            curve[cfg.t_max] as u64
        })
        .sum();
    Ok(total as f64 / cfg.runs as f64)
}

/// F(t) for the top-`k` nodes of each ranking used as one seed set.
///
/// All rankings share the same run streams (common random numbers), so
/// identical seed sets give identical curves and differences between
/// measures are not blurred by independent sampling noise.
pub fn top_k_infection_curves<S: AsRef<str>>(
    g: &Graph,
    rankings: &[(S, &crate::centrality::Ranking)],
    k: usize,
    cfg: &SiConfig,
) -> Result<Vec<(String, SiOutcome)>> {
    if k == 0 || k > g.node_count() {
        return Err(Error::InvalidArgument(format!(
            "k must lie in 1..={}, got {k}",
            g.node_count()
        )));
    }
    rankings
        .iter()
        .map(|(name, ranking)| {
            if ranking.len() != g.node_count() {
                return Err(Error::DimensionMismatch {
                    expected: g.node_count(),
                    found: ranking.len(),
                });
            }
            let outcome = simulate_si(g, ranking.top(k), cfg)?;
            Ok((name.as_ref().to_owned(), outcome))
        })
        .collect()
}
