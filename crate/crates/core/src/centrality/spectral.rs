//! Iterative measures: eigenvector centrality and PageRank.

use super::{Convergence, Measure, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

fn adjacency_times(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (i, o) in out.iter_mut().enumerate() {
        *o = g.neighbors(NodeId::from(i)).iter().map(|&j| x[j as usize]).sum();
    }
}

fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Principal adjacency eigenvector, unit Euclidean norm, nonnegative.
///
/// Power iteration runs on `A + I`: same eigenvectors, but the shift makes the
/// leading eigenvalue strictly dominant on bipartite graphs, where plain
/// iteration on `A` would oscillate between `λ` and `-λ`. Stops once
/// `‖Ax - λx‖₂ ≤ tol` with `λ` the Rayleigh quotient. On a disconnected
/// graph the result is supported on the component(s) with the largest `λ`.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iter: usize) -> Result<ScoreVector> {
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Err(Error::InvalidArgument(
            "eigenvector centrality needs at least one edge".into(),
        ));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iter in 0..=max_iter {
        adjacency_times(g, &x, &mut ax);
        let lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = ax
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            let mut sv = ScoreVector::new(Measure::Ec, x.iter().map(|v| v.max(0.0)).collect());
            sv.convergence = Some(Convergence {
                iterations: iter,
                residual,
                eigenvalue: Some(lambda),
            });
            return Ok(sv);
        }
        if iter == max_iter {
            break;
        }
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi += ai;
        }
        let norm = norm2(&x);
        x.iter_mut().for_each(|v| *v /= norm);
    }
    Err(Error::NonConvergence {
        measure: "eigenvector centrality",
        iterations: max_iter,
        residual,
        hint: "",
    })
}

/// Random-walk PageRank on an undirected graph.
///
/// `PC(i) <- (1 - δ)/n' + δ Σ_j a_ij PC(j) / k_j`, started from the uniform
/// vector over the `n'` non-isolated nodes, until the L1 change is at most
/// `tol`. Isolated nodes score zero. With `δ = 1` there is no teleport term
/// and the iteration fails to settle on bipartite components.
pub fn pagerank(g: &Graph, tol: f64, max_iter: usize, damping: f64) -> Result<ScoreVector> {
    if !(0.0..=1.0).contains(&damping) || damping.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "damping must lie in [0, 1], got {damping}"
        )));
    }
    let n = g.node_count();
    let degrees = g.degrees();
    let active = degrees.iter().filter(|&&k| k > 0).count();
    if active == 0 {
        let mut sv = ScoreVector::new(Measure::PageRank, vec![0.0; n]);
        sv.convergence = Some(Convergence {
            iterations: 0,
            residual: 0.0,
            eigenvalue: None,
        });
        return Ok(sv);
    }
    let teleport = (1.0 - damping) / active as f64;
    let mut x: Vec<f64> = degrees
        .iter()
        .map(|&k| if k > 0 { 1.0 / active as f64 } else { 0.0 })
        .collect();
    let mut share = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut change = f64::INFINITY;
    for iter in 1..=max_iter {
        for (s, (&xi, &k)) in share.iter_mut().zip(x.iter().zip(&degrees)) {
            *s = if k > 0 { xi / k as f64 } else { 0.0 };
        }
        adjacency_times(g, &share, &mut next);
        for (v, &k) in next.iter_mut().zip(&degrees) {
            if k > 0 {
                *v = teleport + damping * *v;
            }
        }
        change = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if change <= tol {
            let mut sv = ScoreVector::new(Measure::PageRank, x);
            sv.convergence = Some(Convergence {
                iterations: iter,
                residual: change,
                eigenvalue: None,
            });
            return Ok(sv);
        }
    }
    Err(Error::NonConvergence {
        measure: "pagerank",
        iterations: max_iter,
        residual: change,
        hint: if damping == 1.0 {
            "; the undamped walk oscillates on bipartite graphs, try a damping factor below 1"
        } else {
            ""
        },
    })
}
