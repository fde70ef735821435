//! Test-only oracles. Nothing here calls into the code paths it checks
//! beyond reading the graph's adjacency.

#![allow(dead_code)]

use gravrank::{Graph, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi style graph on `n` nodes, possibly disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Random spanning tree plus extra edges with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.node_count())
        .map(|i| g.neighbors(NodeId::from(i)).iter().map(|&v| v as usize).collect())
        .collect()
}

/// Maximum random-walk probability product over every simple path from
/// `source`, by exhaustive depth-first enumeration. Entry `source` and
/// unreachable entries are 0.
pub fn best_path_probability(g: &Graph, source: usize) -> Vec<f64> {
    let adj = adjacency(g);
    let mut best = vec![0.0f64; adj.len()];
    let mut on_path = vec![false; adj.len()];
    fn walk(adj: &[Vec<usize>], u: usize, prob: f64, on_path: &mut [bool], best: &mut [f64]) {
        on_path[u] = true;
        let step = 1.0 / adj[u].len() as f64;
        for &v in &adj[u] {
            if on_path[v] {
                continue;
            }
            let p = prob * step;
            if p > best[v] {
                best[v] = p;
            }
            walk(adj, v, p, on_path, best);
        }
        on_path[u] = false;
    }
    walk(&adj, source, 1.0, &mut on_path, &mut best);
    best[source] = 0.0;
    best
}

/// `min over simple paths of 1 - log2(product)`, infinite when unreachable or on the diagonal.
pub fn brute_effective_distances(g: &Graph, source: usize) -> Vec<f64> {
    best_path_probability(g, source)
        .into_iter()
        .map(|p| if p > 0.0 { 1.0 - p.log2() } else { f64::INFINITY })
        .collect()
}

/// Every shortest path between `s` and `t`, listed explicitly.
pub fn all_shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = adj.len();
    // plain BFS layer numbers from s
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut frontier = vec![s];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    if dist[t] == usize::MAX {
        return Vec::new();
    }
    let mut paths = Vec::new();
    let mut path = vec![s];
    fn extend(
        adj: &[Vec<usize>],
        dist: &[usize],
        t: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for &v in &adj[u] {
            if dist[v] == dist[u] + 1 && dist[v] <= dist[t] {
                path.push(v);
                extend(adj, dist, t, path, out);
                path.pop();
            }
        }
    }
    extend(&adj, &dist, t, &mut path, &mut paths);
    paths
}

/// Betweenness by enumerating all shortest paths for each unordered pair.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = all_shortest_paths(g, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    bc[v] += 1.0 / total;
                }
            }
        }
    }
    bc
}

/// (concordant, discordant) by direct double loop.
pub fn brute_kendall_counts(x: &[f64], y: &[f64]) -> (u64, u64) {
    let (mut c, mut d) = (0, 0);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let sx = (x[i] > x[j]) as i8 - (x[i] < x[j]) as i8;
            let sy = (y[i] > y[j]) as i8 - (y[i] < y[j]) as i8;
            match sx * sy {
                1 => c += 1,
                -1 => d += 1,
                _ => {}
            }
        }
    }
    (c, d)
}

/// The seven-node worked example: degrees (6, 2, 2, 3, 4, 2, 1).
pub const WORKED_EXAMPLE: &str = "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n2 5\n3 5\n4 5\n4 6\n";

pub fn worked_example() -> Graph {
    Graph::parse_edge_list(WORKED_EXAMPLE, &Default::default()).unwrap().0
}
