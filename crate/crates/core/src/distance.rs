//! Dense all-pairs distance storage shared by the hop and effective-distance
//! routes. Unreachable entries hold `f64::INFINITY`.

use std::collections::VecDeque;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::graph::{bfs_into, Graph, HopDistanceRow, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceKind {
    /// Symmetric hop counts with a zero diagonal.
    Hop,
    /// Asymmetric effective distances with an infinite diagonal.
    Effective,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    kind: DistanceKind,
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub(crate) fn from_rows(kind: DistanceKind, rows: Vec<Vec<f64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "distance rows must be square");
            data.extend(row);
        }
        DistanceMatrix { kind, n, data }
    }

    /// All-pairs hop distances as reals.
    pub fn hops(g: &Graph) -> Self {
        let n = g.node_count();
        let rows = (0..n)
            .into_par_iter()
            .map(|s| {
                let mut dist = vec![HopDistanceRow::UNREACHABLE; n];
                bfs_into(g, NodeId::from(s), &mut dist, &mut VecDeque::new());
                dist.into_iter()
                    .map(|d| {
                        if d == HopDistanceRow::UNREACHABLE {
                            f64::INFINITY
                        } else {
                            d as f64
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(DistanceKind::Hop, rows)
    }

    pub fn kind(&self) -> DistanceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, from: NodeId, to: NodeId) -> f64 {
        self.data[from.index() * self.n + to.index()]
    }

    pub fn row(&self, from: NodeId) -> &[f64] {
        let i = from.index();
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Header of target labels, then one line per source; `inf` marks the sentinel.
    pub fn write_csv<W: Write>(&self, g: &Graph, mut out: W) -> io::Result<()> {
        write!(out, "source")?;
        for label in g.labels() {
            write!(out, ",{label}")?;
        }
        writeln!(out)?;
        for s in g.nodes() {
            write!(out, "{}", g.label(s))?;
            for &d in self.row(s) {
                if d.is_finite() {
                    write!(out, ",{d}")?;
                } else {
                    write!(out, ",inf")?;
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
