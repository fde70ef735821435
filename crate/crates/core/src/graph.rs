//! Immutable undirected simple graph in compressed adjacency form, plus the
//! edge-list reader/writer and breadth-first hop distances.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense node index in `0..n`, assigned in first-appearance order at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(u32::try_from(i).expect("node index exceeds u32"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Accept lines with more than two tokens and use only the first two
    /// (KONECT-style weight or timestamp columns). Off by default.
    pub ignore_extra_columns: bool,
}

/// What ingestion dropped on the way to a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub data_lines: usize,
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    labels: Vec<String>,
    index: HashMap<String, u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.node_count())
            .field("m", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from labelled edges. Loops are dropped and duplicates
    /// merged; both are counted in the returned report.
    pub fn from_labeled_edges<I, S>(edges: I) -> Result<(Graph, ParseReport)>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut builder = Builder::default();
        for (a, b) in edges {
            builder.push(a.as_ref(), b.as_ref());
        }
        builder.finish()
    }

    /// Builds a graph over nodes `0..n` labelled by their index.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut builder = Builder::default();
        for i in 0..n {
            builder.intern(&i.to_string());
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::NodeOutOfRange { node: a.max(b), n });
            }
            builder.push(&a.to_string(), &b.to_string());
        }
        builder.finish().map(|(g, _)| g)
    }

    /// Reads a line-oriented edge list: two labels per line separated by
    /// whitespace or a comma, `#` and `%` lines are comments.
    pub fn parse_edge_list(text: &str, options: &ParseOptions) -> Result<(Graph, ParseReport)> {
        let mut builder = Builder::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
                continue;
            }
            let tokens: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let well_formed = tokens.len() == 2 || (options.ignore_extra_columns && tokens.len() > 2);
            if !well_formed {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two node labels, found {} token(s)", tokens.len()),
                });
            }
            builder.push(tokens[0], tokens[1]);
        }
        builder.finish()
    }

    /// Writes the graph back as an edge list, one edge per line, sorted by
    /// (smaller label, larger label). Integer labels sort numerically.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (a, b) in self.sorted_label_edges() {
            writeln!(out, "{a} {b}")?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to Vec cannot fail");
        String::from_utf8(buf).expect("labels are valid UTF-8")
    }

    fn sorted_label_edges(&self) -> Vec<(&str, &str)> {
        let mut edges: Vec<(&str, &str)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if compare_labels(a, b) == Ordering::Greater {
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect();
        edges.sort_by(|x, y| compare_labels(x.0, y.0).then_with(|| compare_labels(x.1, y.1)));
        edges
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(NodeId::from)
    }

    /// Each undirected edge once, as `(u, v)` with `u < v` by index.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u.0)
                .map(move |&v| (u, NodeId(v)))
        })
    }

    /// Sorted neighbor indices.
    #[inline]
    pub fn neighbors(&self, node: NodeId) -> &[u32] {
        let i = node.index();
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// k_i. Panics on an out-of-range node; see [`Graph::degree`] for the checked form.
    #[inline]
    pub fn deg(&self, node: NodeId) -> usize {
        let i = node.index();
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn degree(&self, node: NodeId) -> Result<usize> {
        self.check(node)?;
        Ok(self.deg(node))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nodes().map(|v| self.deg(v)).collect()
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        self.neighbors(a).binary_search(&b.0).is_ok()
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).map(|&i| NodeId(i))
    }

    pub fn check(&self, node: NodeId) -> Result<()> {
        if node.index() < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: node.index(),
                n: self.node_count(),
            })
        }
    }

    /// Breadth-first hop distances from `source`.
    pub fn hop_distances(&self, source: NodeId) -> Result<HopDistanceRow> {
        self.check(source)?;
        let mut dist = vec![HopDistanceRow::UNREACHABLE; self.node_count()];
        bfs_into(self, source, &mut dist, &mut VecDeque::new());
        Ok(HopDistanceRow { source, dist })
    }
}

/// Fills `dist` (pre-set to the unreachable sentinel) with BFS hop counts.
pub(crate) fn bfs_into(g: &Graph, source: NodeId, dist: &mut [u32], queue: &mut VecDeque<u32>) {
    queue.clear();
    dist[source.index()] = 0;
    queue.push_back(source.0);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &v in g.neighbors(NodeId(u)) {
            if dist[v as usize] == HopDistanceRow::UNREACHABLE {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

/// Integer labels compare numerically and sort before non-integer labels.
fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Hop counts from a single source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopDistanceRow {
    pub source: NodeId,
    dist: Vec<u32>,
}

impl HopDistanceRow {
    pub const UNREACHABLE: u32 = u32::MAX;

    /// `None` when `target` is in another component.
    pub fn get(&self, target: NodeId) -> Option<u32> {
        match self.dist[target.index()] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn raw(&self) -> &[u32] {
        &self.dist
    }
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    edges: HashSet<(u32, u32)>,
    order: Vec<(u32, u32)>,
    report: ParseReport,
}

impl Builder {
    fn intern(&mut self, label: &str) -> u32 {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = u32::try_from(self.labels.len()).expect("too many nodes");
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        i
    }

    fn push(&mut self, a: &str, b: &str) {
        self.report.data_lines += 1;
        let u = self.intern(a);
        let v = self.intern(b);
        if u == v {
            self.report.self_loops_dropped += 1;
            return;
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            self.order.push(key);
        } else {
            self.report.duplicates_merged += 1;
        }
    }

    fn finish(self) -> Result<(Graph, ParseReport)> {
        let n = self.labels.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut counts = vec![0usize; n + 1];
        for &(u, v) in &self.order {
            counts[u as usize + 1] += 1;
            counts[v as usize + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[n]];
        for &(u, v) in &self.order {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for i in 0..n {
            targets[offsets[i]..offsets[i + 1]].sort_unstable();
        }
        let graph = Graph {
            offsets,
            targets,
            labels: self.labels,
            index: self.index,
        };
        Ok((graph, self.report))
    }
}
