//! Simple labelled graphs on vertices `1..=n` with a lexicographic edge order.

mod enumerate;
mod io;
mod kuratowski;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{connected_graphs, graphs_up_to_iso, is_connected, MAX_ENUMERATION_N};
pub use io::{encode_graph6, parse_corpus, parse_edge_list, parse_graph, parse_graph6, GraphFormat};
pub use kuratowski::{find_kuratowski_subdivision, is_planar, KuratowskiKind, SubdivisionWitness};

pub type Edge = (u16, u16);

/// A simple graph. Vertices are `1..=n`; every edge `(i, j)` has `i < j` and the
/// edge list is strictly increasing, so `edges[k]` is the edge `e_{k+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Indices `(i, j)`, `i < j`, of two edges.
pub type EdgePair = (usize, usize);

/// Serialized form `{"n": 5, "edges": [[1, 2], ...]}`, validated on the way in.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges }
    }
}

/// An unnormalized graph as read from input: loops and repeated edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGraph {
    pub n: usize,
    /// Each pair stored as `(min, max)`; sorted, repeats kept.
    pub edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationReport {
    /// A loop makes the homology vanish, so callers can skip computation.
    pub had_loop: bool,
    pub collapsed_multiedges: usize,
}

impl NormalizationReport {
    pub fn is_clear(&self) -> bool {
        !self.had_loop && self.collapsed_multiedges == 0
    }
}

impl RawGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: v as i64, n });
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(RawGraph { n, edges: out })
    }
}

impl From<&Graph> for RawGraph {
    fn from(g: &Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}

/// Drops loops (flagging them) and collapses parallel edges.
pub fn normalize(raw: &RawGraph) -> (Graph, NormalizationReport) {
    let mut report = NormalizationReport::default();
    let mut edges: Vec<Edge> = Vec::with_capacity(raw.edges.len());
    for &(a, b) in &raw.edges {
        if a == b {
            report.had_loop = true;
            continue;
        }
        edges.push((a, b));
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    report.collapsed_multiedges = before - edges.len();
    (Graph { n: raw.n, edges }, report)
}

impl Graph {
    /// Builds a simple graph, sorting the edges. Loops, duplicate edges and
    /// out-of-range vertices are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let raw = RawGraph::new(n, edges)?;
        let (g, report) = normalize(&raw);
        if report.had_loop {
            return Err(Error::InvalidShape("simple graph cannot contain a loop".into()));
        }
        if report.collapsed_multiedges > 0 {
            let dup = raw.edges.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).unwrap();
            return Err(Error::Parse {
                line: 0,
                msg: format!("duplicate edge ({}, {})", dup.0, dup.1),
            });
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n as u16 {
            for j in i + 1..=n as u16 {
                edges.push((i, j));
            }
        }
        Graph { n, edges }
    }

    /// `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=a as u16 {
            for j in a as u16 + 1..=(a + b) as u16 {
                edges.push((i, j));
            }
        }
        Graph { n: a + b, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges = (1..=n as u16).map(|i| (i, if i as usize == n { 1 } else { i + 1 }));
        Graph::new(n, edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n as u16).map(|i| (i, i + 1))).expect("path is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5u16).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5u16).map(|i| (i + 1, i + 6));
        let inner = (0..5u16).map(|i| (i + 6, (i + 2) % 5 + 6));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Zero-based position of an edge in the lexicographic order.
    pub fn edge_index(&self, a: u16, b: u16) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: u16, b: u16) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn degree(&self, v: u16) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: u16) -> Vec<u16> {
        let mut out: Vec<u16> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<u16>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Pairs `(i, j)`, `i < j`, of zero-based edge indices split by whether the
    /// two edges are vertex-disjoint (component type `(2,2,1..)`) or share a
    /// vertex (type `(3,1..)`). Both lists are lexicographic.
    pub fn edge_pairs_by_type(&self) -> (Vec<EdgePair>, Vec<EdgePair>) {
        let mut disjoint = Vec::new();
        let mut adjacent = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    adjacent.push((i, j));
                } else {
                    disjoint.push((i, j));
                }
            }
        }
        (disjoint, adjacent)
    }

    /// Inserts the new vertex `n + 1` into the edge `(a, b)`.
    pub fn subdivide(&self, a: u16, b: u16) -> Result<Graph> {
        let idx = self.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
        let new = self.n as u16 + 1;
        let (a, b) = self.edges[idx];
        let mut edges = self.edges.clone();
        edges.remove(idx);
        edges.push((a, new));
        edges.push((b, new));
        Graph::new(self.n + 1, edges)
    }

    /// The graph with every vertex `v` renamed `map[v - 1]`; `map` must be a
    /// bijection onto `1..=n`.
    pub fn relabel(&self, map: &[u16]) -> Result<Graph> {
        if map.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "relabelling of length {} for a graph on {} vertices",
                map.len(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (map[a as usize - 1], map[b as usize - 1]));
        Graph::new(self.n, edges)
    }

    /// Adds `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        Graph {
            n: self.n + extra,
            edges: self.edges.clone(),
        }
    }

    pub fn add_edge(&self, a: u16, b: u16) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((a, b));
        Graph::new(self.n, edges)
    }

    pub fn remove_edge(&self, a: u16, b: u16) -> Result<Graph> {
        let idx = self.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// Canonical text id: the edge-list form on one line, e.g. `5:1-2,1-3`.
    pub fn id(&self) -> String {
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        format!("{}:{}", self.n, edges.join(","))
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.id())
    }
}
