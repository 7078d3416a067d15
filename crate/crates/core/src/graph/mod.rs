//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted and
//! mirrored in per-vertex bitsets so that both iteration and adjacency tests
//! are cheap.

mod generate;
mod io;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use generate::{figure1, Family};
pub use io::{parse_edge_list, serialize_edge_list, to_dot};

pub type VertexId = usize;

/// Edges as canonical pairs, ordered by `(min, max)`.
pub type EdgeSet = BTreeSet<Edge>;

/// An unordered vertex pair stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> VertexId {
        self.0
    }

    pub fn v(&self) -> VertexId {
        self.1
    }

    pub fn has_endpoint(&self, x: VertexId) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((a, b): (VertexId, VertexId)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    adjacency_bits: Vec<FixedBitSet>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            adjacency_bits: vec![FixedBitSet::with_capacity(n); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `n` vertices, rejecting self-loops, repeated pairs
    /// and ids outside `0..n`.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            g.insert_edge(e.into())?;
        }
        for list in &mut g.adjacency {
            list.sort_unstable();
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn insert_edge(&mut self, e: Edge) -> Result<()> {
        let n = self.n();
        for x in [e.u(), e.v()] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if e.u() == e.v() {
            return Err(Error::SelfLoop(e.u()));
        }
        if self.adjacency_bits[e.u()].contains(e.v()) {
            return Err(Error::DuplicateEdge(e));
        }
        self.adjacency[e.u()].push(e.v());
        self.adjacency[e.v()].push(e.u());
        self.adjacency_bits[e.u()].insert(e.v());
        self.adjacency_bits[e.v()].insert(e.u());
        self.edges.push(e);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n() && self.adjacency_bits[a].contains(b)
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Sorted neighbor list of `v`.
    ///
    /// Panics if `v` is out of range; see [`Graph::open_neighborhood`] for
    /// the checked variant.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub(crate) fn neighbor_bits(&self, v: VertexId) -> &FixedBitSet {
        &self.adjacency_bits[v]
    }

    /// N(v). Never contains `v` itself.
    pub fn open_neighborhood(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        self.check(v)?;
        Ok(self.adjacency[v].iter().copied().collect())
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Edges with both endpoints in `s`. Ids outside the graph have no edges
    /// and so contribute nothing.
    pub fn edges_within(&self, s: &BTreeSet<VertexId>) -> EdgeSet {
        self.edges_where(|e| s.contains(&e.u()) && s.contains(&e.v()))
    }

    /// Edges with no endpoint in `s`, i.e. the edge set of `G - s`.
    pub fn edges_avoiding(&self, s: &BTreeSet<VertexId>) -> EdgeSet {
        self.edges_where(|e| !s.contains(&e.u()) && !s.contains(&e.v()))
    }

    fn edges_where(&self, keep: impl Fn(&Edge) -> bool) -> EdgeSet {
        self.edges.iter().copied().filter(|e| keep(e)).collect()
    }

    pub fn is_independent(&self, s: &BTreeSet<VertexId>) -> bool {
        self.first_edge_within(s).is_none()
    }

    /// Some edge inside `s`, if any; used to explain independence failures.
    pub fn first_edge_within(&self, s: &BTreeSet<VertexId>) -> Option<Edge> {
        s.iter()
            .filter(|&&u| u < self.n())
            .flat_map(|&u| self.adjacency[u].iter().map(move |&w| (u, w)))
            .find(|&(u, w)| u < w && s.contains(&w))
            .map(|(u, w)| Edge(u, w))
    }

    /// Two-colors each component by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}
