//! Set-labels, sumsets and weak integer additive set-labelings.
//!
//! A labeling assigns each vertex a distinct nonempty set of non-negative
//! integers and each edge the sumset of its endpoint labels. It is weak when
//! every edge label is exactly as large as one of its endpoint labels, which
//! happens precisely when every edge has a singleton endpoint.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// A finite nonempty set of non-negative integers, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetLabel(Vec<u64>);

impl SetLabel {
    /// Returns `None` for an empty input.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Option<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        (!v.is_empty()).then_some(SetLabel(v))
    }

    pub fn singleton(x: u64) -> Self {
        SetLabel(vec![x])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    /// The set-indexing number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; labels are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn max(&self) -> u64 {
        *self.0.last().unwrap()
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// `{x + y : x ∈ a, y ∈ b}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> SetLabel {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in &a.0 {
        out.extend(b.0.iter().map(|&y| x + y));
    }
    out.sort_unstable();
    out.dedup();
    SetLabel(out)
}

/// The ground set `{0, 1, ..., max_element}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSet {
    pub max_element: u64,
}

impl GroundSet {
    pub fn contains(&self, label: &SetLabel) -> bool {
        label.max() <= self.max_element
    }

    pub fn len(&self) -> u64 {
        self.max_element + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiaslLabeling {
    pub vertex_labels: Vec<SetLabel>,
    pub edge_labels: BTreeMap<Edge, SetLabel>,
    pub independent_set: BTreeSet<VertexId>,
    pub ground_set: GroundSet,
}

impl WiaslLabeling {
    /// Wraps arbitrary vertex labels, inducing every edge label as a sumset.
    /// The ground set is the smallest one containing all labels.
    pub fn from_vertex_labels(
        g: &Graph,
        vertex_labels: Vec<SetLabel>,
        independent_set: BTreeSet<VertexId>,
    ) -> Self {
        let edge_labels = g
            .edges()
            .iter()
            .filter(|e| e.v() < vertex_labels.len())
            .map(|&e| (e, sumset(&vertex_labels[e.u()], &vertex_labels[e.v()])))
            .collect();
        let max_element = vertex_labels.iter().map(SetLabel::max).max().unwrap_or(0);
        WiaslLabeling {
            vertex_labels,
            edge_labels,
            independent_set,
            ground_set: GroundSet { max_element },
        }
    }
}

/// Labels `V - I` with `{0}, {1}, ...` and `I` with `{s, s+1}, {s+2, s+3},
/// ...` (where `s = |V - I|`), both in ascending vertex order.
pub fn build_labeling(g: &Graph, i: &BTreeSet<VertexId>) -> Result<WiaslLabeling> {
    if let Some(&v) = i.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidVertex {
            vertex: v,
            n: g.n(),
        });
    }
    if let Some(e) = g.first_edge_within(i) {
        return Err(Error::NotIndependent(e));
    }
    let s = (g.n() - i.len()) as u64;
    let mut next_single = 0u64;
    let mut next_pair = s;
    let vertex_labels: Vec<SetLabel> = g
        .vertices()
        .map(|v| {
            if i.contains(&v) {
                let label = SetLabel(vec![next_pair, next_pair + 1]);
                next_pair += 2;
                label
            } else {
                next_single += 1;
                SetLabel::singleton(next_single - 1)
            }
        })
        .collect();
    let mut lab = WiaslLabeling::from_vertex_labels(g, vertex_labels, i.clone());
    lab.ground_set = GroundSet {
        max_element: (s + 2 * i.len() as u64).saturating_sub(1),
    };
    Ok(lab)
}

/// Everything [`verify_wiasl`] found wrong, plus the mono-indexed edge count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub unlabeled_vertices: Vec<VertexId>,
    /// Pairs of vertices sharing a label.
    pub duplicate_labels: Vec<(VertexId, VertexId)>,
    pub outside_ground_set: Vec<VertexId>,
    /// Vertices whose label size disagrees with membership in the
    /// independent set.
    pub role_mismatches: Vec<VertexId>,
    /// Edges whose stored label is missing or is not the endpoint sumset.
    pub wrong_edge_labels: Vec<Edge>,
    /// Edges whose label size matches neither endpoint label size.
    pub weak_violations: Vec<Edge>,
    /// Edges with two non-singleton endpoints.
    pub uncovered_edges: Vec<Edge>,
    pub mono_indexed_edge_count: usize,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.unlabeled_vertices.is_empty()
            && self.duplicate_labels.is_empty()
            && self.outside_ground_set.is_empty()
            && self.role_mismatches.is_empty()
            && self.wrong_edge_labels.is_empty()
            && self.weak_violations.is_empty()
            && self.uncovered_edges.is_empty()
    }
}

/// Runs every check over every vertex and edge; nothing stops at the first
/// failure.
pub fn verify_wiasl(g: &Graph, lab: &WiaslLabeling) -> VerificationReport {
    let mut report = VerificationReport::default();
    let label = |v: VertexId| lab.vertex_labels.get(v);

    report.unlabeled_vertices = g.vertices().filter(|&v| label(v).is_none()).collect();

    let mut first_owner: HashMap<&SetLabel, VertexId> = HashMap::new();
    for (v, l) in lab.vertex_labels.iter().enumerate().take(g.n()) {
        if let Some(&u) = first_owner.get(l) {
            report.duplicate_labels.push((u, v));
        } else {
            first_owner.insert(l, v);
        }
        if !lab.ground_set.contains(l) {
            report.outside_ground_set.push(v);
        }
        if lab.independent_set.contains(&v) == l.is_singleton() {
            report.role_mismatches.push(v);
        }
    }

    for &e in g.edges() {
        let (Some(fu), Some(fv)) = (label(e.u()), label(e.v())) else {
            continue;
        };
        let expected = sumset(fu, fv);
        let edge_label = match lab.edge_labels.get(&e) {
            Some(stored) if *stored == expected => stored,
            Some(stored) => {
                report.wrong_edge_labels.push(e);
                stored
            }
            None => {
                report.wrong_edge_labels.push(e);
                &expected
            }
        };
        if edge_label.len() != fu.len() && edge_label.len() != fv.len() {
            report.weak_violations.push(e);
        }
        if !fu.is_singleton() && !fv.is_singleton() {
            report.uncovered_edges.push(e);
        }
        if edge_label.is_singleton() {
            report.mono_indexed_edge_count += 1;
        }
    }
    report
}

/// Number of edges whose label is a singleton. Missing edge labels are
/// induced from the endpoint labels.
pub fn mono_indexed_count(g: &Graph, lab: &WiaslLabeling) -> usize {
    g.edges()
        .iter()
        .filter(|e| match lab.edge_labels.get(e) {
            Some(l) => l.is_singleton(),
            None => {
                lab.vertex_labels[e.u()].is_singleton() && lab.vertex_labels[e.v()].is_singleton()
            }
        })
        .count()
}
