//! The iterative maximum-degree construction of a weak labeling.
//!
//! Each round picks an unlabeled vertex of largest degree, gives it a
//! non-singleton label, gives singleton labels to all of its neighbors and
//! records the edges running between those neighbors as mono-indexed. The
//! loop ends once every vertex is labeled.
//!
//! The neighborhood-by-neighborhood accumulator can miss a mono edge whose
//! endpoints were singleton-labeled in different rounds, so the reported
//! `phi` is always recomputed as `|E(G - I)|` and the accumulator is kept
//! alongside as `phi_literal`.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::error::{Error, PickError, Result};
use crate::graph::{EdgeSet, Graph, VertexId};
use crate::result::{Method, SparingResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Unlabeled,
    Chosen,
    Singleton,
}

/// What one round of the loop did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    pub picked: VertexId,
    /// Degree of `picked` in the input graph. Equal to its degree in the
    /// graph with all previously chosen vertices deleted, since an
    /// unlabeled vertex never neighbors a chosen one.
    pub degree_at_pick: usize,
    /// Neighbors of `picked` that received their singleton label this round.
    pub new_singletons: BTreeSet<VertexId>,
    /// Edges inside `N(picked)` not already in the accumulator.
    pub new_mono_edges: EdgeSet,
}

#[derive(Debug, Clone)]
pub struct GreedyState {
    status: Vec<Status>,
    chosen: Vec<VertexId>,
    singleton_labeled: BTreeSet<VertexId>,
    mono_edges_literal: EdgeSet,
    trace: Vec<IterationRecord>,
}

impl GreedyState {
    pub fn new(g: &Graph) -> Self {
        GreedyState {
            status: vec![Status::Unlabeled; g.n()],
            chosen: Vec::new(),
            singleton_labeled: BTreeSet::new(),
            mono_edges_literal: EdgeSet::new(),
            trace: Vec::new(),
        }
    }

    /// Chosen vertices in pick order.
    pub fn chosen(&self) -> &[VertexId] {
        &self.chosen
    }

    pub fn singleton_labeled(&self) -> &BTreeSet<VertexId> {
        &self.singleton_labeled
    }

    pub fn mono_edges_literal(&self) -> &EdgeSet {
        &self.mono_edges_literal
    }

    pub fn trace(&self) -> &[IterationRecord] {
        &self.trace
    }

    pub fn iteration(&self) -> usize {
        self.trace.len()
    }

    pub fn is_unlabeled(&self, v: VertexId) -> bool {
        self.status.get(v) == Some(&Status::Unlabeled)
    }

    pub fn unlabeled(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.status
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Status::Unlabeled)
            .map(|(v, _)| v)
    }

    /// An unlabeled vertex of maximum degree, smallest id first on ties.
    pub fn select_next(&self, g: &Graph) -> Option<VertexId> {
        self.unlabeled()
            .max_by_key(|&v| (g.neighbors(v).len(), Reverse(v)))
    }

    /// Degree of `v` once every chosen vertex is deleted from `g`.
    pub fn reduced_degree(&self, g: &Graph, v: VertexId) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.status[w] != Status::Chosen)
            .count()
    }

    fn check_pick(&self, g: &Graph, v: VertexId) -> std::result::Result<(), PickError> {
        match self.status.get(v) {
            None => Err(PickError::OutOfRange),
            Some(Status::Chosen) => Err(PickError::AlreadyChosen),
            Some(Status::Singleton) => {
                // a singleton vertex always neighbors the chosen vertex that labeled it
                match g
                    .neighbors(v)
                    .iter()
                    .find(|&&w| self.status[w] == Status::Chosen)
                {
                    Some(&w) => Err(PickError::AdjacentToChosen(w)),
                    None => Err(PickError::AlreadyLabeled),
                }
            }
            Some(Status::Unlabeled) => Ok(()),
        }
    }

    /// Chooses `v`: labels it non-singleton, labels its neighbors singleton
    /// and adds every edge inside `N(v)` to the literal accumulator.
    pub fn step(&mut self, g: &Graph, v: VertexId) -> Result<&IterationRecord> {
        self.check_pick(g, v)
            .map_err(|reason| Error::InvalidPick { vertex: v, reason })?;

        let degree_at_pick = g.neighbors(v).len();
        assert_eq!(
            degree_at_pick,
            self.reduced_degree(g, v),
            "unlabeled vertex {v} neighbors a chosen vertex"
        );

        let neighborhood = g.neighbors(v);
        let mut new_singletons = BTreeSet::new();
        for &w in neighborhood {
            debug_assert_ne!(self.status[w], Status::Chosen);
            if self.status[w] == Status::Unlabeled {
                self.status[w] = Status::Singleton;
                self.singleton_labeled.insert(w);
                new_singletons.insert(w);
            }
        }

        let mut new_mono_edges = EdgeSet::new();
        for (i, &r) in neighborhood.iter().enumerate() {
            for &s in &neighborhood[i + 1..] {
                if g.has_edge(r, s) {
                    let e = (r, s).into();
                    if self.mono_edges_literal.insert(e) {
                        new_mono_edges.insert(e);
                    }
                }
            }
        }

        self.status[v] = Status::Chosen;
        self.chosen.push(v);
        self.trace.push(IterationRecord {
            picked: v,
            degree_at_pick,
            new_singletons,
            new_mono_edges,
        });
        Ok(self.trace.last().unwrap())
    }

    /// Computes the final result. Call once no unlabeled vertex remains.
    pub fn finish(self, g: &Graph) -> SparingResult {
        let independent_set: BTreeSet<_> = self.chosen.iter().copied().collect();
        let mono_edges = g.edges_avoiding(&independent_set);
        debug_assert!(self.mono_edges_literal.is_subset(&mono_edges));
        let discrepancy = mono_edges
            .difference(&self.mono_edges_literal)
            .copied()
            .collect();
        SparingResult {
            phi: mono_edges.len(),
            phi_literal: Some(self.mono_edges_literal.len()),
            independent_set,
            mono_edges,
            discrepancy,
            trace: self.trace,
            method: Method::Greedy,
            optimal: false,
        }
    }
}

/// Runs the maximum-degree loop to completion.
pub fn run_greedy(g: &Graph) -> SparingResult {
    let mut state = GreedyState::new(g);
    while let Some(v) = state.select_next(g) {
        state
            .step(g, v)
            .expect("selected vertex is always unlabeled");
    }
    state.finish(g)
}

/// Replays a fixed pick order instead of selecting by degree. Every pick must
/// be unlabeled at its turn and the picks must leave nothing unlabeled.
pub fn replay_trace(g: &Graph, picks: &[VertexId]) -> Result<SparingResult> {
    let mut state = GreedyState::new(g);
    for (index, &v) in picks.iter().enumerate() {
        if let Err(Error::InvalidPick { vertex, reason }) = state.step(g, v) {
            return Err(Error::Replay {
                index,
                vertex,
                reason,
            });
        }
    }
    let unlabeled: Vec<_> = state.unlabeled().collect();
    if !unlabeled.is_empty() {
        return Err(Error::IncompleteReplay { unlabeled });
    }
    Ok(state.finish(g))
}
