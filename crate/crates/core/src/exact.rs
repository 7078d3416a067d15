//! Exact sparing numbers.
//!
//! The sparing number is `min |E(G - I)|` over independent sets `I`. Adding a
//! vertex to an independent set never increases that count, so the minimum
//! is attained at a maximal independent set and it suffices to enumerate
//! those. For an independent `I` every edge meets `I` at most once, so
//! `|E(G - I)| = |E| - Σ_{v ∈ I} deg(v)` and the enumeration maximizes the
//! degree sum.
//!
//! [`Method::Brute`] walks every vertex subset instead and counts the
//! surviving edges directly; it is the oracle for the enumeration.
//! [`sparing_brute_labelings`] is a third route that assigns singleton or
//! non-singleton roles to vertices without reference to independent sets.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::greedy::run_greedy;
use crate::result::{Method, SparingResult};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactConfig {
    /// [`Method::Exact`] or [`Method::Brute`].
    pub method: Method,
    pub vertex_limit_brute: usize,
    pub time_budget: Option<Duration>,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            method: Method::Exact,
            vertex_limit_brute: 20,
            time_budget: None,
        }
    }
}

impl ExactConfig {
    pub fn brute() -> Self {
        ExactConfig {
            method: Method::Brute,
            ..Default::default()
        }
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

/// Hard ceiling for subset enumeration, independent of the configured limit.
const BRUTE_HARD_LIMIT: usize = 40;

/// Minimizes `|E(G - I)|` over independent sets. Among optimal sets the
/// lexicographically smallest maximal independent set is returned.
pub fn sparing_exact(g: &Graph, cfg: &ExactConfig) -> Result<SparingResult> {
    let deadline = cfg.time_budget.map(|b| Instant::now() + b);
    let (set, optimal) = match cfg.method {
        Method::Exact => enumerate_maximal(g, deadline),
        Method::Brute => {
            let limit = cfg.vertex_limit_brute.min(BRUTE_HARD_LIMIT);
            if g.n() > limit {
                return Err(Error::TooLarge { n: g.n(), limit });
            }
            brute_subsets(g, deadline)
        }
        Method::Greedy => {
            return Err(Error::InvalidParameter(
                "greedy is not an exact method".into(),
            ))
        }
    };
    let result = finish(g, set, cfg.method, optimal);
    if optimal {
        Ok(result)
    } else {
        Err(Error::BudgetExceeded {
            best: Box::new(result),
        })
    }
}

fn finish(
    g: &Graph,
    independent_set: BTreeSet<VertexId>,
    method: Method,
    optimal: bool,
) -> SparingResult {
    let mono_edges = g.edges_avoiding(&independent_set);
    SparingResult {
        phi: mono_edges.len(),
        phi_literal: None,
        independent_set,
        mono_edges,
        discrepancy: Default::default(),
        trace: Vec::new(),
        method,
        optimal,
    }
}

/// Number of edges with at least one endpoint in `i`.
pub fn max_incidence(g: &Graph, i: &BTreeSet<VertexId>) -> Result<usize> {
    if let Some(e) = g.first_edge_within(i) {
        return Err(Error::NotIndependent(e));
    }
    Ok(g.m() - g.edges_avoiding(i).len())
}

fn sorted_members(bits: &FixedBitSet) -> Vec<VertexId> {
    bits.ones().collect()
}

struct Incumbent {
    weight: usize,
    members: Vec<VertexId>,
}

impl Incumbent {
    /// Higher degree sum wins; equal sums fall back to lexicographic order.
    fn offer(&mut self, weight: usize, members: Vec<VertexId>) {
        if weight > self.weight || (weight == self.weight && members < self.members) {
            self.weight = weight;
            self.members = members;
        }
    }
}

struct Enumerator {
    degrees: Vec<usize>,
    /// `N[v]` as bitsets.
    closed: Vec<FixedBitSet>,
    best: Incumbent,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl Enumerator {
    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                self.timed_out = Instant::now() >= d;
            }
        }
        self.timed_out
    }

    /// Pivoted Bron–Kerbosch on the complement: `r` is independent, `p`
    /// holds vertices that can still join it and `x` holds excluded
    /// vertices that could also extend `r`.
    fn search(
        &mut self,
        r: &mut FixedBitSet,
        weight: usize,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
    ) {
        if self.out_of_time() {
            return;
        }
        if p.is_clear() {
            if x.is_clear() {
                let members = sorted_members(r);
                self.best.offer(weight, members);
            }
            return;
        }
        let bound = weight + p.ones().map(|v| self.degrees[v]).sum::<usize>();
        if bound < self.best.weight {
            return;
        }

        // Any maximal set extending r contains some vertex of N[u] ∩ p for
        // every u in p ∪ x, so branching on the smallest such
        // intersection is enough.
        let pivot = p
            .union(&x)
            .min_by_key(|&u| p.intersection(&self.closed[u]).count())
            .expect("p is nonempty");
        let branch: Vec<VertexId> = p.intersection(&self.closed[pivot]).collect();

        for v in branch {
            let mut next_p = p.clone();
            next_p.difference_with(&self.closed[v]);
            let mut next_x = x.clone();
            next_x.difference_with(&self.closed[v]);
            r.insert(v);
            self.search(r, weight + self.degrees[v], next_p, next_x);
            r.set(v, false);
            p.set(v, false);
            x.insert(v);
            if self.timed_out {
                return;
            }
        }
    }
}

fn enumerate_maximal(g: &Graph, deadline: Option<Instant>) -> (BTreeSet<VertexId>, bool) {
    let n = g.n();
    let degrees = g.degree_sequence();
    let closed = (0..n)
        .map(|v| {
            let mut bits = g.neighbor_bits(v).clone();
            bits.grow(n);
            bits.insert(v);
            bits
        })
        .collect();

    // every vertex is either chosen or next to a chosen one, so the greedy
    // set is maximal and a valid starting incumbent
    let seed = run_greedy(g).independent_set;
    let best = Incumbent {
        weight: seed.iter().map(|&v| degrees[v]).sum(),
        members: seed.into_iter().collect(),
    };

    let mut e = Enumerator {
        degrees,
        closed,
        best,
        deadline,
        nodes: 0,
        timed_out: false,
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    e.search(
        &mut FixedBitSet::with_capacity(n),
        0,
        p,
        FixedBitSet::with_capacity(n),
    );
    let optimal = !e.timed_out;
    let Enumerator { best, .. } = e;
    (best.members.into_iter().collect(), optimal)
}

fn mask_members(mask: u64, n: usize) -> Vec<VertexId> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exhaustive search over all `2^n` subsets.
fn brute_subsets(g: &Graph, deadline: Option<Instant>) -> (BTreeSet<VertexId>, bool) {
    let n = g.n();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();

    let mut best_phi = usize::MAX;
    let mut best_members: Vec<VertexId> = Vec::new();
    for mask in 0..(1u64 << n) {
        if mask % 4096 == 0 {
            if let Some(d) = deadline {
                if Instant::now() >= d {
                    let members = if best_members.is_empty() {
                        run_greedy(g).independent_set.into_iter().collect()
                    } else {
                        best_members
                    };
                    return (members.into_iter().collect(), false);
                }
            }
        }
        let independent = (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0);
        if !independent {
            continue;
        }
        let phi = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 0 && mask >> v & 1 == 0)
            .count();
        if phi > best_phi {
            continue;
        }
        let maximal = (0..n).all(|v| mask >> v & 1 == 1 || adj[v] & mask != 0);
        if phi < best_phi {
            best_phi = phi;
            // a non-maximal optimum still fixes the value; its maximal
            // extensions are at least as good and will be visited
            best_members = if maximal {
                mask_members(mask, n)
            } else {
                Vec::new()
            };
        } else if maximal {
            let members = mask_members(mask, n);
            if best_members.is_empty() || members < best_members {
                best_members = members;
            }
        }
    }
    (best_members.into_iter().collect(), true)
}

/// Upper limit for [`sparing_brute_labelings`].
pub const LABELING_ORACLE_LIMIT: usize = 16;

/// Minimum number of mono-indexed edges over all ways to mark each vertex
/// singleton or non-singleton such that every edge has a singleton end and
/// a ground set of `ground_set_size` elements can label the vertices
/// injectively.
pub fn sparing_brute_labelings(g: &Graph, ground_set_size: usize) -> Result<usize> {
    let n = g.n();
    if n > LABELING_ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: LABELING_ORACLE_LIMIT,
        });
    }
    // distinct singletons available, and distinct subsets of size >= 2
    let singletons = ground_set_size;
    let multi = if ground_set_size >= 63 {
        usize::MAX
    } else {
        (1usize << ground_set_size) - ground_set_size - 1
    };

    let mut best: Option<usize> = None;
    for roles in 0..(1u32 << n) {
        let is_single = |v: usize| roles >> v & 1 == 1;
        let single_count = roles.count_ones() as usize;
        if single_count > singletons || n - single_count > multi {
            continue;
        }
        let mut mono = 0;
        let mut weak = true;
        for e in g.edges() {
            match (is_single(e.u()), is_single(e.v())) {
                (true, true) => mono += 1,
                (false, false) => {
                    weak = false;
                    break;
                }
                _ => {}
            }
        }
        if weak {
            best = Some(best.map_or(mono, |b: usize| b.min(mono)));
        }
    }
    best.ok_or(Error::InfeasibleGroundSet {
        size: ground_set_size,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{figure1, Family};

    fn exact(g: &Graph) -> SparingResult {
        sparing_exact(g, &ExactConfig::default()).unwrap()
    }

    fn brute(g: &Graph) -> SparingResult {
        sparing_exact(g, &ExactConfig::brute()).unwrap()
    }

    #[test]
    fn figure1_optimum() {
        // frozen from an exhaustive search over all 2^14 subsets
        let g = figure1();
        for r in [exact(&g), brute(&g)] {
            assert_eq!(r.phi, 5);
            assert_eq!(r.independent_set, [1, 3, 5, 7, 10, 12].into());
            assert!(r.optimal);
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=9 {
            let g = Family::Complete(n).generate().unwrap();
            let want = (n - 1) * n.saturating_sub(2) / 2;
            assert_eq!(exact(&g).phi, want, "K{n}");
            assert_eq!(exact(&g).independent_set, [0].into());
        }
    }

    #[test]
    fn cycles_and_trees() {
        assert_eq!(exact(&Family::Cycle(5).generate().unwrap()).phi, 1);
        assert_eq!(exact(&Family::Cycle(4).generate().unwrap()).phi, 0);
        assert_eq!(brute(&Family::Cycle(5).generate().unwrap()).phi, 1);
        let t = Family::Tree { n: 12, seed: 5 }.generate().unwrap();
        assert_eq!(exact(&t).phi, 0);
    }

    #[test]
    fn lexicographic_tie_break() {
        // C4 optima are {0,2} and {1,3}
        let r = exact(&Family::Cycle(4).generate().unwrap());
        assert_eq!(r.independent_set, [0, 2].into());
        // isolated vertex 2 belongs to every maximal set
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(exact(&g).independent_set, [0, 2].into());
        assert_eq!(brute(&g).independent_set, [0, 2].into());
    }

    #[test]
    fn brute_refuses_large_graphs() {
        let g = Graph::empty(21);
        assert!(matches!(
            sparing_exact(&g, &ExactConfig::brute()),
            Err(Error::TooLarge { n: 21, limit: 20 })
        ));
        let cfg = ExactConfig {
            vertex_limit_brute: 4,
            ..ExactConfig::brute()
        };
        assert!(sparing_exact(&Graph::empty(5), &cfg).is_err());
    }

    #[test]
    fn zero_budget_reports_upper_bound() {
        let g = Family::Random {
            n: 60,
            p: 0.2,
            seed: 1,
        }
        .generate()
        .unwrap();
        let cfg = ExactConfig::default().with_budget(Duration::ZERO);
        match sparing_exact(&g, &cfg) {
            Err(Error::BudgetExceeded { best }) => {
                assert!(!best.optimal);
                assert!(g.is_independent(&best.independent_set));
                assert!(best.phi <= run_greedy(&g).phi);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn incidence() {
        let g = figure1();
        let i = [2, 11, 6, 9, 13].into();
        assert_eq!(max_incidence(&g, &i).unwrap(), 20);
        assert_eq!(max_incidence(&g, &BTreeSet::new()).unwrap(), 0);
        let star = Family::Star(6).generate().unwrap();
        assert_eq!(max_incidence(&star, &[0].into()).unwrap(), 6);
        assert!(matches!(
            max_incidence(&star, &[0, 1].into()),
            Err(Error::NotIndependent(_))
        ));
    }

    #[test]
    fn labeling_oracle_small_cases() {
        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(sparing_brute_labelings(&k3, 3).unwrap(), 1);
        assert_eq!(
            sparing_brute_labelings(&Family::Path(4).generate().unwrap(), 4).unwrap(),
            0
        );
        assert_eq!(
            sparing_brute_labelings(&Family::Cycle(5).generate().unwrap(), 5).unwrap(),
            1
        );
    }

    #[test]
    fn labeling_oracle_ground_set_capacity() {
        // two singletons and one pair from {0, 1}: only {0}, {1}, {0,1}
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(sparing_brute_labelings(&p3, 2).unwrap(), 0);
        // with one element no vertex pair can be labeled injectively
        assert!(matches!(
            sparing_brute_labelings(&Family::Path(2).generate().unwrap(), 1),
            Err(Error::InfeasibleGroundSet { .. })
        ));
        assert!(sparing_brute_labelings(&Graph::empty(17), 17).is_err());
    }
}
