use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{EdgeSet, VertexId};
use crate::greedy::IterationRecord;

/// Which procedure produced a [`SparingResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Greedy,
    /// Maximal independent set enumeration.
    Exact,
    /// Every vertex subset.
    Brute,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::Exact => "exact",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "greedy" => Ok(Method::Greedy),
            "exact" => Ok(Method::Exact),
            "brute" => Ok(Method::Brute),
            _ => Err(format!(
                "unknown method `{s}` (expected greedy, exact or brute)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparingResult {
    /// The independent set whose vertices get non-singleton labels.
    pub independent_set: BTreeSet<VertexId>,
    /// Edges with both endpoints outside the independent set.
    pub mono_edges: EdgeSet,
    /// `|mono_edges|`.
    pub phi: usize,
    /// Size of the step-by-step neighborhood accumulator; greedy runs only.
    pub phi_literal: Option<usize>,
    /// Mono edges the neighborhood accumulator never saw. Empty unless the
    /// method is greedy and the accumulator undercounted.
    pub discrepancy: EdgeSet,
    pub trace: Vec<IterationRecord>,
    pub method: Method,
    /// False when the search stopped early and `phi` is only an upper bound.
    pub optimal: bool,
}

impl SparingResult {
    /// Cumulative literal mono-edge set after each greedy iteration.
    pub fn literal_accumulation(&self) -> Vec<EdgeSet> {
        let mut acc = EdgeSet::new();
        self.trace
            .iter()
            .map(|rec| {
                acc.extend(rec.new_mono_edges.iter().copied());
                acc.clone()
            })
            .collect()
    }

    pub fn has_discrepancy(&self) -> bool {
        !self.discrepancy.is_empty()
    }
}
