//! Sparing numbers of finite simple graphs.
//!
//! A weak integer additive set-labeling gives every vertex a distinct
//! nonempty set of non-negative integers so that each edge, labeled by the
//! sumset of its ends, has as many elements as one of its ends. The sparing
//! number is the fewest edges such a labeling must leave with a singleton
//! label. It equals `min |E(G - I)|` over independent sets `I`.
//!
//! - [`greedy`] runs the maximum-degree construction and keeps its
//!   round-by-round trace.
//! - [`exact`] finds the true optimum by maximal independent set
//!   enumeration, with subset and role-assignment brute force as oracles.
//! - [`labeling`] turns an independent set into a concrete labeling and
//!   checks it edge by edge.
//!
//! ```
//! use sparing::{figure1, run_greedy, sparing_exact, ExactConfig};
//!
//! let g = figure1();
//! assert_eq!(run_greedy(&g).phi, 6);
//! assert_eq!(sparing_exact(&g, &ExactConfig::default()).unwrap().phi, 5);
//! ```

pub mod compare;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod labeling;
mod result;

pub use error::{Error, PickError, Result};
pub use exact::{max_incidence, sparing_brute_labelings, sparing_exact, ExactConfig};
pub use graph::{
    figure1, parse_edge_list, serialize_edge_list, to_dot, Edge, EdgeSet, Family, Graph, VertexId,
};
pub use greedy::{replay_trace, run_greedy, GreedyState, IterationRecord};
pub use labeling::{
    build_labeling, mono_indexed_count, sumset, verify_wiasl, GroundSet, SetLabel,
    VerificationReport, WiaslLabeling,
};
pub use result::{Method, SparingResult};

// The guide under book/ is compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/sumsets.md")]
    mod sumsets {}
    #[doc = include_str!("../../../book/src/greedy.md")]
    mod greedy {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/labelings.md")]
    mod labelings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
