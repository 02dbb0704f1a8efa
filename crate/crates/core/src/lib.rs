//! Minimum basis hitting sets over families of matroids.
//!
//! Given matroids `M_1..M_k` over one ground set, find a small set `F` that
//! contains a basis of every `M_j`. With graphic matroids on the induced
//! subgraphs `G[S_i]` this is the minimum spanning-tree hitting set problem:
//! find few edges of `G` such that every `G[S_i]` keeps a spanning tree.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * rank oracles for graphic, rank-1 uniform and dual matroids ([`matroid`]),
//! * the max-profit greedy with its `H(R_0)` guarantee ([`greedy`]),
//! * an exact search for small instances ([`exact`]),
//! * graph instances, validation and spanning-tree extraction ([`instance`]),
//! * hardness gadgets with checkable optimum identities ([`reductions`]).
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod element_set;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod instance;
pub mod matroid;
pub mod random;
pub mod reductions;
pub mod union_find;

pub use element_set::ElementSet;
pub use error::Error;
pub use exact::{
    exact_min_basis_hitting, verify_solution, ExactResult, ExactStatus, SearchBudget, Verification,
};
pub use graph::{Edge, Graph};
pub use greedy::{
    greedy_solve, profit, GreedyOptions, ProfitEvaluation, SolveReport, Step, TieBreak,
};
pub use instance::{ConnectivityPolicy, Solution, SthsInstance, ValidatedInstance};
pub use matroid::{DualMatroid, GraphicMatroid, RankOracle, RankTracker, UniformRank1Matroid};

pub type Result<T, E = Error> = core::result::Result<T, E>;
