use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set of size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },
    #[error("element {0} listed twice")]
    DuplicateElement(usize),
    #[error("element set over {found} elements used with a ground set of size {expected}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("element {0} is already in the chosen set")]
    AlreadyChosen(usize),
    #[error("expected {expected} element weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("element weight {weight} at index {index} is not strictly positive")]
    NonPositiveWeight { index: usize, weight: f64 },
    #[error("greedy stalled with residual rank {residual} and no element of positive profit")]
    Stalled { residual: usize },

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("edge {{{u}, {v}}} has non-positive weight {weight}")]
    EdgeWeight { u: String, v: String, weight: f64 },
    #[error("edge index {0} is not an edge of the graph")]
    UnknownEdge(usize),

    #[error("invalid instance: {}", .0.join("; "))]
    InvalidInstance(Vec<String>),
    #[error("solution misses a basis in {} subset(s): {}", .0.len(), join_deficits(.0))]
    Infeasible(Vec<(usize, usize)>),

    #[error("ground set of {size} elements exceeds the exact-search cap of {cap}")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hitting-set family contains an empty set at position {0}")]
    EmptySet(usize),
}

fn join_deficits(deficits: &[(usize, usize)]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, (subset, deficit)) in deficits.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "#{subset} (short {deficit})");
    }
    out
}
