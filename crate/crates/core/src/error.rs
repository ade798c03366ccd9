use thiserror::Error;

use crate::decomp::CertifyReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not-a-face: {0} is not a face of the complex")]
    NotAFace(String),

    #[error("dimension-too-low: operation needs dimension at least {needed}, complex has {actual}")]
    DimensionTooLow { needed: isize, actual: isize },

    #[error("size-mismatch: facets of sizes {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("dimension-mismatch: expected facets of size {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("overlap: complexes share facet {0}")]
    Overlap(String),

    #[error("not-disjoint: {0}")]
    NotDisjoint(String),

    #[error("not-pure: complexes of dimension >= 2 must be pure")]
    NotPure,

    #[error("not-an-antichain: facet {inner} is contained in facet {outer}")]
    NotAnAntichain { inner: String, outer: String },

    #[error("empty facet")]
    EmptyFacet,

    #[error("vertex {vertex} is not in the ground set")]
    OutsideGround { vertex: u8 },

    #[error("universe-too-large: {0} vertex labels needed, at most 64 supported")]
    UniverseTooLarge(usize),

    #[error("empty-graph: graph has no vertices")]
    EmptyGraph,

    #[error("bad-witness: {0}")]
    BadWitness(String),

    #[error("not-applicable: {0}")]
    NotApplicable(String),

    #[error("not-decomposable: complex is not {k}-decomposable")]
    NotDecomposable { k: usize, report: Box<CertifyReport> },

    #[error("disconnected-base: induced skeleton on the base vertices is disconnected")]
    DisconnectedBase,

    #[error("inconclusive: search budget of {0} nodes exhausted")]
    Inconclusive(u64),

    #[error("unknown label {0}")]
    UnknownLabel(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal: {0}")]
    Internal(String),
}
