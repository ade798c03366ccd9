//! Pure simplicial complexes on at most 64 vertices: shedding faces,
//! k-decomposability witnesses, shellability, and facet-by-facet extensions that
//! keep every intermediate complex 1-decomposable.

pub mod complex;
pub mod decomp;
pub mod enumerate;
pub mod error;
pub mod extend;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod vertex_set;

pub use complex::{facets_adjacent, Complex, Kind};
pub use decomp::{
    certify_trace, decomposable_order, is_k_decomposable, is_shedding_face, is_shedding_face_direct, is_shellable,
    CertifyReport, Decider, DecompositionTree, ExtensionTrace, PrefixEntry, PrefixStatus, Sheller, ShellingVerdict,
    TraceStep, Verdict,
};
pub use error::{Error, Result};
pub use extend::{cocl, cone_full_order, extend_simplex_base, ConeContext, Extender};
pub use graph::{clique_completing_edges, cliques, cone, connected, distance_two_pairs, full_d, is_fully_coned, Graph};
pub use vertex_set::{binomial, Facet, Vertex, VertexSet, MAX_VERTICES};
