//! Exact computation of forcing sets, forcing numbers and forcing spectra of
//! perfect matchings in small graphs, with generators for grid-like
//! families and the constructive matchings and 2-switch procedures that go
//! with them.
//!
//! A forcing set of a perfect matching `M` is a subset of `M` contained in
//! no other perfect matching; `f(G, M)` is the size of a smallest one.

pub mod alternating;
pub mod constructions;
pub mod error;
pub mod forcing;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;

pub use alternating::{
    find_alternating_cycle_avoiding, max_disjoint_alternating_cycles, symmetric_difference_cycles,
    AlternatingCycle,
};
pub use error::{Error, Result};
pub use forcing::{
    forcing_number, forcing_spectrum, is_forcing_set, max_forcing_number, min_forcing_number,
    packing_equals_forcing_check, ForcingCertificate, ForcingSolver, PackingReport, SpectrumResult,
};
pub use graph::{Coord, Edge, FamilyTag, Graph, Planarity, VertexId};
pub use matching::{
    count_perfect_matchings, enumerate_perfect_matchings, is_perfect_matching, EdgeSet, Matching,
};

#[cfg(test)]
#[path = "../tests/common/oracle.rs"]
pub(crate) mod oracle;
