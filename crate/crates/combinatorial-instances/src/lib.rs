//! Sectional numbers for functions between finite sets and for graph
//! homomorphisms, the finite-range number-theory scans built on them, and
//! explicit site encodings the generic engine can check.

pub mod encoding;
mod graph;
mod primes;
mod sets;

use thiserror::Error;

pub use graph::{
    find_section, graph_homs, msec_graph_hom, sec_graph_hom, vertex_functor_bound, FinGraph, GraphFile, GraphHom,
    GraphHomFile, GraphSecOutcome, SectionedSubgraph, Uncovered, VertexBound, MAX_SOURCE_VERTICES, MAX_TARGET_VERTICES,
    MAX_TOP_DOWN_EDGES,
};
pub use primes::{
    goldbach_surjectivity, least_odd_prime_pair, prime_sieve, twin_prime_projection, GoldbachReport, TwinReport,
};
pub use sets::{pair_projection, sec_set_fun, FinSetFun, PairProjection, SetSecOutcome};

#[derive(Debug, Error)]
pub enum CombinatorialError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("input too large: {0}")]
    SizeTooLarge(String),
    #[error("not a homomorphism: {0}")]
    NotAHom(String),
    #[error(transparent)]
    Category(#[from] fincat_core::CategoryError),
    #[error(transparent)]
    Topology(#[from] topology::TopologyError),
}
