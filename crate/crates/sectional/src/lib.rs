//! Exact R-sectional and R-mono-sectional numbers on finite categories.

pub mod certificate;
pub mod cover;
mod extnat;
mod extras;
pub mod random;
mod relation;
mod search;
mod subobjects;

use fincat_core::CategoryError;
use sieves::SieveError;
use thiserror::Error;
use topology::TopologyError;

pub use extnat::ExtNat;
pub use extras::{is_projective, ls_category, sieve_characterization, sigma_proj, LsOutcome, Projectivity};
pub use relation::{ExplicitRelation, HomRelation, MorphismRelation, RelationError};
pub use search::{
    candidates, has_r_section, min_covering_family, msec, r_msec, r_sec, sec, sectional_number, Certificate,
    CoverOutcome, Obstruction, Route, SearchOptions, SecOutcome, SectionWitness, Strategy, DEFAULT_SEARCH_LIMIT,
};
pub use subobjects::{msec_via_subobjects, subobject_classes, SubobjectClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionalError {
    #[error("`{f}` and `{g}` have different codomains")]
    CodMismatch { f: String, g: String },
    #[error("universe too large: {what} exceeds {limit}")]
    UniverseTooLarge { what: String, limit: usize },
    #[error("relation does not preserve composition")]
    RelationNotCompositionPreserving,
    #[error("`{0}` is not weakly initial")]
    NotWeakInitial(String),
    #[error("no morphism from `{from}` to `{to}`")]
    NoMorphismFromI { from: String, to: String },
    #[error("`{to}` is not connected for the relation: `{a}` and `{b}` are unrelated")]
    NotRConnected { to: String, a: String, b: String },
    #[error("projectivity table has {found} entries for {expected} objects")]
    ProjectivityTable { expected: usize, found: usize },
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Sieve(#[from] SieveError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

impl SectionalError {
    pub(crate) fn lift_topology(err: TopologyError) -> Self {
        match err {
            TopologyError::UniverseTooLarge { what, limit } => SectionalError::UniverseTooLarge { what, limit },
            other => SectionalError::Topology(other),
        }
    }
}
