//! Finite groups and rings: subgroup and subring enumeration, covering
//! numbers, sectional numbers of homomorphisms and nilpotence indices.

pub mod corpus;
pub mod encoding;
mod group;
mod hom;
mod ring;
mod subgroup;

use thiserror::Error;

pub use group::{FinGroup, GroupFile, GroupHom, GroupHomFile, DEFAULT_MAX_ORDER};
pub use hom::{
    commutator_relation, find_section, group_category, group_equation_sec, hom_search, sec_group_hom, EquationOutcome,
    GroupSecOutcome, SectionConstraint, SectionedSubgroup,
};
pub use ring::{
    check_nil_bound, find_ring_section, nil_index, sec_ring_hom, sigma_ring, subrings, FinRing, RingFile, RingHom,
    RingSecOutcome,
};
pub use subgroup::{
    sigma_group, subgroups, subgroups_with_limit, CoverCertificate, CoverVariant, Subgroup, SubgroupFilter,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a ring: {0}")]
    NotARing(String),
    #[error("not a homomorphism: {0}")]
    NotAHom(String),
    #[error("order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Sectional(#[from] sectional::SectionalError),
    #[error(transparent)]
    Category(#[from] fincat_core::CategoryError),
    #[error(transparent)]
    Topology(#[from] topology::TopologyError),
}
