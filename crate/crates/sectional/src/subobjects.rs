//! Subobjects and the subobject form of the mono-sectional number.

use fincat_core::{FinCat, Mor, Obj};
use sieves::PrincipalSieves;
use topology::Topology;

use crate::search::next_combination;
use crate::{has_r_section, ExtNat, HomRelation, SectionalError};

/// Monomorphisms into one object that generate the same sieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubobjectClass {
    /// The least-index member.
    pub representative: Mor,
    pub members: Vec<Mor>,
}

/// Monomorphisms into `y` grouped by the sieve they generate, ordered by
/// representative.
pub fn subobject_classes(cat: &FinCat, y: Obj) -> Vec<SubobjectClass> {
    let principal = PrincipalSieves::new(cat);
    let mut classes: Vec<SubobjectClass> = Vec::new();
    for &m in cat.homs_into(y).iter().filter(|&&m| cat.is_monomorphism(m)) {
        match classes
            .iter_mut()
            .find(|c| principal.of(c.representative) == principal.of(m))
        {
            Some(c) => c.members.push(m),
            None => classes.push(SubobjectClass {
                representative: m,
                members: vec![m],
            }),
        }
    }
    classes
}

/// Least number of subobjects of the codomain, each admitting an
/// R-section of `f`, whose representatives form a covering family.
///
/// Tries every set of sectioned classes by increasing size.
pub fn msec_via_subobjects(
    cat: &FinCat,
    top: &Topology,
    rel: &HomRelation,
    f: Mor,
    limit: usize,
) -> Result<ExtNat, SectionalError> {
    if !rel.preserves_composition() {
        return Err(SectionalError::RelationNotCompositionPreserving);
    }
    let y = cat.cod(f);
    let mut sectioned = Vec::new();
    for class in subobject_classes(cat, y) {
        if has_r_section(cat, rel, f, class.representative)?.is_some() {
            sectioned.push(class.representative);
        }
    }
    let mut tried = 0usize;
    for k in 1..=sectioned.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            tried += 1;
            if tried > limit {
                return Err(SectionalError::UniverseTooLarge {
                    what: format!("sets of {} subobjects", sectioned.len()),
                    limit,
                });
            }
            let family: Vec<Mor> = idx.iter().map(|&i| sectioned[i]).collect();
            if top.is_covering_family(cat, y, &family)? {
                return Ok(ExtNat::Finite(k));
            }
            if !next_combination(&mut idx, sectioned.len()) {
                break;
            }
        }
    }
    Ok(ExtNat::Infinite)
}
