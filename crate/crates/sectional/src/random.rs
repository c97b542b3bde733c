//! Seeded random relations.

use fincat_core::{FinCat, Mor};
use rand::{Rng, RngExt};

use crate::HomRelation;

/// A random partition of each hom-set into at most `classes` parts.
pub fn random_partition<R: Rng + ?Sized>(cat: &FinCat, classes: usize, rng: &mut R) -> HomRelation {
    let labels: Vec<usize> = cat
        .morphism_ids()
        .map(|_| rng.random_range(0..classes.max(1)))
        .collect();
    HomRelation::from_classes(cat, &labels).expect("one label per morphism")
}

/// The congruence generated by a few random pairs from shared hom-sets.
pub fn random_congruence<R: Rng + ?Sized>(cat: &FinCat, rng: &mut R) -> HomRelation {
    let mut pairs = Vec::new();
    for a in cat.morphism_ids() {
        let hom = cat.hom(cat.dom(a), cat.cod(a));
        if hom.len() > 1 && rng.random_bool(0.15) {
            let b: Mor = hom[rng.random_range(0..hom.len())];
            pairs.push((a, b));
        }
    }
    HomRelation::congruence_generated_by(cat, &pairs).expect("pairs share hom-sets")
}
