//! Seeded random covering assignments.

use std::collections::{BTreeSet, VecDeque};

use fincat_core::{FinCat, Mor};
use rand::{Rng, RngExt};
use sieves::{generate_sieve, pullback_sieve, Sieve};

use crate::ExtensionalTopology;

fn random_sieve<R: Rng + ?Sized>(cat: &FinCat, target: fincat_core::Obj, rng: &mut R) -> Sieve {
    let gens: Vec<Mor> = cat
        .homs_into(target)
        .iter()
        .copied()
        .filter(|_| rng.random_bool(0.35))
        .collect();
    generate_sieve(cat, target, &gens).expect("generators share the target")
}

/// A few random sieves per object, plus the maximal sieve most of the time.
pub fn random_extensional<R: Rng + ?Sized>(cat: &FinCat, rng: &mut R) -> ExtensionalTopology {
    let covering = cat
        .object_ids()
        .map(|o| {
            let mut list: Vec<Sieve> = (0..rng.random_range(0..4)).map(|_| random_sieve(cat, o, rng)).collect();
            if rng.random_bool(0.8) {
                list.push(Sieve::full(cat, o));
            }
            list
        })
        .collect();
    ExtensionalTopology::new(cat, "random", covering).expect("targets match")
}

/// Keeps a random part of each covering list.
pub fn random_coarsening<R: Rng + ?Sized>(cat: &FinCat, top: &ExtensionalTopology, rng: &mut R) -> ExtensionalTopology {
    let covering = cat
        .object_ids()
        .map(|o| {
            top.covering(o)
                .iter()
                .filter(|_| rng.random_bool(0.5))
                .cloned()
                .collect()
        })
        .collect();
    ExtensionalTopology::new(cat, "random-coarsening", covering).expect("targets match")
}

/// The least assignment containing `seeds` and the maximal sieves that is
/// stable under pullback, so (T1) and (T2) hold.
pub fn t2_closure(cat: &FinCat, label: &str, seeds: Vec<Sieve>) -> ExtensionalTopology {
    let mut covering: Vec<BTreeSet<Sieve>> = vec![BTreeSet::new(); cat.num_objects()];
    let mut queue: VecDeque<Sieve> = seeds.into_iter().collect();
    queue.extend(cat.object_ids().map(|o| Sieve::full(cat, o)));
    while let Some(s) = queue.pop_front() {
        let c = s.target();
        if !covering[c.0].insert(s.clone()) {
            continue;
        }
        for &f in cat.homs_into(c) {
            let p = pullback_sieve(cat, f, &s).expect("codomain matches");
            if !covering[p.target().0].contains(&p) {
                queue.push_back(p);
            }
        }
    }
    ExtensionalTopology::new(
        cat,
        label,
        covering.into_iter().map(|s| s.into_iter().collect()).collect(),
    )
    .expect("targets match")
}

pub fn random_quasi<R: Rng + ?Sized>(cat: &FinCat, rng: &mut R) -> ExtensionalTopology {
    let seeds = cat
        .object_ids()
        .flat_map(|o| (0..rng.random_range(0..3)).map(move |_| o))
        .collect::<Vec<_>>()
        .into_iter()
        .map(|o| random_sieve(cat, o, rng))
        .collect();
    t2_closure(cat, "random-quasi", seeds)
}
