//! LS category, projective covering number and the generated-sieve test.

use fincat_core::{FinCat, Mor, Obj};
use fixedbitset::FixedBitSet;
use sieves::generate_sieve;
use topology::Topology;

use crate::search::next_combination;
use crate::{min_covering_family, sectional_number, CoverOutcome, ExtNat, HomRelation, SearchOptions, SectionalError};

/// Whether some `h_1..h_k` with `k <= m` generate a covering sieve and
/// satisfy `⟨f, h_1..h_k⟩ = ⟨f⟩`. Brute force over families into the
/// codomain of `f`.
pub fn sieve_characterization(
    cat: &FinCat,
    top: &Topology,
    f: Mor,
    m: usize,
    limit: usize,
) -> Result<bool, SectionalError> {
    let y = cat.cod(f);
    let own = generate_sieve(cat, y, &[f])?;
    // a morphism outside ⟨f⟩ already breaks the equality on its own
    let inside: Vec<Mor> = cat.homs_into(y).iter().copied().filter(|&h| own.contains(h)).collect();
    let mut tried = 0usize;
    for k in 1..=m.min(inside.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            tried += 1;
            if tried > limit {
                return Err(SectionalError::UniverseTooLarge {
                    what: format!("families of {} morphisms", inside.len()),
                    limit,
                });
            }
            let hs: Vec<Mor> = idx.iter().map(|&i| inside[i]).collect();
            let mut with_f = hs.clone();
            with_f.push(f);
            if generate_sieve(cat, y, &with_f)? == own && top.is_covering_family(cat, y, &hs)? {
                return Ok(true);
            }
            if !next_combination(&mut idx, inside.len()) {
                break;
            }
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsOutcome {
    pub value: ExtNat,
    /// R-sec of every morphism from the weak initial object.
    pub per_morphism: Vec<(Mor, ExtNat)>,
    pub agree: bool,
}

/// R-sec of the morphisms `i -> y`, after checking that `i` is weakly
/// initial and all of them are related.
pub fn ls_category(
    cat: &FinCat,
    top: &Topology,
    rel: &HomRelation,
    i: Obj,
    y: Obj,
    opts: SearchOptions,
) -> Result<LsOutcome, SectionalError> {
    if !cat.weak_initial_objects().contains(&i) {
        return Err(SectionalError::NotWeakInitial(cat.object_name(i).to_string()));
    }
    let homs = cat.hom(i, y);
    let Some(&first) = homs.first() else {
        return Err(SectionalError::NoMorphismFromI {
            from: cat.object_name(i).to_string(),
            to: cat.object_name(y).to_string(),
        });
    };
    if let Some(&other) = homs.iter().find(|&&h| !crate::MorphismRelation::related(rel, first, h)) {
        return Err(SectionalError::NotRConnected {
            to: cat.object_name(y).to_string(),
            a: cat.name(first).to_string(),
            b: cat.name(other).to_string(),
        });
    }
    let per_morphism = homs
        .iter()
        .map(|&h| Ok((h, sectional_number(cat, top, rel, h, opts)?.value)))
        .collect::<Result<Vec<_>, SectionalError>>()?;
    let value = per_morphism[0].1;
    let agree = per_morphism.iter().all(|(_, v)| *v == value);
    Ok(LsOutcome {
        value,
        per_morphism,
        agree,
    })
}

/// Lifting against every epimorphism of the category.
pub fn is_projective(cat: &FinCat, p: Obj) -> bool {
    cat.morphism_ids().filter(|&e| cat.is_epimorphism(e)).all(|e| {
        let (n, m) = (cat.dom(e), cat.cod(e));
        cat.hom(p, m)
            .iter()
            .all(|&g| cat.hom(p, n).iter().any(|&h| cat.comp(e, h) == g))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projectivity {
    /// Decided by [`is_projective`].
    Derived,
    /// One flag per object.
    Supplied(Vec<bool>),
}

/// Least covering family of `m` whose members have projective domains.
pub fn sigma_proj(
    cat: &FinCat,
    top: &Topology,
    m: Obj,
    projectivity: &Projectivity,
    opts: SearchOptions,
) -> Result<CoverOutcome, SectionalError> {
    let flags: Vec<bool> = match projectivity {
        Projectivity::Derived => cat.object_ids().map(|o| is_projective(cat, o)).collect(),
        Projectivity::Supplied(v) if v.len() == cat.num_objects() => v.clone(),
        Projectivity::Supplied(v) => {
            return Err(SectionalError::ProjectivityTable {
                expected: cat.num_objects(),
                found: v.len(),
            })
        }
    };
    let mut cands = FixedBitSet::with_capacity(cat.num_morphisms());
    for &g in cat.homs_into(m) {
        if flags[cat.dom(g).0] {
            cands.insert(g.0);
        }
    }
    min_covering_family(cat, top, m, &cands, opts.strategy, opts.limit)
}
