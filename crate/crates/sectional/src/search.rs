//! Exact minimum covering families of sectioned morphisms.

use fincat_core::{FinCat, Mor, Obj};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sieves::{PrincipalSieves, Sieve};
use topology::{SubobjectRule, Topology};

use crate::cover::{maximal_sets, min_set_cover};
use crate::{ExtNat, HomRelation, MorphismRelation, SectionalError};

/// Default cap on sieves enumerated or families tried in one search.
pub const DEFAULT_SEARCH_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Picks the cheapest exact route the inputs allow.
    #[default]
    Auto,
    /// Minimum over the covering sieves of the target.
    Sieves,
    /// Tries every family of candidates by increasing size. With
    /// `maximal_only`, candidates below another candidate are dropped first,
    /// which is exact only for upward-closed topologies.
    Families { maximal_only: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub mono: bool,
    pub strategy: Strategy,
    pub limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mono: false,
            strategy: Strategy::Auto,
            limit: DEFAULT_SEARCH_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Discrete,
    Designated,
    Sieves,
    Families,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionWitness {
    pub member: Mor,
    pub section: Mor,
}

/// Why no covering family of candidates exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    NoCandidates,
    /// A point of the target that no designated candidate reaches.
    Uncovered {
        point: usize,
    },
    /// Every nonempty covering sieve, each with a member that candidates
    /// inside the sieve do not generate.
    Sieves(Vec<(Sieve, Mor)>),
    /// Every family of the (possibly restricted) candidates was tried.
    Exhausted {
        tried: Vec<Mor>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cover {
        sieve: Sieve,
        family: Vec<SectionWitness>,
    },
    Exhausted {
        candidates: Vec<Mor>,
        obstruction: Obstruction,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecOutcome {
    pub value: ExtNat,
    pub certificate: Certificate,
    pub route: Route,
}

impl SecOutcome {
    pub fn family(&self) -> Option<Vec<Mor>> {
        match &self.certificate {
            Certificate::Cover { family, .. } => Some(family.iter().map(|w| w.member).collect()),
            Certificate::Exhausted { .. } => None,
        }
    }
}

/// Result of a minimum covering-family search over an arbitrary candidate
/// set. `found` is the lex-least minimum family, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverOutcome {
    pub route: Route,
    pub found: Result<Vec<Mor>, Obstruction>,
}

impl CoverOutcome {
    pub fn value(&self) -> ExtNat {
        match &self.found {
            Ok(family) => ExtNat::Finite(family.len()),
            Err(_) => ExtNat::Infinite,
        }
    }
}

/// The least-index `s` with `(f∘s) R g`.
pub fn has_r_section(cat: &FinCat, rel: &dyn MorphismRelation, f: Mor, g: Mor) -> Result<Option<Mor>, SectionalError> {
    if cat.cod(f) != cat.cod(g) {
        return Err(SectionalError::CodMismatch {
            f: cat.name(f).to_string(),
            g: cat.name(g).to_string(),
        });
    }
    Ok(cat
        .hom(cat.dom(g), cat.dom(f))
        .iter()
        .copied()
        .find(|&s| rel.related(cat.comp(f, s), g)))
}

/// Morphisms into the codomain of `f` admitting an R-section of `f`, in
/// index order. With `mono`, monomorphisms only.
pub fn candidates(cat: &FinCat, rel: &dyn MorphismRelation, f: Mor, mono: bool) -> Vec<SectionWitness> {
    cat.homs_into(cat.cod(f))
        .iter()
        .copied()
        .filter(|&g| !mono || cat.is_monomorphism(g))
        .filter_map(|g| {
            has_r_section(cat, rel, f, g)
                .expect("codomains agree")
                .map(|section| SectionWitness { member: g, section })
        })
        .collect()
}

pub fn sectional_number(
    cat: &FinCat,
    top: &Topology,
    rel: &dyn MorphismRelation,
    f: Mor,
    opts: SearchOptions,
) -> Result<SecOutcome, SectionalError> {
    let target = cat.cod(f);
    let witnesses = candidates(cat, rel, f, opts.mono);
    let mut set = FixedBitSet::with_capacity(cat.num_morphisms());
    for w in &witnesses {
        set.insert(w.member.0);
    }
    let outcome = min_covering_family(cat, top, target, &set, opts.strategy, opts.limit)?;
    let (value, certificate) = match outcome.found {
        Ok(family) => {
            let principal = PrincipalSieves::new(cat);
            let sieve = principal.generate(cat, target, &family);
            let family: Vec<SectionWitness> = family
                .iter()
                .map(|&g| {
                    *witnesses
                        .iter()
                        .find(|w| w.member == g)
                        .expect("family members are candidates")
                })
                .collect();
            (ExtNat::Finite(family.len()), Certificate::Cover { sieve, family })
        }
        Err(obstruction) => (
            ExtNat::Infinite,
            Certificate::Exhausted {
                candidates: witnesses.iter().map(|w| w.member).collect(),
                obstruction,
            },
        ),
    };
    Ok(SecOutcome {
        value,
        certificate,
        route: outcome.route,
    })
}

pub fn r_sec(cat: &FinCat, top: &Topology, rel: &dyn MorphismRelation, f: Mor) -> Result<SecOutcome, SectionalError> {
    sectional_number(cat, top, rel, f, SearchOptions::default())
}

pub fn r_msec(cat: &FinCat, top: &Topology, rel: &dyn MorphismRelation, f: Mor) -> Result<SecOutcome, SectionalError> {
    let opts = SearchOptions {
        mono: true,
        ..SearchOptions::default()
    };
    sectional_number(cat, top, rel, f, opts)
}

/// R-sec for equality.
pub fn sec(cat: &FinCat, top: &Topology, f: Mor) -> Result<SecOutcome, SectionalError> {
    r_sec(cat, top, &HomRelation::trivial(cat), f)
}

pub fn msec(cat: &FinCat, top: &Topology, f: Mor) -> Result<SecOutcome, SectionalError> {
    r_msec(cat, top, &HomRelation::trivial(cat), f)
}

/// Least nonempty family drawn from `cands` (morphisms into `target`)
/// that generates a covering sieve.
pub fn min_covering_family(
    cat: &FinCat,
    top: &Topology,
    target: Obj,
    cands: &FixedBitSet,
    strategy: Strategy,
    limit: usize,
) -> Result<CoverOutcome, SectionalError> {
    let principal = PrincipalSieves::new(cat);
    match strategy {
        Strategy::Sieves => by_sieves(cat, top, target, cands, &principal, limit),
        Strategy::Families { maximal_only } => by_families(cat, top, target, cands, &principal, maximal_only, limit),
        Strategy::Auto => {
            if cands.is_clear() {
                return Ok(CoverOutcome {
                    route: Route::Discrete,
                    found: Err(Obstruction::NoCandidates),
                });
            }
            match top {
                Topology::Discrete => Ok(CoverOutcome {
                    route: Route::Discrete,
                    found: Ok(vec![Mor(cands.ones().next().expect("nonempty"))]),
                }),
                Topology::Rule(rule) if designated_route_applies(rule, target, cands, &principal) => {
                    match by_designated(rule, target, cands) {
                        Some(found) => Ok(CoverOutcome {
                            route: Route::Designated,
                            found,
                        }),
                        None => by_sieves(cat, top, target, cands, &principal, limit),
                    }
                }
                _ => by_sieves(cat, top, target, cands, &principal, limit),
            }
        }
    }
}

/// The designated route is exact when every designated inclusion that
/// factors through a candidate is itself a candidate, and point sets only
/// shrink along factorization.
pub(crate) fn designated_route_applies(
    rule: &SubobjectRule,
    target: Obj,
    cands: &FixedBitSet,
    principal: &PrincipalSieves,
) -> bool {
    let designated = rule.designated(target);
    let closed = designated
        .iter()
        .all(|d| cands.contains(d.inclusion.0) || !cands.ones().any(|c| principal.factors(d.inclusion, Mor(c))));
    let monotone = designated.iter().all(|d| {
        designated
            .iter()
            .all(|e| !principal.factors(d.inclusion, e.inclusion) || d.points.is_subset(&e.points))
    });
    closed && monotone
}

/// Minimum cover of the target's points by designated candidates. `None`
/// when the target has no points and no designated candidate, a case the
/// sieve route settles.
fn by_designated(rule: &SubobjectRule, target: Obj, cands: &FixedBitSet) -> Option<Result<Vec<Mor>, Obstruction>> {
    let usable: Vec<_> = rule
        .designated(target)
        .iter()
        .filter(|d| cands.contains(d.inclusion.0))
        .collect();
    let points = rule.points(target);
    if points == 0 {
        return usable.first().map(|d| Ok(vec![d.inclusion]));
    }
    let sets: Vec<FixedBitSet> = usable.iter().map(|d| d.points.clone()).collect();
    let keep = maximal_sets(&sets);
    let kept: Vec<FixedBitSet> = keep.iter().map(|&i| sets[i].clone()).collect();
    Some(match min_set_cover(points, &kept) {
        Some(chosen) => {
            let mut family: Vec<Mor> = chosen.iter().map(|&i| usable[keep[i]].inclusion).collect();
            family.sort();
            Ok(family)
        }
        None => {
            let mut reached = FixedBitSet::with_capacity(points);
            for s in &sets {
                reached.union_with(s);
            }
            let point = (0..points).find(|&p| !reached.contains(p)).expect("cover failed");
            Err(Obstruction::Uncovered { point })
        }
    })
}

/// Candidates in `members` that generate it are a covering family; one
/// candidate per maximal class is the least such family.
fn by_sieves(
    cat: &FinCat,
    top: &Topology,
    target: Obj,
    cands: &FixedBitSet,
    principal: &PrincipalSieves,
    limit: usize,
) -> Result<CoverOutcome, SectionalError> {
    let covering = top
        .covering_sieves(cat, target, limit)
        .map_err(SectionalError::lift_topology)?;
    let mut best: Option<Vec<Mor>> = None;
    let mut blocked = Vec::new();
    for s in covering.into_iter().filter(|s| !s.is_empty()) {
        let mut generated = FixedBitSet::with_capacity(cat.num_morphisms());
        for c in s.members().filter(|m| cands.contains(m.0)) {
            generated.union_with(principal.of(c));
        }
        let tops = principal.maximal_generators(&s);
        if let Some(&missing) = tops.iter().find(|m| !generated.contains(m.0)) {
            blocked.push((s, missing));
            continue;
        }
        let mut family: Vec<Mor> = tops
            .iter()
            .map(|&t| {
                s.members()
                    .find(|&m| cands.contains(m.0) && principal.factors(m, t) && principal.factors(t, m))
                    .expect("a maximal class generated by candidates contains one")
            })
            .collect();
        family.sort();
        if best.as_ref().is_none_or(|b| (family.len(), &family) < (b.len(), b)) {
            best = Some(family);
        }
    }
    let found = match best {
        Some(family) => Ok(family),
        None if cands.is_clear() => Err(Obstruction::NoCandidates),
        None => Err(Obstruction::Sieves(blocked)),
    };
    Ok(CoverOutcome {
        route: Route::Sieves,
        found,
    })
}

/// Drops candidates strictly below another candidate and all but the
/// least index of each class of mutually factoring ones.
pub(crate) fn maximal_candidates(list: &[Mor], principal: &PrincipalSieves) -> Vec<Mor> {
    list.iter()
        .copied()
        .filter(|&f| {
            list.iter().all(|&g| {
                let above = principal.factors(f, g);
                let below = principal.factors(g, f);
                !(above && (!below || g < f))
            })
        })
        .collect()
}

fn by_families(
    cat: &FinCat,
    top: &Topology,
    target: Obj,
    cands: &FixedBitSet,
    principal: &PrincipalSieves,
    maximal_only: bool,
    limit: usize,
) -> Result<CoverOutcome, SectionalError> {
    let all: Vec<Mor> = cands.ones().map(Mor).collect();
    let list = if maximal_only {
        maximal_candidates(&all, principal)
    } else {
        all
    };
    let mut tried = 0usize;
    for k in 1..=list.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            tried += 1;
            if tried > limit {
                return Err(SectionalError::UniverseTooLarge {
                    what: format!("families of {} candidates", list.len()),
                    limit,
                });
            }
            let family: Vec<Mor> = idx.iter().map(|&i| list[i]).collect();
            if top.is_covering_sieve(cat, &principal.generate(cat, target, &family)) {
                return Ok(CoverOutcome {
                    route: Route::Families,
                    found: Ok(family),
                });
            }
            if !next_combination(&mut idx, list.len()) {
                break;
            }
        }
    }
    Ok(CoverOutcome {
        route: Route::Families,
        found: Err(if list.is_empty() {
            Obstruction::NoCandidates
        } else {
            Obstruction::Exhausted { tried: list }
        }),
    })
}

/// Advances `idx` to the next `k`-subset of `0..n` in lex order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
