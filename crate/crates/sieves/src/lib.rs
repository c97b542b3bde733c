//! Sieves: sets of morphisms into a fixed object that are closed under
//! precomposition.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use fincat_core::{FinCat, Mor, Obj};
use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("`{morphism}` does not have codomain `{expected}`")]
    WrongCodomain { morphism: String, expected: String },
    #[error("cannot pull back a sieve on `{target}` along `{along}`")]
    TargetMismatch { along: String, target: String },
    #[error("not closed under precomposition: `{missing}` is missing")]
    NotASieve { missing: String },
    #[error("the cospan (`{f}`, `{g}`) has no weak pullback")]
    NoWeakPullback { f: String, g: String },
    #[error("more than {limit} sieves")]
    TooMany { limit: usize },
}

/// A sieve on `target`. Equality, ordering and hashing use the member set
/// only; the generating family is kept for reporting.
#[derive(Debug, Clone)]
pub struct Sieve {
    target: Obj,
    members: FixedBitSet,
    generators: Option<Vec<Mor>>,
}

impl PartialEq for Sieve {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target && self.members == other.members
    }
}

impl Eq for Sieve {}

impl Hash for Sieve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.target.hash(state);
        self.members.hash(state);
    }
}

impl Ord for Sieve {
    /// Target first, then the sorted member lists lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.target
            .cmp(&other.target)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Sieve {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_codomains(cat: &FinCat, target: Obj, ms: &[Mor]) -> Result<(), SieveError> {
    match ms.iter().find(|&&m| cat.cod(m) != target) {
        Some(&m) => Err(SieveError::WrongCodomain {
            morphism: cat.name(m).to_string(),
            expected: cat.object_name(target).to_string(),
        }),
        None => Ok(()),
    }
}

impl Sieve {
    pub fn empty(cat: &FinCat, target: Obj) -> Sieve {
        Sieve {
            target,
            members: FixedBitSet::with_capacity(cat.num_morphisms()),
            generators: None,
        }
    }

    /// All morphisms into `target`.
    pub fn full(cat: &FinCat, target: Obj) -> Sieve {
        let mut s = Sieve::empty(cat, target);
        for &m in cat.homs_into(target) {
            s.members.insert(m.0);
        }
        s
    }

    /// Checks closure and wraps the set.
    pub fn from_members(cat: &FinCat, target: Obj, ms: &[Mor]) -> Result<Sieve, SieveError> {
        check_codomains(cat, target, ms)?;
        let mut s = Sieve::empty(cat, target);
        for &m in ms {
            s.members.insert(m.0);
        }
        if let Some(missing) = closure_gap(cat, &s.members, ms) {
            return Err(SieveError::NotASieve {
                missing: cat.name(missing).to_string(),
            });
        }
        Ok(s)
    }

    pub fn target(&self) -> Obj {
        self.target
    }

    pub fn members(&self) -> impl Iterator<Item = Mor> + '_ {
        self.members.ones().map(Mor)
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, m: Mor) -> bool {
        self.members.contains(m.0)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn is_full(&self, cat: &FinCat) -> bool {
        cat.homs_into(self.target).len() == self.len()
    }

    pub fn is_subset(&self, other: &Sieve) -> bool {
        self.target == other.target && self.members.is_subset(&other.members)
    }

    /// The family this sieve was generated from, when known.
    pub fn generators(&self) -> Option<&[Mor]> {
        self.generators.as_deref()
    }

    pub fn union(&self, other: &Sieve) -> Sieve {
        assert_eq!(self.target, other.target);
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Sieve {
            target: self.target,
            members,
            generators: None,
        }
    }

    pub fn intersection(&self, other: &Sieve) -> Sieve {
        assert_eq!(self.target, other.target);
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Sieve {
            target: self.target,
            members,
            generators: None,
        }
    }

    /// Sorted member indices.
    pub fn canonical(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn member_names(&self, cat: &FinCat) -> Vec<String> {
        self.members().map(|m| cat.name(m).to_string()).collect()
    }
}

fn closure_gap(cat: &FinCat, set: &FixedBitSet, ms: &[Mor]) -> Option<Mor> {
    ms.iter().find_map(|&f| {
        cat.homs_into(cat.dom(f))
            .iter()
            .map(|&g| cat.comp(f, g))
            .find(|fg| !set.contains(fg.0))
    })
}

pub fn is_sieve(cat: &FinCat, target: Obj, ms: &[Mor]) -> Result<bool, SieveError> {
    check_codomains(cat, target, ms)?;
    let mut set = FixedBitSet::with_capacity(cat.num_morphisms());
    for &m in ms {
        set.insert(m.0);
    }
    Ok(closure_gap(cat, &set, ms).is_none())
}

/// The smallest sieve containing `gens`: every `f∘h` with `f` a generator.
pub fn generate_sieve(cat: &FinCat, target: Obj, gens: &[Mor]) -> Result<Sieve, SieveError> {
    check_codomains(cat, target, gens)?;
    let mut s = Sieve::empty(cat, target);
    for &f in gens {
        for &h in cat.homs_into(cat.dom(f)) {
            s.members.insert(cat.comp(f, h).0);
        }
    }
    s.generators = Some(gens.to_vec());
    Ok(s)
}

/// `f*S = { g : f∘g ∈ S }`.
pub fn pullback_sieve(cat: &FinCat, f: Mor, s: &Sieve) -> Result<Sieve, SieveError> {
    if cat.cod(f) != s.target {
        return Err(SieveError::TargetMismatch {
            along: cat.name(f).to_string(),
            target: cat.object_name(s.target).to_string(),
        });
    }
    let d = cat.dom(f);
    let mut out = Sieve::empty(cat, d);
    for &g in cat.homs_into(d) {
        if s.contains(cat.comp(f, g)) {
            out.members.insert(g.0);
        }
    }
    Ok(out)
}

pub fn sieves_equal_generated(cat: &FinCat, target: Obj, gens_a: &[Mor], gens_b: &[Mor]) -> Result<bool, SieveError> {
    Ok(generate_sieve(cat, target, gens_a)? == generate_sieve(cat, target, gens_b)?)
}

/// Both sides of the pullback-of-a-generated-sieve identity: `f*⟨gens⟩`
/// computed directly, and the sieve generated by the `f`-side legs of the
/// lowest-index weak pullbacks of each cospan `(gᵢ, f)`.
pub fn pullback_generated_sides(cat: &FinCat, f: Mor, gens: &[Mor]) -> Result<(Sieve, Sieve), SieveError> {
    let target = cat.cod(f);
    let direct = pullback_sieve(cat, f, &generate_sieve(cat, target, gens)?)?;
    let mut legs = Vec::with_capacity(gens.len());
    for &g in gens {
        let sq = cat
            .first_weak_pullback(g, f)
            .ok()
            .flatten()
            .ok_or_else(|| SieveError::NoWeakPullback {
                f: cat.name(g).to_string(),
                g: cat.name(f).to_string(),
            })?;
        legs.push(sq.f_prime);
    }
    let via_legs = generate_sieve(cat, cat.dom(f), &legs)?;
    Ok((direct, via_legs))
}

pub fn pullback_generated_check(cat: &FinCat, f: Mor, gens: &[Mor]) -> Result<bool, SieveError> {
    let (direct, via_legs) = pullback_generated_sides(cat, f, gens)?;
    Ok(direct == via_legs)
}

/// Principal sieves `⟨f⟩` for every morphism, computed once.
#[derive(Debug, Clone)]
pub struct PrincipalSieves {
    sets: Vec<FixedBitSet>,
}

impl PrincipalSieves {
    pub fn new(cat: &FinCat) -> Self {
        let sets = cat
            .morphism_ids()
            .map(|f| {
                let mut s = FixedBitSet::with_capacity(cat.num_morphisms());
                for &h in cat.homs_into(cat.dom(f)) {
                    s.insert(cat.comp(f, h).0);
                }
                s
            })
            .collect();
        PrincipalSieves { sets }
    }

    pub fn of(&self, f: Mor) -> &FixedBitSet {
        &self.sets[f.0]
    }

    /// Whether `g` factors through `f`.
    pub fn factors(&self, g: Mor, f: Mor) -> bool {
        self.sets[f.0].contains(g.0)
    }

    /// `⟨gens⟩` as a union of principal sieves. Codomains are not checked.
    pub fn generate(&self, cat: &FinCat, target: Obj, gens: &[Mor]) -> Sieve {
        let mut s = Sieve::empty(cat, target);
        for &g in gens {
            s.members.union_with(&self.sets[g.0]);
        }
        s.generators = Some(gens.to_vec());
        s
    }

    /// Members of `s` that are maximal for factorization, one per class of
    /// mutually factoring morphisms (the least index). They generate `s`
    /// and no smaller family does.
    pub fn maximal_generators(&self, s: &Sieve) -> Vec<Mor> {
        let members: Vec<Mor> = s.members().collect();
        members
            .iter()
            .copied()
            .filter(|&f| {
                members.iter().all(|&g| {
                    // g strictly above f, or equivalent with a smaller index
                    let above = self.factors(f, g);
                    let below = self.factors(g, f);
                    !(above && (!below || g < f))
                })
            })
            .collect()
    }
}

/// Every sieve on `target`, in canonical order.
pub fn all_sieves(cat: &FinCat, target: Obj, limit: usize) -> Result<Vec<Sieve>, SieveError> {
    let principal = PrincipalSieves::new(cat);
    unions_of_principals(cat, &principal, target, cat.homs_into(target), limit)
}

/// All sieves of the form `⟨D⟩` for `D` a subset of `gens`, in canonical order.
pub fn unions_of_principals(
    cat: &FinCat,
    principal: &PrincipalSieves,
    target: Obj,
    gens: &[Mor],
    limit: usize,
) -> Result<Vec<Sieve>, SieveError> {
    let start = Sieve::empty(cat, target);
    let mut seen: HashSet<FixedBitSet> = HashSet::from([start.members.clone()]);
    let mut queue = VecDeque::from([start.members]);
    while let Some(cur) = queue.pop_front() {
        for &g in gens {
            if cur.contains(g.0) {
                continue;
            }
            let mut next = cur.clone();
            next.union_with(principal.of(g));
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(SieveError::TooMany { limit });
                }
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Sieve> = seen
        .into_iter()
        .map(|members| Sieve {
            target,
            members,
            generators: None,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Given `⟨f_family⟩ = ⟨g_family⟩`, picks for each member of `g_family` a
/// member of `f_family` it factors through. The result has at most
/// `|g_family|` elements and generates the same sieve. `None` when the two
/// families generate different sieves.
pub fn subcollection_for(
    cat: &FinCat,
    target: Obj,
    f_family: &[Mor],
    g_family: &[Mor],
) -> Result<Option<Vec<Mor>>, SieveError> {
    if !sieves_equal_generated(cat, target, f_family, g_family)? {
        return Ok(None);
    }
    let mut picked: Vec<Mor> = g_family
        .iter()
        .map(|&g| {
            f_family
                .iter()
                .copied()
                .find(|&f| cat.factor_through(g, f).is_some())
                .expect("g lies in the sieve generated by f_family")
        })
        .collect();
    picked.sort();
    picked.dedup();
    Ok(Some(picked))
}
