//! Covering-sieve assignments on finite categories.

mod axioms;
pub mod random;

use std::collections::{BTreeMap, BTreeSet};

use fincat_core::{CategoryError, FinCat, Mor, Obj};
use fixedbitset::FixedBitSet;
use sieves::{all_sieves, generate_sieve, PrincipalSieves, Sieve, SieveError};
use thiserror::Error;

pub use axioms::{Axiom, AxiomOutcome, AxiomReport, Counterexample, CounterexampleView};

/// Default cap on the number of sieves enumerated on one object.
pub const DEFAULT_SIEVE_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("universe too large: {what} exceeds {limit}")]
    UniverseTooLarge { what: String, limit: usize },
    #[error("listed sieve targets `{found}` but is filed under `{expected}`")]
    WrongTarget { expected: String, found: String },
    #[error("topology lists {found} objects, category has {expected}")]
    ObjectCount { expected: usize, found: usize },
    #[error(transparent)]
    Sieve(#[from] SieveError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

fn too_many(err: SieveError, what: impl Into<String>) -> TopologyError {
    match err {
        SieveError::TooMany { limit } => TopologyError::UniverseTooLarge {
            what: what.into(),
            limit,
        },
        other => TopologyError::Sieve(other),
    }
}

/// An explicit list of covering sieves per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionalTopology {
    label: String,
    covering: Vec<BTreeSet<Sieve>>,
}

impl ExtensionalTopology {
    pub fn new(cat: &FinCat, label: impl Into<String>, covering: Vec<Vec<Sieve>>) -> Result<Self, TopologyError> {
        if covering.len() != cat.num_objects() {
            return Err(TopologyError::ObjectCount {
                expected: cat.num_objects(),
                found: covering.len(),
            });
        }
        for (o, list) in covering.iter().enumerate() {
            if let Some(s) = list.iter().find(|s| s.target() != Obj(o)) {
                return Err(TopologyError::WrongTarget {
                    expected: cat.object_name(Obj(o)).to_string(),
                    found: cat.object_name(s.target()).to_string(),
                });
            }
        }
        Ok(ExtensionalTopology {
            label: label.into(),
            covering: covering.into_iter().map(|l| l.into_iter().collect()).collect(),
        })
    }

    /// Builds from object names to lists of morphism-name lists; objects
    /// not mentioned get no covering sieves.
    pub fn from_names(
        cat: &FinCat,
        label: impl Into<String>,
        by_name: &BTreeMap<String, Vec<Vec<String>>>,
    ) -> Result<Self, TopologyError> {
        let mut covering = vec![Vec::new(); cat.num_objects()];
        for (obj, sieves) in by_name {
            let o = cat.find_object(obj)?;
            for names in sieves {
                let ms = names
                    .iter()
                    .map(|n| cat.find_morphism(n))
                    .collect::<Result<Vec<_>, _>>()?;
                covering[o.0].push(Sieve::from_members(cat, o, &ms)?);
            }
        }
        Self::new(cat, label, covering)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn covering(&self, o: Obj) -> &BTreeSet<Sieve> {
        &self.covering[o.0]
    }

    /// Whether every sieve covering here also covers in `other`.
    pub fn is_finer_than(&self, other: &ExtensionalTopology) -> bool {
        self.covering.iter().zip(&other.covering).all(|(a, b)| a.is_subset(b))
    }

    pub fn to_names(&self, cat: &FinCat) -> BTreeMap<String, Vec<Vec<String>>> {
        cat.object_ids()
            .map(|o| {
                let lists = self.covering[o.0].iter().map(|s| s.member_names(cat)).collect();
                (cat.object_name(o).to_string(), lists)
            })
            .collect()
    }
}

/// A subobject inclusion together with the points of its codomain that it
/// covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Designated {
    pub inclusion: Mor,
    pub points: FixedBitSet,
}

/// Covering by designated subobject inclusions.
///
/// A sieve `S` on `C` covers iff it is generated by the designated
/// inclusions it contains and their point sets exhaust the points of `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubobjectRule {
    label: String,
    points: Vec<usize>,
    designated: Vec<Vec<Designated>>,
}

impl SubobjectRule {
    /// `points[o]` is the number of points of object `o`; each designated
    /// entry lists the points of its codomain that the inclusion covers.
    pub fn new(
        cat: &FinCat,
        label: impl Into<String>,
        points: Vec<usize>,
        designated: impl IntoIterator<Item = (Mor, Vec<usize>)>,
    ) -> Result<Self, TopologyError> {
        if points.len() != cat.num_objects() {
            return Err(TopologyError::ObjectCount {
                expected: cat.num_objects(),
                found: points.len(),
            });
        }
        let mut lists: Vec<Vec<Designated>> = vec![Vec::new(); cat.num_objects()];
        for (inclusion, pts) in designated {
            let c = cat.cod(inclusion);
            let mut set = FixedBitSet::with_capacity(points[c.0]);
            for p in pts {
                if p >= points[c.0] {
                    return Err(CategoryError::OutOfRange(p).into());
                }
                set.insert(p);
            }
            lists[c.0].push(Designated { inclusion, points: set });
        }
        for l in &mut lists {
            l.sort_by_key(|d| d.inclusion);
        }
        Ok(SubobjectRule {
            label: label.into(),
            points,
            designated: lists,
        })
    }

    /// A rule with the same points keeping only some designated inclusions.
    pub fn restrict(&self, label: impl Into<String>, keep: impl Fn(Obj, &Designated) -> bool) -> Self {
        let designated = self
            .designated
            .iter()
            .enumerate()
            .map(|(o, l)| l.iter().filter(|d| keep(Obj(o), d)).cloned().collect())
            .collect();
        SubobjectRule {
            label: label.into(),
            points: self.points.clone(),
            designated,
        }
    }

    /// Drops inclusions whose image is the whole codomain.
    pub fn proper(&self, label: impl Into<String>) -> Self {
        let points = self.points.clone();
        self.restrict(label, move |o, d| d.points.count_ones(..) < points[o.0])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn points(&self, o: Obj) -> usize {
        self.points[o.0]
    }

    pub fn designated(&self, o: Obj) -> &[Designated] {
        &self.designated[o.0]
    }

    fn covers(&self, cat: &FinCat, s: &Sieve) -> bool {
        let t = s.target();
        let mut generated = FixedBitSet::with_capacity(cat.num_morphisms());
        let mut pts = FixedBitSet::with_capacity(self.points[t.0]);
        for d in self.designated[t.0].iter().filter(|d| s.contains(d.inclusion)) {
            for &h in cat.homs_into(cat.dom(d.inclusion)) {
                generated.insert(cat.comp(d.inclusion, h).0);
            }
            pts.union_with(&d.points);
        }
        &generated == s.member_set() && pts.count_ones(..) == self.points[t.0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Topology {
    /// Every sieve covers, the empty sieve included.
    Discrete,
    /// Only maximal sieves cover.
    Trivial,
    Extensional(ExtensionalTopology),
    Rule(SubobjectRule),
}

impl Topology {
    pub fn label(&self) -> &str {
        match self {
            Topology::Discrete => "discrete",
            Topology::Trivial => "trivial",
            Topology::Extensional(e) => e.label(),
            Topology::Rule(r) => r.label(),
        }
    }

    pub fn is_covering_sieve(&self, cat: &FinCat, s: &Sieve) -> bool {
        match self {
            Topology::Discrete => true,
            Topology::Trivial => s.is_full(cat),
            Topology::Extensional(e) => e.covering(s.target()).contains(s),
            Topology::Rule(r) => r.covers(cat, s),
        }
    }

    pub fn is_covering_family(&self, cat: &FinCat, target: Obj, fam: &[Mor]) -> Result<bool, SieveError> {
        Ok(self.is_covering_sieve(cat, &generate_sieve(cat, target, fam)?))
    }

    /// Covering sieves on `o` in canonical order.
    pub fn covering_sieves(&self, cat: &FinCat, o: Obj, limit: usize) -> Result<Vec<Sieve>, TopologyError> {
        match self {
            Topology::Discrete => all_sieves(cat, o, limit).map_err(|e| too_many(e, "sieves on one object")),
            Topology::Trivial => Ok(vec![Sieve::full(cat, o)]),
            Topology::Extensional(e) => Ok(e.covering(o).iter().cloned().collect()),
            Topology::Rule(r) => {
                let principal = PrincipalSieves::new(cat);
                let gens: Vec<Mor> = r.designated(o).iter().map(|d| d.inclusion).collect();
                let candidates = sieves::unions_of_principals(cat, &principal, o, &gens, limit)
                    .map_err(|e| too_many(e, "sieves generated by designated inclusions"))?;
                Ok(candidates.into_iter().filter(|s| r.covers(cat, s)).collect())
            }
        }
    }

    /// The same assignment as an explicit list.
    pub fn extensionalize(&self, cat: &FinCat, limit: usize) -> Result<ExtensionalTopology, TopologyError> {
        let covering = cat
            .object_ids()
            .map(|o| self.covering_sieves(cat, o, limit))
            .collect::<Result<Vec<_>, _>>()?;
        ExtensionalTopology::new(cat, self.label(), covering)
    }

    /// Whether every covering sieve of `self` covers under `other`.
    pub fn is_finer_than(&self, cat: &FinCat, other: &Topology, limit: usize) -> Result<bool, TopologyError> {
        for o in cat.object_ids() {
            if !self
                .covering_sieves(cat, o, limit)?
                .iter()
                .all(|s| other.is_covering_sieve(cat, s))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every sieve containing a covering sieve also covers.
    pub fn is_upward_closed(&self, cat: &FinCat, limit: usize) -> Result<bool, TopologyError> {
        for o in cat.object_ids() {
            let all = all_sieves(cat, o, limit).map_err(|e| too_many(e, "sieves on one object"))?;
            let covering: Vec<&Sieve> = all.iter().filter(|s| self.is_covering_sieve(cat, s)).collect();
            for s in &all {
                if !self.is_covering_sieve(cat, s) && covering.iter().any(|c| c.is_subset(s)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
