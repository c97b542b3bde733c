//! Subgroup enumeration and covering numbers.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use sectional::cover::{maximal_sets, min_set_cover};
use sectional::ExtNat;
use serde::{Deserialize, Serialize};

use crate::{AlgebraError, FinGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgroupFilter {
    #[default]
    All,
    Proper,
    Cyclic,
    ProperCyclic,
}

impl SubgroupFilter {
    pub fn proper(self) -> bool {
        matches!(self, SubgroupFilter::Proper | SubgroupFilter::ProperCyclic)
    }

    pub fn cyclic(self) -> bool {
        matches!(self, SubgroupFilter::Cyclic | SubgroupFilter::ProperCyclic)
    }
}

impl std::str::FromStr for SubgroupFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" | "subgroups" => Ok(SubgroupFilter::All),
            "proper" => Ok(SubgroupFilter::Proper),
            "cyclic" => Ok(SubgroupFilter::Cyclic),
            "proper-cyclic" => Ok(SubgroupFilter::ProperCyclic),
            other => Err(format!("unknown subgroup variant `{other}`")),
        }
    }
}

/// A subgroup as a sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
    #[serde(skip)]
    cyclic: bool,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn bits(&self, universe: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(universe);
        for &a in &self.elements {
            b.insert(a);
        }
        b
    }
}

fn check_order(g: &FinGroup, limit: usize) -> Result<(), AlgebraError> {
    if g.order() > limit {
        return Err(AlgebraError::OrderTooLarge {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Every subgroup of `g` that passes `filter`, ordered by size and then
/// by element list.
pub fn subgroups(g: &FinGroup, filter: SubgroupFilter) -> Result<Vec<Subgroup>, AlgebraError> {
    subgroups_with_limit(g, filter, crate::DEFAULT_MAX_ORDER)
}

pub fn subgroups_with_limit(g: &FinGroup, filter: SubgroupFilter, limit: usize) -> Result<Vec<Subgroup>, AlgebraError> {
    check_order(g, limit)?;
    // subgroup element sets -> a generating set for each
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let add = |found: &mut BTreeMap<Vec<usize>, Vec<usize>>, gens: Vec<usize>| -> bool {
        let set: Vec<usize> = g.generated(gens.iter().copied()).ones().collect();
        if found.contains_key(&set) {
            return false;
        }
        found.insert(set, gens);
        true
    };
    for a in g.elements() {
        add(&mut found, vec![a]);
    }
    let cyclic: Vec<Vec<usize>> = found.keys().cloned().collect();
    for a in g.elements() {
        for b in a + 1..g.order() {
            add(&mut found, vec![a, b]);
        }
    }
    // joins until nothing new appears
    loop {
        let current: Vec<Vec<usize>> = found.values().cloned().collect();
        let mut grew = false;
        for (i, x) in current.iter().enumerate() {
            for y in &current[i + 1..] {
                let gens: Vec<usize> = x.iter().chain(y).copied().collect();
                grew |= add(&mut found, gens);
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_keys()
        .map(|elements| Subgroup {
            cyclic: cyclic.binary_search(&elements).is_ok(),
            elements,
        })
        .filter(|s| (!filter.proper() || s.order() < g.order()) && (!filter.cyclic() || s.cyclic))
        .collect();
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(out)
}

/// A minimum cover of a group's elements, or the first element no
/// admissible subgroup contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub value: ExtNat,
    pub cover: Vec<Vec<usize>>,
    pub uncovered: Option<usize>,
}

/// Exact minimum number of `sets` whose union is `0..universe`, restricted
/// to inclusion-maximal sets.
pub(crate) fn exact_cover(universe: usize, sets: &[Vec<usize>]) -> CoverCertificate {
    let bits: Vec<FixedBitSet> = sets
        .iter()
        .map(|s| {
            let mut b = FixedBitSet::with_capacity(universe);
            s.iter().for_each(|&a| b.insert(a));
            b
        })
        .collect();
    let maximal = maximal_sets(&bits);
    let reduced: Vec<FixedBitSet> = maximal.iter().map(|&i| bits[i].clone()).collect();
    match min_set_cover(universe, &reduced) {
        Some(chosen) => CoverCertificate {
            value: ExtNat::Finite(chosen.len()),
            cover: chosen.iter().map(|&i| sets[maximal[i]].clone()).collect(),
            uncovered: None,
        },
        None => {
            let mut union = FixedBitSet::with_capacity(universe);
            bits.iter().for_each(|b| union.union_with(b));
            CoverCertificate {
                value: ExtNat::Infinite,
                cover: Vec::new(),
                uncovered: (0..universe).find(|&a| !union.contains(a)),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverVariant {
    Proper,
    ProperCyclic,
}

impl std::str::FromStr for CoverVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "proper" => Ok(CoverVariant::Proper),
            "cyclic" | "proper-cyclic" => Ok(CoverVariant::ProperCyclic),
            other => Err(format!("unknown covering variant `{other}`")),
        }
    }
}

impl From<CoverVariant> for SubgroupFilter {
    fn from(v: CoverVariant) -> Self {
        match v {
            CoverVariant::Proper => SubgroupFilter::Proper,
            CoverVariant::ProperCyclic => SubgroupFilter::ProperCyclic,
        }
    }
}

/// Least number of proper (cyclic) subgroups whose union is the group.
pub fn sigma_group(g: &FinGroup, variant: CoverVariant) -> Result<CoverCertificate, AlgebraError> {
    let subs = subgroups(g, variant.into())?;
    let sets: Vec<Vec<usize>> = subs.into_iter().map(|s| s.elements).collect();
    Ok(exact_cover(g.order(), &sets))
}
