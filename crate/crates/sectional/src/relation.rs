//! Relations on hom-sets.

use std::collections::{HashMap, HashSet};

use fincat_core::{FinCat, Mor, Obj};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("class table has {found} entries for {expected} morphisms")]
    NotTotal { expected: usize, found: usize },
    #[error("not an equivalence relation: {0}")]
    NotEquivalence(String),
    #[error("`{a}` and `{b}` lie in different hom-sets")]
    AcrossHomSets { a: String, b: String },
    #[error("not a functor: {0}")]
    NotAFunctor(String),
}

/// A relation between morphisms. Only pairs in the same hom-set matter.
pub trait MorphismRelation {
    fn related(&self, a: Mor, b: Mor) -> bool;
}

/// An equivalence relation on each hom-set, stored as a class id per
/// morphism. Composition compatibility is computed, never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomRelation {
    homs: Vec<(Obj, Obj)>,
    class: Vec<usize>,
    trivial: bool,
    preserves_composition: bool,
}

impl MorphismRelation for HomRelation {
    fn related(&self, a: Mor, b: Mor) -> bool {
        self.homs[a.0] == self.homs[b.0] && self.class[a.0] == self.class[b.0]
    }
}

fn same_hom(cat: &FinCat, a: Mor, b: Mor) -> Result<(), RelationError> {
    if cat.dom(a) == cat.dom(b) && cat.cod(a) == cat.cod(b) {
        Ok(())
    } else {
        Err(RelationError::AcrossHomSets {
            a: cat.name(a).to_string(),
            b: cat.name(b).to_string(),
        })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

impl HomRelation {
    fn from_class_ids(cat: &FinCat, class: Vec<usize>) -> Self {
        let homs: Vec<(Obj, Obj)> = cat.morphism_ids().map(|m| (cat.dom(m), cat.cod(m))).collect();
        // canonical class id: least morphism index in the class
        let mut first: HashMap<((Obj, Obj), usize), usize> = HashMap::new();
        let class: Vec<usize> = class
            .iter()
            .enumerate()
            .map(|(i, &c)| *first.entry((homs[i], c)).or_insert(i))
            .collect();
        let trivial = class.iter().enumerate().all(|(i, &c)| c == i);
        let mut rel = HomRelation {
            homs,
            class,
            trivial,
            preserves_composition: false,
        };
        // equality is a congruence; skip the quadratic check
        rel.preserves_composition = trivial || rel.check_composition(cat);
        rel
    }

    /// Equality.
    pub fn trivial(cat: &FinCat) -> Self {
        Self::from_class_ids(cat, (0..cat.num_morphisms()).collect())
    }

    /// Everything in a hom-set is related.
    pub fn total(cat: &FinCat) -> Self {
        Self::from_class_ids(cat, vec![0; cat.num_morphisms()])
    }

    /// One class label per morphism; equal labels within a hom-set are
    /// related.
    pub fn from_classes(cat: &FinCat, labels: &[usize]) -> Result<Self, RelationError> {
        if labels.len() != cat.num_morphisms() {
            return Err(RelationError::NotTotal {
                expected: cat.num_morphisms(),
                found: labels.len(),
            });
        }
        Ok(Self::from_class_ids(cat, labels.to_vec()))
    }

    /// The relation given by exactly these pairs, which must already be
    /// reflexive, symmetric and transitive.
    pub fn from_pairs(cat: &FinCat, pairs: &[(Mor, Mor)]) -> Result<Self, RelationError> {
        let set: HashSet<(Mor, Mor)> = pairs.iter().copied().collect();
        for &(a, b) in pairs {
            same_hom(cat, a, b)?;
        }
        let name = |m: Mor| cat.name(m).to_string();
        if let Some(m) = cat.morphism_ids().find(|&m| !set.contains(&(m, m))) {
            return Err(RelationError::NotEquivalence(format!(
                "`{}` is not related to itself",
                name(m)
            )));
        }
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| !set.contains(&(b, a))) {
            return Err(RelationError::NotEquivalence(format!(
                "`{}` ~ `{}` but not the reverse",
                name(a),
                name(b)
            )));
        }
        for &(a, b) in pairs {
            for &(b2, c) in pairs {
                if b2 == b && !set.contains(&(a, c)) {
                    return Err(RelationError::NotEquivalence(format!(
                        "`{}` ~ `{}` ~ `{}` but not `{}` ~ `{}`",
                        name(a),
                        name(b),
                        name(c),
                        name(a),
                        name(c)
                    )));
                }
            }
        }
        Self::generated_by(cat, pairs)
    }

    /// The least equivalence relation containing the pairs.
    pub fn generated_by(cat: &FinCat, pairs: &[(Mor, Mor)]) -> Result<Self, RelationError> {
        let mut uf = UnionFind((0..cat.num_morphisms()).collect());
        for &(a, b) in pairs {
            same_hom(cat, a, b)?;
            uf.union(a.0, b.0);
        }
        let class = (0..cat.num_morphisms()).map(|i| uf.find(i)).collect();
        Ok(Self::from_class_ids(cat, class))
    }

    /// The least equivalence relation containing the pairs that is stable
    /// under composition on both sides.
    pub fn congruence_generated_by(cat: &FinCat, pairs: &[(Mor, Mor)]) -> Result<Self, RelationError> {
        let mut uf = UnionFind((0..cat.num_morphisms()).collect());
        for &(a, b) in pairs {
            same_hom(cat, a, b)?;
            uf.union(a.0, b.0);
        }
        loop {
            let mut changed = false;
            for a in cat.morphism_ids() {
                let root = uf.find(a.0);
                if root == a.0 {
                    continue;
                }
                let b = Mor(root);
                for &g in cat.homs_from(cat.cod(a)) {
                    changed |= uf.union(cat.comp(g, a).0, cat.comp(g, b).0);
                }
                for &h in cat.homs_into(cat.dom(a)) {
                    changed |= uf.union(cat.comp(a, h).0, cat.comp(b, h).0);
                }
            }
            if !changed {
                break;
            }
        }
        let class = (0..cat.num_morphisms()).map(|i| uf.find(i)).collect();
        Ok(Self::from_class_ids(cat, class))
    }

    /// `f ~ g` iff the functor sends them to the same morphism.
    ///
    /// The functor is given by its object and morphism tables into `target`
    /// and is checked for domains, identities and composites.
    pub fn functor_induced(
        cat: &FinCat,
        target: &FinCat,
        on_objects: &[Obj],
        on_morphisms: &[Mor],
    ) -> Result<Self, RelationError> {
        if on_objects.len() != cat.num_objects() || on_morphisms.len() != cat.num_morphisms() {
            return Err(RelationError::NotAFunctor("tables do not match the category".into()));
        }
        for m in cat.morphism_ids() {
            let fm = on_morphisms[m.0];
            if fm.0 >= target.num_morphisms()
                || target.dom(fm) != on_objects[cat.dom(m).0]
                || target.cod(fm) != on_objects[cat.cod(m).0]
            {
                return Err(RelationError::NotAFunctor(format!(
                    "`{}` lands in the wrong hom-set",
                    cat.name(m)
                )));
            }
        }
        for o in cat.object_ids() {
            if on_morphisms[cat.identity(o).0] != target.identity(on_objects[o.0]) {
                return Err(RelationError::NotAFunctor(format!(
                    "identity of `{}` is not preserved",
                    cat.object_name(o)
                )));
            }
        }
        for g in cat.morphism_ids() {
            for &f in cat.homs_into(cat.dom(g)) {
                if on_morphisms[cat.comp(g, f).0] != target.comp(on_morphisms[g.0], on_morphisms[f.0]) {
                    return Err(RelationError::NotAFunctor(format!(
                        "`{}`∘`{}` is not preserved",
                        cat.name(g),
                        cat.name(f)
                    )));
                }
            }
        }
        Ok(Self::from_class_ids(cat, on_morphisms.iter().map(|m| m.0).collect()))
    }

    fn check_composition(&self, cat: &FinCat) -> bool {
        // For each pair of classes, all composites must land in one class.
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        cat.morphism_ids().all(|f| {
            cat.homs_from(cat.cod(f)).iter().all(|&g| {
                let c = self.class[cat.comp(g, f).0];
                *seen.entry((self.class[g.0], self.class[f.0])).or_insert(c) == c
            })
        })
    }

    pub fn class_of(&self, m: Mor) -> usize {
        self.class[m.0]
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn preserves_composition(&self) -> bool {
        self.preserves_composition
    }

    /// Related pairs, each hom-set in index order.
    pub fn pairs(&self) -> Vec<(Mor, Mor)> {
        let n = self.class.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (Mor(a), Mor(b))))
            .filter(|&(a, b)| self.related(a, b))
            .collect()
    }
}

/// An arbitrary set of related pairs; need not be reflexive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExplicitRelation {
    pairs: HashSet<(Mor, Mor)>,
}

impl ExplicitRelation {
    pub fn new(pairs: impl IntoIterator<Item = (Mor, Mor)>) -> Self {
        ExplicitRelation {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn is_reflexive(&self, cat: &FinCat) -> bool {
        cat.morphism_ids().all(|m| self.pairs.contains(&(m, m)))
    }
}

impl MorphismRelation for ExplicitRelation {
    fn related(&self, a: Mor, b: Mor) -> bool {
        self.pairs.contains(&(a, b))
    }
}
