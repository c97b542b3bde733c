use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::CategoryError;

/// Default ceiling on the number of morphisms accepted by validation.
pub const DEFAULT_MAX_MORPHISMS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Obj(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mor(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

const UNDEF: u32 = u32::MAX;

/// A validated finite category.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    // table[g * n + f] = g∘f
    table: Vec<u32>,
    homs: Vec<Vec<Mor>>,
    into: Vec<Vec<Mor>>,
    out_of: Vec<Vec<Mor>>,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.table == other.table
    }
}

impl Eq for FinCat {}

/// Unvalidated category data shared by the builders.
pub(crate) struct Draft {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    table: Vec<u32>,
}

impl Draft {
    pub(crate) fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<Option<Mor>>,
        limit: usize,
    ) -> Result<Self, CategoryError> {
        if morphisms.len() > limit {
            return Err(CategoryError::TooLarge {
                count: morphisms.len(),
                limit,
            });
        }
        let mut seen = HashMap::new();
        for name in &objects {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(CategoryError::DuplicateName(name.clone()));
            }
        }
        let mut seen = HashMap::new();
        for m in &morphisms {
            if seen.insert(m.name.as_str(), ()).is_some() {
                return Err(CategoryError::DuplicateName(m.name.clone()));
            }
            if m.dom.0 >= objects.len() || m.cod.0 >= objects.len() {
                return Err(CategoryError::DomCodMismatch(format!(
                    "`{}` refers to a missing object",
                    m.name
                )));
            }
        }
        let mut ids = Vec::with_capacity(objects.len());
        for (i, id) in identities.iter().enumerate() {
            let id = id.ok_or_else(|| CategoryError::MissingIdentity(objects[i].clone()))?;
            let m = morphisms.get(id.0).ok_or(CategoryError::OutOfRange(id.0))?;
            if m.dom.0 != i || m.cod.0 != i {
                return Err(CategoryError::DomCodMismatch(format!(
                    "identity `{}` is not an endomorphism of `{}`",
                    m.name, objects[i]
                )));
            }
            ids.push(id);
        }
        let n = morphisms.len();
        Ok(Draft {
            objects,
            morphisms,
            identities: ids,
            table: vec![UNDEF; n * n],
        })
    }

    fn name(&self, m: Mor) -> String {
        self.morphisms[m.0].name.clone()
    }

    pub(crate) fn set(&mut self, g: Mor, f: Mor, gf: Mor) -> Result<(), CategoryError> {
        let n = self.morphisms.len();
        for m in [g, f, gf] {
            if m.0 >= n {
                return Err(CategoryError::OutOfRange(m.0));
            }
        }
        let (mg, mf, mgf) = (&self.morphisms[g.0], &self.morphisms[f.0], &self.morphisms[gf.0]);
        if mf.cod != mg.dom {
            return Err(CategoryError::DomCodMismatch(format!(
                "`{}`∘`{}` is not composable",
                mg.name, mf.name
            )));
        }
        if mgf.dom != mf.dom || mgf.cod != mg.cod {
            return Err(CategoryError::DomCodMismatch(format!(
                "`{}` cannot be the composite `{}`∘`{}`",
                mgf.name, mg.name, mf.name
            )));
        }
        let slot = &mut self.table[g.0 * n + f.0];
        if *slot != UNDEF && *slot as usize != gf.0 {
            return Err(CategoryError::ConflictingComposite {
                g: self.name(g),
                f: self.name(f),
            });
        }
        *slot = gf.0 as u32;
        Ok(())
    }

    /// Fills implied identity composites and checks every law.
    pub(crate) fn finish(mut self, check_associativity: bool) -> Result<FinCat, CategoryError> {
        let n = self.morphisms.len();
        for f in 0..n {
            let (dom, cod) = (self.morphisms[f].dom, self.morphisms[f].cod);
            for (id, g, h) in [
                (self.identities[cod.0], self.identities[cod.0].0, f),
                (self.identities[dom.0], f, self.identities[dom.0].0),
            ] {
                let slot = &mut self.table[g * n + h];
                if *slot == UNDEF {
                    *slot = f as u32;
                } else if *slot as usize != f {
                    return Err(CategoryError::IdentityLaw {
                        identity: self.name(id),
                        morphism: self.name(Mor(f)),
                    });
                }
            }
        }
        let cat = FinCat::index(self);
        for g in cat.morphism_ids() {
            for &f in cat.homs_into(cat.dom(g)) {
                if cat.table[g.0 * n + f.0] == UNDEF {
                    return Err(CategoryError::UndefinedComposite {
                        g: cat.name(g).to_string(),
                        f: cat.name(f).to_string(),
                    });
                }
            }
        }
        if check_associativity {
            for f in cat.morphism_ids() {
                for &g in cat.homs_from(cat.cod(f)) {
                    let gf = cat.comp(g, f);
                    for &h in cat.homs_from(cat.cod(g)) {
                        if cat.comp(cat.comp(h, g), f) != cat.comp(h, gf) {
                            return Err(CategoryError::NonAssociative {
                                h: cat.name(h).to_string(),
                                g: cat.name(g).to_string(),
                                f: cat.name(f).to_string(),
                            });
                        }
                    }
                }
            }
        }
        Ok(cat)
    }
}

impl FinCat {
    fn index(d: Draft) -> FinCat {
        let k = d.objects.len();
        let mut homs = vec![Vec::new(); k * k];
        let mut into = vec![Vec::new(); k];
        let mut out_of = vec![Vec::new(); k];
        for (i, m) in d.morphisms.iter().enumerate() {
            homs[m.dom.0 * k + m.cod.0].push(Mor(i));
            into[m.cod.0].push(Mor(i));
            out_of[m.dom.0].push(Mor(i));
        }
        let object_index = d.objects.iter().enumerate().map(|(i, s)| (s.clone(), Obj(i))).collect();
        let morphism_index = d
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.clone(), Mor(i)))
            .collect();
        FinCat {
            objects: d.objects,
            morphisms: d.morphisms,
            identities: d.identities,
            table: d.table,
            homs,
            into,
            out_of,
            object_index,
            morphism_index,
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn object_name(&self, o: Obj) -> &str {
        &self.objects[o.0]
    }

    pub fn morphism(&self, m: Mor) -> &Morphism {
        &self.morphisms[m.0]
    }

    pub fn name(&self, m: Mor) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn dom(&self, m: Mor) -> Obj {
        self.morphisms[m.0].dom
    }

    pub fn cod(&self, m: Mor) -> Obj {
        self.morphisms[m.0].cod
    }

    pub fn identity(&self, o: Obj) -> Mor {
        self.identities[o.0]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identities[self.dom(m).0] == m
    }

    pub fn find_object(&self, name: &str) -> Result<Obj, CategoryError> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
    }

    pub fn find_morphism(&self, name: &str) -> Result<Mor, CategoryError> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
    }

    /// `g∘f`, or `None` when `cod f != dom g`.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        match self.table[g.0 * self.morphisms.len() + f.0] {
            UNDEF => None,
            v => Some(Mor(v as usize)),
        }
    }

    /// `g∘f` for a pair known to be composable.
    ///
    /// # Panics
    /// If the pair is not composable.
    pub fn comp(&self, g: Mor, f: Mor) -> Mor {
        self.compose(g, f)
            .unwrap_or_else(|| panic!("`{}`∘`{}` is not composable", self.name(g), self.name(f)))
    }

    /// Morphisms `a → b` in index order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// Morphisms with codomain `b`, in index order.
    pub fn homs_into(&self, b: Obj) -> &[Mor] {
        &self.into[b.0]
    }

    /// Morphisms with domain `a`, in index order.
    pub fn homs_from(&self, a: Obj) -> &[Mor] {
        &self.out_of[a.0]
    }

    /// Least-index `h` with `f∘h = g`, if `g` factors through `f`.
    pub fn factor_through(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.cod(g) != self.cod(f) {
            return None;
        }
        self.hom(self.dom(g), self.dom(f))
            .iter()
            .copied()
            .find(|&h| self.comp(f, h) == g)
    }

    /// A pair `g1 != g2` with `f∘g1 = f∘g2`, if one exists.
    pub fn mono_witness(&self, f: Mor) -> Option<(Mor, Mor)> {
        let mut seen: HashMap<Mor, Mor> = HashMap::new();
        for &g in self.homs_into(self.dom(f)) {
            if let Some(&prev) = seen.get(&self.comp(f, g)) {
                return Some((prev, g));
            }
            seen.insert(self.comp(f, g), g);
        }
        None
    }

    pub fn is_monomorphism(&self, f: Mor) -> bool {
        self.mono_witness(f).is_none()
    }

    pub fn is_epimorphism(&self, f: Mor) -> bool {
        let mut seen = HashMap::new();
        self.homs_from(self.cod(f))
            .iter()
            .all(|&g| seen.insert(self.comp(g, f), ()).is_none())
    }

    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        self.hom(self.cod(f), self.dom(f))
            .iter()
            .copied()
            .find(|&g| self.is_identity(self.comp(g, f)) && self.is_identity(self.comp(f, g)))
    }

    pub fn is_isomorphism(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// Objects with exactly one morphism to every object.
    pub fn initial_objects(&self) -> Vec<Obj> {
        self.object_ids()
            .filter(|&i| self.object_ids().all(|x| self.hom(i, x).len() == 1))
            .collect()
    }

    /// Objects with at least one morphism to every object.
    pub fn weak_initial_objects(&self) -> Vec<Obj> {
        self.object_ids()
            .filter(|&i| self.object_ids().all(|x| !self.hom(i, x).is_empty()))
            .collect()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }
}
