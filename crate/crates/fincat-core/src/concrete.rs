use std::collections::HashMap;

use crate::category::{Draft, FinCat, Mor, Morphism, Obj};
use crate::error::CategoryError;

/// Builds a subcategory of finite sets: objects carry a carrier size and
/// morphisms are value tables. Composition is composition of functions, so
/// associativity holds by construction and is not re-checked.
#[derive(Debug, Clone, Default)]
pub struct ConcreteBuilder {
    objects: Vec<(String, usize)>,
    morphisms: Vec<(String, Obj, Obj, Vec<usize>)>,
    index: HashMap<(Obj, Obj, Vec<usize>), Mor>,
}

impl ConcreteBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>, size: usize) -> Obj {
        let name = name.into();
        let o = Obj(self.objects.len());
        self.objects.push((name.clone(), size));
        self.morphism(format!("1_{name}"), o, o, (0..size).collect());
        o
    }

    pub fn carrier_size(&self, o: Obj) -> usize {
        self.objects[o.0].1
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn map(&self, m: Mor) -> &[usize] {
        &self.morphisms[m.0].3
    }

    pub fn find(&self, dom: Obj, cod: Obj, map: &[usize]) -> Option<Mor> {
        self.index.get(&(dom, cod, map.to_vec())).copied()
    }

    /// Adds a function `dom → cod`; an existing equal function is reused.
    ///
    /// # Panics
    /// If the table does not describe a function between the carriers.
    pub fn morphism(&mut self, name: impl Into<String>, dom: Obj, cod: Obj, map: Vec<usize>) -> Mor {
        assert_eq!(map.len(), self.objects[dom.0].1, "table length must match the domain");
        assert!(
            map.iter().all(|&v| v < self.objects[cod.0].1),
            "values must lie in the codomain"
        );
        if let Some(m) = self.find(dom, cod, &map) {
            return m;
        }
        let m = Mor(self.morphisms.len());
        self.index.insert((dom, cod, map.clone()), m);
        self.morphisms.push((name.into(), dom, cod, map));
        m
    }

    /// Adds composites until the morphism set is closed under composition.
    pub fn close(&mut self, limit: usize) -> Result<(), CategoryError> {
        let mut done = 0;
        loop {
            let n = self.morphisms.len();
            if n > limit {
                return Err(CategoryError::TooLarge { count: n, limit });
            }
            let mut added = false;
            for g in 0..n {
                for f in 0..n {
                    if g < done && f < done {
                        continue;
                    }
                    let (_, fd, fc, fm) = &self.morphisms[f];
                    let (_, gd, gc, gm) = &self.morphisms[g];
                    if fc != gd {
                        continue;
                    }
                    let map: Vec<usize> = fm.iter().map(|&x| gm[x]).collect();
                    let (dom, cod) = (*fd, *gc);
                    if self.find(dom, cod, &map).is_none() {
                        let name = format!("{}.{}", self.morphisms[g].0, self.morphisms[f].0);
                        self.morphism(name, dom, cod, map);
                        added = true;
                    }
                }
            }
            done = n;
            if !added {
                return Ok(());
            }
        }
    }

    /// Validates the collection as a category.
    ///
    /// Fails with `UndefinedComposite` if it is not closed under composition.
    pub fn build(&self, limit: usize) -> Result<FinCat, CategoryError> {
        let objects = self.objects.iter().map(|(s, _)| s.clone()).collect();
        let morphisms = self
            .morphisms
            .iter()
            .map(|(name, dom, cod, _)| Morphism {
                name: name.clone(),
                dom: *dom,
                cod: *cod,
            })
            .collect();
        let identities = (0..self.objects.len())
            .map(|o| {
                let size = self.objects[o].1;
                self.find(Obj(o), Obj(o), &(0..size).collect::<Vec<_>>())
            })
            .collect();
        let mut draft = Draft::new(objects, morphisms, identities, limit)?;
        let mut by_dom: Vec<Vec<usize>> = vec![Vec::new(); self.objects.len()];
        for (i, m) in self.morphisms.iter().enumerate() {
            by_dom[m.1 .0].push(i);
        }
        for (f, (_, fd, fc, fm)) in self.morphisms.iter().enumerate() {
            for &g in &by_dom[fc.0] {
                let (_, _, gc, gm) = &self.morphisms[g];
                let map: Vec<usize> = fm.iter().map(|&x| gm[x]).collect();
                let gf = self
                    .find(*fd, *gc, &map)
                    .ok_or_else(|| CategoryError::UndefinedComposite {
                        g: self.morphisms[g].0.clone(),
                        f: self.morphisms[f].0.clone(),
                    })?;
                draft.set(Mor(g), Mor(f), gf)?;
            }
        }
        draft.finish(false)
    }
}
