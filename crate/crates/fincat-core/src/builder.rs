use crate::category::{Draft, FinCat, Mor, Morphism, Obj, DEFAULT_MAX_MORPHISMS};
use crate::error::CategoryError;

/// Incremental construction of a category by objects, arrows and composites.
///
/// Every object gets an identity named `1_<object>`; composites involving
/// identities are filled in automatically.
#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Option<Mor>>,
    composites: Vec<(Mor, Mor, Mor)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> Obj {
        let name = name.into();
        let o = Obj(self.objects.len());
        let id = Mor(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: format!("1_{name}"),
            dom: o,
            cod: o,
        });
        self.objects.push(name);
        self.identities.push(Some(id));
        o
    }

    pub fn identity(&self, o: Obj) -> Mor {
        self.identities[o.0].expect("builder objects always carry identities")
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: Obj, cod: Obj) -> Mor {
        self.morphisms.push(Morphism {
            name: name.into(),
            dom,
            cod,
        });
        Mor(self.morphisms.len() - 1)
    }

    /// Records `g∘f = gf`.
    pub fn compose(&mut self, g: Mor, f: Mor, gf: Mor) -> &mut Self {
        self.composites.push((g, f, gf));
        self
    }

    pub fn build(&self) -> Result<FinCat, CategoryError> {
        self.build_with_limit(DEFAULT_MAX_MORPHISMS)
    }

    pub fn build_with_limit(&self, limit: usize) -> Result<FinCat, CategoryError> {
        let mut draft = Draft::new(
            self.objects.clone(),
            self.morphisms.clone(),
            self.identities.clone(),
            limit,
        )?;
        for &(g, f, gf) in &self.composites {
            draft.set(g, f, gf)?;
        }
        draft.finish(true)
    }
}

impl FinCat {
    /// Objects `A`, `B` and a single arrow `u: A → B`.
    pub fn walking_arrow() -> FinCat {
        let mut b = CategoryBuilder::new();
        let a = b.object("A");
        let bb = b.object("B");
        b.morphism("u", a, bb);
        b.build().expect("walking arrow is a category")
    }

    /// One object `*` whose endomorphisms are the elements of a monoid.
    ///
    /// `table[x][y]` is the product `x·y`, read as the composite `x∘y`.
    /// Element `unit` becomes the identity.
    pub fn one_object(names: &[String], table: &[Vec<usize>], unit: usize) -> Result<FinCat, CategoryError> {
        let n = names.len();
        let morphisms = names
            .iter()
            .map(|name| Morphism {
                name: name.clone(),
                dom: Obj(0),
                cod: Obj(0),
            })
            .collect();
        let mut draft = Draft::new(vec!["*".into()], morphisms, vec![Some(Mor(unit))], usize::MAX)?;
        if table.len() != n {
            return Err(CategoryError::OutOfRange(table.len()));
        }
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(CategoryError::OutOfRange(row.len()));
            }
            for (y, &xy) in row.iter().enumerate() {
                draft.set(Mor(x), Mor(y), Mor(xy))?;
            }
        }
        draft.finish(true)
    }

    /// The cyclic group of order `n` as a one-object category.
    pub fn cyclic_group(n: usize) -> FinCat {
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        FinCat::one_object(&names, &table, 0).expect("cyclic group is a category")
    }

    /// The preorder category on `0..n` with an arrow `i → j` iff `leq(i, j)`.
    ///
    /// `leq` must be reflexive and transitive.
    pub fn preorder(names: &[String], leq: impl Fn(usize, usize) -> bool) -> Result<FinCat, CategoryError> {
        let n = names.len();
        let mut b = CategoryBuilder::new();
        let objs: Vec<Obj> = names.iter().map(|s| b.object(s.clone())).collect();
        let mut arrow = vec![None; n * n];
        for i in 0..n {
            arrow[i * n + i] = Some(b.identity(objs[i]));
            for j in 0..n {
                if i != j && leq(i, j) {
                    let name = format!("{}<={}", names[i], names[j]);
                    arrow[i * n + j] = Some(b.morphism(name, objs[i], objs[j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if let (Some(f), Some(g)) = (arrow[i * n + j], arrow[j * n + k]) {
                        let gf = arrow[i * n + k].ok_or_else(|| CategoryError::UndefinedComposite {
                            g: b.morphisms[g.0].name.clone(),
                            f: b.morphisms[f.0].name.clone(),
                        })?;
                        b.compose(g, f, gf);
                    }
                }
            }
        }
        b.build_with_limit(usize::MAX)
    }
}
