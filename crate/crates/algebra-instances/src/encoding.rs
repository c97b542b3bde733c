//! Explicit finite categories for groups and rings, built by brute force
//! and independent of the generator-based searches. They let the generic
//! engine recompute the instance numbers.

use fincat_core::{ConcreteBuilder, FinCat, Mor, Obj};
use topology::SubobjectRule;

use crate::{AlgebraError, FinGroup, FinRing, GroupHom, RingHom, SubgroupFilter};

/// Largest carrier the brute-force enumerations accept.
pub const MAX_BRUTE_FORCE_ORDER: usize = 16;

/// Morphism cap for the sites below.
pub const SITE_MAX_MORPHISMS: usize = 1 << 14;

/// A set with binary operations given as tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    order: usize,
    ops: Vec<Vec<usize>>,
}

impl Structure {
    pub fn of_group(g: &FinGroup) -> Self {
        Structure {
            order: g.order(),
            ops: vec![g.table().concat()],
        }
    }

    pub fn of_ring(r: &FinRing) -> Self {
        Structure {
            order: r.order(),
            ops: vec![r.add_table().concat(), r.mul_table().concat()],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn op(&self, k: usize, a: usize, b: usize) -> usize {
        self.ops[k][a * self.order + b]
    }

    fn closed(&self, mask: u32) -> bool {
        let inside = |x: usize| mask >> x & 1 == 1;
        (0..self.order).filter(|&a| inside(a)).all(|a| {
            (0..self.order)
                .filter(|&b| inside(b))
                .all(|b| (0..self.ops.len()).all(|k| inside(self.op(k, a, b))))
        })
    }

    /// Nonempty subsets closed under every operation, ordered by size and
    /// then by element list. For finite groups and rings these are exactly
    /// the subgroups and subrings.
    pub fn substructures(&self) -> Result<Vec<Vec<usize>>, AlgebraError> {
        self.guard()?;
        let mut out: Vec<Vec<usize>> = (1u32..1 << self.order)
            .filter(|&m| self.closed(m))
            .map(|m| (0..self.order).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        out.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(out)
    }

    /// The induced structure on a closed subset, elements renumbered by
    /// position in `elements`.
    pub fn restrict(&self, elements: &[usize]) -> Structure {
        let pos = |x: usize| elements.iter().position(|&e| e == x).expect("subset is closed");
        let n = elements.len();
        let ops = (0..self.ops.len())
            .map(|k| {
                (0..n * n)
                    .map(|i| pos(self.op(k, elements[i / n], elements[i % n])))
                    .collect()
            })
            .collect();
        Structure { order: n, ops }
    }

    /// Every operation-preserving map into `other`, by assigning images
    /// element by element and checking each product as soon as its three
    /// entries are known.
    pub fn homs_to(&self, other: &Structure) -> Result<Vec<Vec<usize>>, AlgebraError> {
        self.guard()?;
        other.guard()?;
        assert_eq!(self.ops.len(), other.ops.len(), "structures of different signatures");
        let mut out = Vec::new();
        let mut map = Vec::with_capacity(self.order);
        self.extend_homs(other, &mut map, &mut out);
        Ok(out)
    }

    fn extend_homs(&self, other: &Structure, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = map.len();
        if x == self.order {
            out.push(map.clone());
            return;
        }
        for y in 0..other.order {
            map.push(y);
            let ok = (0..=x).all(|a| {
                (0..=x).all(|b| {
                    (0..self.ops.len()).all(|k| {
                        let ab = self.op(k, a, b);
                        (a != x && b != x && ab != x) || ab > x || map[ab] == other.op(k, map[a], map[b])
                    })
                })
            });
            if ok {
                self.extend_homs(other, map, out);
            }
            map.pop();
        }
    }

    fn guard(&self) -> Result<(), AlgebraError> {
        if self.order > MAX_BRUTE_FORCE_ORDER {
            return Err(AlgebraError::OrderTooLarge {
                order: self.order,
                limit: MAX_BRUTE_FORCE_ORDER,
            });
        }
        Ok(())
    }
}

fn label(elements: &[usize]) -> String {
    let inner: Vec<String> = elements.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn map_label(map: &[usize]) -> String {
    let inner: Vec<String> = map.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}

/// A homomorphism `h: H → G` inside a category whose objects are `H` and
/// the substructures of `G`. Into `G` and into `H` every homomorphism is
/// present; into a proper substructure only inclusions.
#[derive(Debug, Clone)]
pub struct HomSite {
    pub cat: FinCat,
    /// Every inclusion of a substructure is designated.
    pub rule: SubobjectRule,
    pub hom: Mor,
    pub source: Obj,
    pub target: Obj,
    /// Elements of `G` carried by each object; `None` for `H`.
    pub carriers: Vec<Option<Vec<usize>>>,
}

impl HomSite {
    /// The rule keeping the inclusions `inner ⊆ outer` accepted by `keep`;
    /// `H` keeps its identity.
    pub fn restricted(&self, label: &str, keep: impl Fn(&[usize], &[usize]) -> bool) -> SubobjectRule {
        self.rule.restrict(label, |o, d| match &self.carriers[o.0] {
            None => true,
            Some(outer) => {
                let inner = self.carriers[self.cat.dom(d.inclusion).0]
                    .as_ref()
                    .expect("inclusions between subobjects");
                keep(outer, inner)
            }
        })
    }
}

/// Builds the site for `map: source → target`. `H` is covered by its
/// identity alone.
pub fn hom_site(source: &Structure, target: &Structure, map: &[usize]) -> Result<HomSite, AlgebraError> {
    let subs = target.substructures()?;
    let mut b = ConcreteBuilder::new();
    let mut domains: Vec<(Obj, String, Structure)> = vec![(b.object("H", source.order()), "H".into(), source.clone())];
    for s in &subs {
        let name = if s.len() == target.order() {
            "G".to_string()
        } else {
            label(s)
        };
        domains.push((b.object(name.clone(), s.len()), name, target.restrict(s)));
    }
    let h_obj = domains[0].0;
    let g_obj = domains[domains.len() - 1].0;
    for (o, name, st) in &domains {
        for m in st.homs_to(target)? {
            b.morphism(format!("{name}->G:{}", map_label(&m)), *o, g_obj, m);
        }
        for m in st.homs_to(source)? {
            b.morphism(format!("{name}->H:{}", map_label(&m)), *o, h_obj, m);
        }
    }
    let all_h: Vec<usize> = (0..source.order()).collect();
    let mut designated = vec![(b.find(h_obj, h_obj, &all_h).expect("identity"), all_h)];
    for (i, outer) in subs.iter().enumerate() {
        for (j, inner) in subs.iter().enumerate() {
            if inner.iter().all(|x| outer.contains(x)) {
                let incl: Vec<usize> = inner
                    .iter()
                    .map(|x| outer.iter().position(|y| y == x).unwrap())
                    .collect();
                let name = format!("{}<{}", domains[j + 1].1, domains[i + 1].1);
                let m = b.morphism(name, domains[j + 1].0, domains[i + 1].0, incl.clone());
                designated.push((m, incl));
            }
        }
    }
    let hom = b
        .find(h_obj, g_obj, map)
        .ok_or_else(|| AlgebraError::NotAHom("map is not a homomorphism".into()))?;
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let points = domains.iter().map(|(_, _, st)| st.order()).collect();
    let rule = SubobjectRule::new(&cat, "substructures", points, designated)?;
    Ok(HomSite {
        cat,
        rule,
        hom,
        source: h_obj,
        target: g_obj,
        carriers: std::iter::once(None).chain(subs.into_iter().map(Some)).collect(),
    })
}

/// Whether the subgroup on `elements` is generated by one element.
fn cyclic_subset(st: &Structure, elements: &[usize]) -> bool {
    elements.iter().any(|&a| {
        let mut x = a;
        let mut count = 1;
        while x != elements_identity(st, elements) {
            x = st.op(0, x, a);
            count += 1;
        }
        count == elements.len()
    })
}

fn elements_identity(st: &Structure, elements: &[usize]) -> usize {
    *elements
        .iter()
        .find(|&&e| elements.iter().all(|&a| st.op(0, e, a) == a))
        .expect("subgroups contain the identity")
}

/// The site of a group homomorphism with its subgroup rule for `filter`.
pub fn group_hom_site(h: &GroupHom) -> Result<HomSite, AlgebraError> {
    hom_site(
        &Structure::of_group(h.source()),
        &Structure::of_group(h.target()),
        h.map(),
    )
}

pub fn subgroup_rule(site: &HomSite, target: &FinGroup, filter: SubgroupFilter) -> SubobjectRule {
    let st = Structure::of_group(target);
    site.restricted(&format!("{filter:?} subgroups"), |outer, inner| {
        (!filter.proper() || inner.len() < outer.len()) && (!filter.cyclic() || cyclic_subset(&st, inner))
    })
}

pub fn ring_hom_site(h: &RingHom) -> Result<HomSite, AlgebraError> {
    hom_site(
        &Structure::of_ring(h.source()),
        &Structure::of_ring(h.target()),
        h.map(),
    )
}

pub fn subring_rule(site: &HomSite, proper: bool) -> SubobjectRule {
    site.restricted(if proper { "proper subrings" } else { "subrings" }, |outer, inner| {
        !proper || inner.len() < outer.len()
    })
}

/// All substructures of one structure with every homomorphism between
/// them, and the rule designating the inclusions of substructures.
#[derive(Debug, Clone)]
pub struct SubstructureSite {
    pub cat: FinCat,
    pub rule: SubobjectRule,
    pub objects: Vec<(Vec<usize>, Obj)>,
}

pub fn substructure_site(st: &Structure) -> Result<SubstructureSite, AlgebraError> {
    let subs = st.substructures()?;
    let mut b = ConcreteBuilder::new();
    let objs: Vec<Obj> = subs.iter().map(|s| b.object(label(s), s.len())).collect();
    let restricted: Vec<Structure> = subs.iter().map(|s| st.restrict(s)).collect();
    for (i, a) in restricted.iter().enumerate() {
        for (j, c) in restricted.iter().enumerate() {
            for m in a.homs_to(c)? {
                b.morphism(
                    format!("{}->{}:{}", label(&subs[i]), label(&subs[j]), map_label(&m)),
                    objs[i],
                    objs[j],
                    m,
                );
            }
        }
    }
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let mut designated = Vec::new();
    for (i, outer) in subs.iter().enumerate() {
        for (j, inner) in subs.iter().enumerate() {
            if inner.iter().all(|x| outer.contains(x)) {
                let incl: Vec<usize> = inner
                    .iter()
                    .map(|x| outer.iter().position(|y| y == x).unwrap())
                    .collect();
                let m = b.find(objs[j], objs[i], &incl).expect("inclusions are homomorphisms");
                designated.push((m, incl));
            }
        }
    }
    let points = subs.iter().map(Vec::len).collect();
    let rule = SubobjectRule::new(&cat, "substructures", points, designated)?;
    Ok(SubstructureSite {
        cat,
        rule,
        objects: subs.into_iter().zip(objs).collect(),
    })
}
