//! Explicit finite categories for graph homomorphisms, set functions and
//! the open sets of a finite space, so the generic engine can recompute
//! the instance numbers and check the covering axioms.

use fincat_core::{ConcreteBuilder, FinCat, Mor, Obj};
use topology::SubobjectRule;

use crate::{graph_homs, CombinatorialError, FinGraph, FinSetFun, GraphHom};

/// Morphism cap for the sites below.
pub const SITE_MAX_MORPHISMS: usize = 1 << 14;

/// Largest graph whose subgraphs are enumerated.
pub const MAX_SITE_VERTICES: usize = 5;

/// A subgraph of a fixed graph, in that graph's vertex labels. Its points
/// are its vertices followed by its edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Subgraph {
    pub fn points(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    fn local(&self) -> FinGraph {
        let pos = |v| {
            self.vertices
                .iter()
                .position(|&w| w == v)
                .expect("edge inside the subgraph")
        };
        FinGraph::new(self.vertices.len(), self.edges.iter().map(|&(u, v)| (pos(u), pos(v)))).expect("subgraph")
    }

    fn contains(&self, other: &Subgraph) -> bool {
        other.vertices.iter().all(|v| self.vertices.contains(v)) && other.edges.iter().all(|e| self.edges.contains(e))
    }

    /// Point map of the inclusion `other ⊆ self`.
    fn inclusion(&self, other: &Subgraph) -> Vec<usize> {
        let n = self.vertices.len();
        other
            .vertices
            .iter()
            .map(|v| self.vertices.iter().position(|w| w == v).unwrap())
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| n + self.edges.iter().position(|f| f == e).unwrap()),
            )
            .collect()
    }

    fn label(&self) -> String {
        let vs: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        let es: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}{v}")).collect();
        format!("V{{{}}}E{{{}}}", vs.join(","), es.join(","))
    }
}

/// Nonempty subgraphs, ordered by vertex set and then edge set.
pub fn subgraphs(g: &FinGraph) -> Result<Vec<Subgraph>, CombinatorialError> {
    if g.vertices() > MAX_SITE_VERTICES {
        return Err(CombinatorialError::SizeTooLarge(format!(
            "{} vertices exceeds {MAX_SITE_VERTICES} for subgraph enumeration",
            g.vertices()
        )));
    }
    let mut out = Vec::new();
    for vmask in 1u32..1 << g.vertices() {
        let vertices: Vec<usize> = (0..g.vertices()).filter(|&v| vmask >> v & 1 == 1).collect();
        let inside: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| vmask >> u & 1 == 1 && vmask >> v & 1 == 1)
            .collect();
        for emask in 0u32..1 << inside.len() {
            out.push(Subgraph {
                vertices: vertices.clone(),
                edges: (0..inside.len())
                    .filter(|&e| emask >> e & 1 == 1)
                    .map(|e| inside[e])
                    .collect(),
            });
        }
    }
    Ok(out)
}

/// Point map of a vertex map `s → t` between graphs.
fn point_map(s: &FinGraph, t: &FinGraph, vertex_map: &[usize]) -> Vec<usize> {
    let n = t.vertices();
    vertex_map
        .iter()
        .copied()
        .chain(
            s.edges()
                .iter()
                .map(|&(u, v)| n + t.edge_index(vertex_map[u], vertex_map[v]).expect("edges go to edges")),
        )
        .collect()
}

fn map_label(map: &[usize]) -> String {
    let inner: Vec<String> = map.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}

/// A graph homomorphism `f: G → H` inside a category whose objects are `G`
/// and the subgraphs of `H`. Into `G` and into `H` every homomorphism is
/// present; into a proper subgraph only inclusions.
#[derive(Debug, Clone)]
pub struct GraphSite {
    pub cat: FinCat,
    /// Every inclusion of a subgraph is designated; `G` keeps its identity.
    pub rule: SubobjectRule,
    pub hom: Mor,
    pub source: Obj,
    pub target: Obj,
    /// `None` for `G`.
    pub subgraphs: Vec<Option<Subgraph>>,
}

pub fn graph_hom_site(f: &GraphHom) -> Result<GraphSite, CombinatorialError> {
    let (g, h) = (f.source(), f.target());
    let subs = subgraphs(h)?;
    let mut b = ConcreteBuilder::new();
    let g_points = g.vertices() + g.edges().len();
    let g_obj = b.object("G", g_points);
    let names: Vec<String> = subs
        .iter()
        .map(|s| {
            if s.points() == h.vertices() + h.edges().len() {
                "H".to_string()
            } else {
                s.label()
            }
        })
        .collect();
    let objs: Vec<Obj> = subs
        .iter()
        .zip(&names)
        .map(|(s, name)| b.object(name.clone(), s.points()))
        .collect();
    let h_obj = *objs.last().expect("the whole graph is a subgraph");
    let domains: Vec<(Obj, &str, FinGraph)> = std::iter::once((g_obj, "G", g.clone()))
        .chain(
            objs.iter()
                .zip(&names)
                .zip(&subs)
                .map(|((&o, n), s)| (o, n.as_str(), s.local())),
        )
        .collect();
    for (o, name, local) in &domains {
        for m in graph_homs(local, h) {
            let pm = point_map(local, h, &m);
            b.morphism(format!("{name}->H:{}", map_label(&m)), *o, h_obj, pm);
        }
        for m in graph_homs(local, g) {
            let pm = point_map(local, g, &m);
            b.morphism(format!("{name}->G:{}", map_label(&m)), *o, g_obj, pm);
        }
    }
    let all_g: Vec<usize> = (0..g_points).collect();
    let mut designated = vec![(b.find(g_obj, g_obj, &all_g).expect("identity"), all_g)];
    for (i, outer) in subs.iter().enumerate() {
        for (j, inner) in subs.iter().enumerate() {
            if outer.contains(inner) {
                let incl = outer.inclusion(inner);
                let m = b.morphism(
                    format!("{}<{}", inner.label(), outer.label()),
                    objs[j],
                    objs[i],
                    incl.clone(),
                );
                designated.push((m, incl));
            }
        }
    }
    let hom = b
        .find(g_obj, h_obj, &point_map(g, h, f.map()))
        .expect("the homomorphism is in the site");
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let points = std::iter::once(g_points)
        .chain(subs.iter().map(Subgraph::points))
        .collect();
    let rule = SubobjectRule::new(&cat, "subgraphs", points, designated)?;
    Ok(GraphSite {
        cat,
        rule,
        hom,
        source: g_obj,
        target: h_obj,
        subgraphs: std::iter::once(None).chain(subs.into_iter().map(Some)).collect(),
    })
}

/// A function between finite sets is a homomorphism of edgeless graphs;
/// subgraphs are then subsets.
pub fn set_fun_site(f: &FinSetFun) -> Result<GraphSite, CombinatorialError> {
    let hom = GraphHom::new(
        FinGraph::empty(f.source()),
        FinGraph::empty(f.target()),
        f.values().to_vec(),
    )?;
    graph_hom_site(&hom)
}

/// All subgraphs of one graph with every homomorphism between them, and the
/// rule designating inclusions.
#[derive(Debug, Clone)]
pub struct SubgraphSite {
    pub cat: FinCat,
    pub rule: SubobjectRule,
    pub objects: Vec<(Subgraph, Obj)>,
}

pub fn subgraph_site(g: &FinGraph) -> Result<SubgraphSite, CombinatorialError> {
    let subs = subgraphs(g)?;
    let mut b = ConcreteBuilder::new();
    let objs: Vec<Obj> = subs.iter().map(|s| b.object(s.label(), s.points())).collect();
    let locals: Vec<FinGraph> = subs.iter().map(Subgraph::local).collect();
    for (i, s) in locals.iter().enumerate() {
        for (j, t) in locals.iter().enumerate() {
            for m in graph_homs(s, t) {
                b.morphism(
                    format!("{}->{}:{}", subs[i].label(), subs[j].label(), map_label(&m)),
                    objs[i],
                    objs[j],
                    point_map(s, t, &m),
                );
            }
        }
    }
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let mut designated = Vec::new();
    for (i, outer) in subs.iter().enumerate() {
        for (j, inner) in subs.iter().enumerate() {
            if outer.contains(inner) {
                let incl = outer.inclusion(inner);
                let m = b.find(objs[j], objs[i], &incl).expect("inclusions are homomorphisms");
                designated.push((m, incl));
            }
        }
    }
    let points = subs.iter().map(Subgraph::points).collect();
    let rule = SubobjectRule::new(&cat, "subgraphs", points, designated)?;
    Ok(SubgraphSite {
        cat,
        rule,
        objects: subs.into_iter().zip(objs).collect(),
    })
}

/// A topology on `0..n` as bitmasks of its open sets, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<u32>,
}

impl FiniteSpace {
    pub fn new(points: usize, opens: impl IntoIterator<Item = u32>) -> Result<Self, CombinatorialError> {
        if points > 5 {
            return Err(CombinatorialError::SizeTooLarge(format!("{points} points exceeds 5")));
        }
        let full = (1u32 << points) - 1;
        let mut opens: Vec<u32> = opens.into_iter().collect();
        opens.sort_unstable();
        opens.dedup();
        if opens.iter().any(|&u| u & !full != 0) {
            return Err(CombinatorialError::Invalid("open set outside the space".into()));
        }
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(CombinatorialError::Invalid(
                "the empty set and the whole space must be open".into(),
            ));
        }
        for &u in &opens {
            for &v in &opens {
                if opens.binary_search(&(u | v)).is_err() || opens.binary_search(&(u & v)).is_err() {
                    return Err(CombinatorialError::Invalid(format!(
                        "opens {u:#b} and {v:#b} are not closed under union and intersection"
                    )));
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }
}

/// Every topology on `0..n`, by filtering all families of subsets.
pub fn all_topologies(n: usize) -> Result<Vec<FiniteSpace>, CombinatorialError> {
    if n > 3 {
        return Err(CombinatorialError::SizeTooLarge(format!(
            "{n} points exceeds 3 for enumeration"
        )));
    }
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let out = (0u64..1 << middle.len())
        .filter_map(|fam| {
            let opens = std::iter::once(0)
                .chain(std::iter::once(full))
                .chain((0..middle.len()).filter(|&i| fam >> i & 1 == 1).map(|i| middle[i]));
            FiniteSpace::new(n, opens).ok()
        })
        .collect();
    Ok(out)
}

/// The open sets of a finite space ordered by inclusion, each carrying its
/// points; every inclusion is designated.
#[derive(Debug, Clone)]
pub struct OpenSetSite {
    pub cat: FinCat,
    pub rule: SubobjectRule,
    pub objects: Vec<(u32, Obj)>,
}

pub fn open_set_site(space: &FiniteSpace) -> Result<OpenSetSite, CombinatorialError> {
    let elems = |u: u32| -> Vec<usize> { (0..space.points).filter(|&x| u >> x & 1 == 1).collect() };
    let mut b = ConcreteBuilder::new();
    let objs: Vec<Obj> = space
        .opens
        .iter()
        .map(|&u| b.object(format!("{:?}", elems(u)), elems(u).len()))
        .collect();
    let mut designated = Vec::new();
    for (i, &outer) in space.opens.iter().enumerate() {
        for (j, &inner) in space.opens.iter().enumerate() {
            if inner & !outer == 0 {
                let big = elems(outer);
                let incl: Vec<usize> = elems(inner)
                    .iter()
                    .map(|x| big.iter().position(|y| y == x).unwrap())
                    .collect();
                let m = b.morphism(format!("{j}<{i}"), objs[j], objs[i], incl.clone());
                designated.push((m, incl));
            }
        }
    }
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let points = space.opens.iter().map(|&u| u.count_ones() as usize).collect();
    let rule = SubobjectRule::new(&cat, "open covers", points, designated)?;
    Ok(OpenSetSite {
        cat,
        rule,
        objects: space.opens.iter().copied().zip(objs).collect(),
    })
}

/// Every subset of `0..n` with every function between them; the rule
/// designates subset inclusions. Object `i` is the subset with bitmask `i`.
#[derive(Debug, Clone)]
pub struct FiniteSetsSite {
    pub cat: FinCat,
    pub rule: SubobjectRule,
    pub subsets: Vec<u32>,
}

pub fn finite_sets_site(n: usize) -> Result<FiniteSetsSite, CombinatorialError> {
    if n > 3 {
        return Err(CombinatorialError::SizeTooLarge(format!(
            "{n} points exceeds 3 for the full site"
        )));
    }
    let masks: Vec<u32> = (0..1u32 << n).collect();
    let elems = |u: u32| -> Vec<usize> { (0..n).filter(|&x| u >> x & 1 == 1).collect() };
    let mut b = ConcreteBuilder::new();
    let objs: Vec<Obj> = masks
        .iter()
        .map(|&u| b.object(format!("{:?}", elems(u)), elems(u).len()))
        .collect();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &c) in masks.iter().enumerate() {
            let (da, dc) = (a.count_ones(), c.count_ones() as usize);
            for code in 0..dc.pow(da) {
                let map: Vec<usize> = (0..da).map(|k| code / dc.pow(k) % dc).collect();
                b.morphism(format!("{i}->{j}:{}", map_label(&map)), objs[i], objs[j], map);
            }
        }
    }
    let mut designated = Vec::new();
    for (i, &outer) in masks.iter().enumerate() {
        for (j, &inner) in masks.iter().enumerate() {
            if inner & !outer == 0 {
                let big = elems(outer);
                let incl: Vec<usize> = elems(inner)
                    .iter()
                    .map(|x| big.iter().position(|y| y == x).unwrap())
                    .collect();
                designated.push((b.find(objs[j], objs[i], &incl).expect("inclusions are functions"), incl));
            }
        }
    }
    let cat = b.build(SITE_MAX_MORPHISMS)?;
    let points = masks.iter().map(|u| u.count_ones() as usize).collect();
    let rule = SubobjectRule::new(&cat, "subsets", points, designated)?;
    Ok(FiniteSetsSite {
        cat,
        rule,
        subsets: masks,
    })
}
