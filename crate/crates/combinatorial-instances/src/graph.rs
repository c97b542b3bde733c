//! Simple undirected graphs (loops allowed) and sections of graph
//! homomorphisms over subgraphs.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use sectional::cover::{maximal_sets, min_set_cover};
use sectional::ExtNat;
use serde::{Deserialize, Serialize};

use crate::sets::{sec_set_fun, FinSetFun};
use crate::CombinatorialError;

/// Largest codomain accepted by the section searches.
pub const MAX_TARGET_VERTICES: usize = 10;
/// Largest domain accepted by the section searches.
pub const MAX_SOURCE_VERTICES: usize = 20;
/// Largest number of codomain edges the top-down search accepts.
pub const MAX_TOP_DOWN_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinGraph {
    vertices: usize,
    /// Sorted, each pair with `u <= v`.
    edges: Vec<(usize, usize)>,
}

impl FinGraph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, CombinatorialError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(CombinatorialError::Invalid(format!(
                    "edge ({u}, {v}) leaves {vertices} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(FinGraph {
            vertices,
            edges: set.into_iter().collect(),
        })
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph")
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

/// On-disk form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<FinGraph, CombinatorialError> {
        FinGraph::new(self.vertices, self.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<&FinGraph> for GraphFile {
    fn from(g: &FinGraph) -> Self {
        GraphFile {
            vertices: g.vertices,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// A vertex map sending edges to edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHom {
    source: FinGraph,
    target: FinGraph,
    map: Vec<usize>,
}

impl GraphHom {
    pub fn new(source: FinGraph, target: FinGraph, map: Vec<usize>) -> Result<Self, CombinatorialError> {
        if map.len() != source.vertices || map.iter().any(|&v| v >= target.vertices) {
            return Err(CombinatorialError::NotAHom("vertex map has the wrong shape".into()));
        }
        if let Some(&(u, v)) = source.edges.iter().find(|&&(u, v)| !target.has_edge(map[u], map[v])) {
            return Err(CombinatorialError::NotAHom(format!(
                "edge ({u}, {v}) is not sent to an edge"
            )));
        }
        Ok(GraphHom { source, target, map })
    }

    pub fn identity(g: &FinGraph) -> Self {
        GraphHom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.vertices).collect(),
        }
    }

    pub fn source(&self) -> &FinGraph {
        &self.source
    }

    pub fn target(&self) -> &FinGraph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom, CombinatorialError> {
        if self.target != other.source {
            return Err(CombinatorialError::NotAHom("graphs do not compose".into()));
        }
        GraphHom::new(
            self.source.clone(),
            other.target.clone(),
            self.map.iter().map(|&v| other.map[v]).collect(),
        )
    }

    fn preimages(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.target.vertices];
        for (x, &y) in self.map.iter().enumerate() {
            pre[y].push(x);
        }
        pre
    }

    fn guard(&self) -> Result<(), CombinatorialError> {
        if self.target.vertices > MAX_TARGET_VERTICES || self.source.vertices > MAX_SOURCE_VERTICES {
            return Err(CombinatorialError::SizeTooLarge(format!(
                "{} → {} vertices exceeds {} → {}",
                self.source.vertices, self.target.vertices, MAX_SOURCE_VERTICES, MAX_TARGET_VERTICES
            )));
        }
        Ok(())
    }
}

/// Every homomorphism between two graphs, by backtracking over vertices.
pub fn graph_homs(source: &FinGraph, target: &FinGraph) -> Vec<Vec<usize>> {
    fn rec(s: &FinGraph, t: &FinGraph, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = map.len();
        if x == s.vertices {
            out.push(map.clone());
            return;
        }
        for y in 0..t.vertices {
            map.push(y);
            let ok = s
                .edges
                .iter()
                .filter(|&&(u, v)| (u == x || v == x) && u <= x && v <= x)
                .all(|&(u, v)| t.has_edge(map[u], map[v]));
            if ok {
                rec(s, t, map, out);
            }
            map.pop();
        }
    }
    let mut out = Vec::new();
    rec(source, target, &mut Vec::new(), &mut out);
    out
}

/// A subgraph of the codomain with a section over it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// `section[i]` lifts `vertices[i]`.
    pub section: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Uncovered {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSecOutcome {
    pub value: ExtNat,
    pub cover: Vec<SectionedSubgraph>,
    pub uncovered: Option<Uncovered>,
}

fn cover_edges(f: &GraphHom, candidates: Vec<SectionedSubgraph>) -> GraphSecOutcome {
    let h = f.target();
    let sets: Vec<FixedBitSet> = candidates
        .iter()
        .map(|c| {
            let mut b = FixedBitSet::with_capacity(h.edges.len());
            for &(u, v) in &c.edges {
                b.insert(h.edge_index(u, v).expect("edge of the codomain"));
            }
            b
        })
        .collect();
    let maximal = maximal_sets(&sets);
    let reduced: Vec<FixedBitSet> = maximal.iter().map(|&i| sets[i].clone()).collect();
    match min_set_cover(h.edges.len(), &reduced) {
        // no edges: one member still has to cover the vertices
        Some(chosen) if chosen.is_empty() => GraphSecOutcome {
            value: ExtNat::Finite(1),
            cover: vec![candidates[maximal[0]].clone()],
            uncovered: None,
        },
        Some(chosen) => GraphSecOutcome {
            value: ExtNat::Finite(chosen.len()),
            cover: chosen.iter().map(|&i| candidates[maximal[i]].clone()).collect(),
            uncovered: None,
        },
        None => {
            let mut union = FixedBitSet::with_capacity(h.edges.len());
            sets.iter().for_each(|s| union.union_with(s));
            let e = (0..h.edges.len())
                .find(|&e| !union.contains(e))
                .expect("some edge is missed");
            GraphSecOutcome {
                value: ExtNat::Infinite,
                cover: Vec::new(),
                uncovered: Some(Uncovered::Edge(h.edges[e].0, h.edges[e].1)),
            }
        }
    }
}

fn missing_vertex(f: &GraphHom) -> Option<GraphSecOutcome> {
    f.preimages().iter().position(Vec::is_empty).map(|v| GraphSecOutcome {
        value: ExtNat::Infinite,
        cover: Vec::new(),
        uncovered: Some(Uncovered::Vertex(v)),
    })
}

/// Least number of subgraphs covering the codomain's vertices and edges,
/// each carrying a section. Every lift of all vertices determines the
/// largest subgraph it sections; minimum cover over those.
pub fn sec_graph_hom(f: &GraphHom) -> Result<GraphSecOutcome, CombinatorialError> {
    f.guard()?;
    if let Some(out) = missing_vertex(f) {
        return Ok(out);
    }
    let h = f.target();
    let g = f.source();
    let pre = f.preimages();
    let vertices: Vec<usize> = (0..h.vertices).collect();
    let mut seen = HashSet::new();
    let mut candidates = Vec::new();
    let mut lift = vec![0usize; h.vertices];
    let mut choice = vec![0usize; h.vertices];
    loop {
        for v in 0..h.vertices {
            lift[v] = pre[v][choice[v]];
        }
        let edges: Vec<(usize, usize)> = h
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| g.has_edge(lift[u], lift[v]))
            .collect();
        if seen.insert(edges.clone()) {
            candidates.push(SectionedSubgraph {
                vertices: vertices.clone(),
                edges,
                section: lift.clone(),
            });
        }
        // odometer over preimage choices
        let mut i = 0;
        while i < h.vertices && choice[i] + 1 == pre[i].len() {
            choice[i] = 0;
            i += 1;
        }
        if i == h.vertices {
            break;
        }
        choice[i] += 1;
    }
    Ok(cover_edges(f, candidates))
}

/// A section of `f` over the subgraph with all lifted vertices and the
/// given edges of the codomain, by backtracking.
pub fn find_section(f: &GraphHom, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let h = f.target();
    let g = f.source();
    let pre = f.preimages();
    let mut lift: Vec<usize> = Vec::with_capacity(h.vertices);
    fn rec(g: &FinGraph, pre: &[Vec<usize>], edges: &[(usize, usize)], lift: &mut Vec<usize>) -> bool {
        let v = lift.len();
        if v == pre.len() {
            return true;
        }
        for &x in &pre[v] {
            lift.push(x);
            let ok = edges
                .iter()
                .filter(|&&(a, b)| (a == v || b == v) && a <= v && b <= v)
                .all(|&(a, b)| g.has_edge(lift[a], lift[b]));
            if ok && rec(g, pre, edges, lift) {
                return true;
            }
            lift.pop();
        }
        false
    }
    rec(g, &pre, edges, &mut lift).then_some(lift)
}

/// Same number through monomorphisms only: explores subgraphs from the
/// whole codomain downwards by deleting edges, keeping those that have a
/// section and none of whose supergraphs was already kept.
pub fn msec_graph_hom(f: &GraphHom) -> Result<GraphSecOutcome, CombinatorialError> {
    f.guard()?;
    let h = f.target();
    if h.edges.len() > MAX_TOP_DOWN_EDGES {
        return Err(CombinatorialError::SizeTooLarge(format!(
            "{} edges exceeds {MAX_TOP_DOWN_EDGES} for the top-down search",
            h.edges.len()
        )));
    }
    if let Some(out) = missing_vertex(f) {
        return Ok(out);
    }
    let m = h.edges.len();
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut visited: HashSet<u32> = HashSet::new();
    let mut maximal: Vec<(u32, Vec<usize>)> = Vec::new();
    let mut layer = vec![full];
    visited.insert(full);
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mask in layer {
            if maximal.iter().any(|(k, _)| mask & !k == 0) {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..m).filter(|&e| mask >> e & 1 == 1).map(|e| h.edges[e]).collect();
            if let Some(section) = find_section(f, &edges) {
                maximal.push((mask, section));
                continue;
            }
            for e in (0..m).filter(|&e| mask >> e & 1 == 1) {
                let smaller = mask & !(1 << e);
                if visited.insert(smaller) {
                    next.push(smaller);
                }
            }
        }
        layer = next;
    }
    let candidates = maximal
        .into_iter()
        .map(|(mask, section)| SectionedSubgraph {
            vertices: (0..h.vertices).collect(),
            edges: (0..m).filter(|&e| mask >> e & 1 == 1).map(|e| h.edges[e]).collect(),
            section,
        })
        .collect();
    Ok(cover_edges(f, candidates))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexBound {
    pub vertex_sec: ExtNat,
    pub graph_sec: ExtNat,
    pub holds: bool,
}

/// Compares the number of the underlying vertex function with that of the
/// graph homomorphism; forgetting edges can only lower it.
pub fn vertex_functor_bound(f: &GraphHom) -> Result<VertexBound, CombinatorialError> {
    let vertex = FinSetFun::new(f.target.vertices, f.map.clone())?;
    let vertex_sec = sec_set_fun(&vertex).value;
    let graph_sec = sec_graph_hom(f)?.value;
    Ok(VertexBound {
        vertex_sec,
        graph_sec,
        holds: vertex_sec <= graph_sec,
    })
}

/// On-disk form of a graph homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphHomFile {
    pub source: GraphFile,
    pub target: GraphFile,
    pub map: Vec<usize>,
}

impl GraphHomFile {
    pub fn into_hom(self) -> Result<GraphHom, CombinatorialError> {
        GraphHom::new(self.source.into_graph()?, self.target.into_graph()?, self.map)
    }
}
