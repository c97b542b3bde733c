//! Homomorphism search, sections of homomorphisms and the group equation.

use std::ops::ControlFlow;

use fincat_core::{FinCat, Mor};
use sectional::{r_sec, ExplicitRelation, ExtNat};
use serde::{Deserialize, Serialize};
use topology::Topology;

use crate::subgroup::{exact_cover, subgroups, SubgroupFilter};
use crate::{AlgebraError, FinGroup, GroupHom};

/// Restricts a search `K → H` to maps `s` with `h ∘ s = embedding`, where
/// `h: H → G` and `embedding: K → G` is given as an element table.
#[derive(Debug, Clone, Copy)]
pub struct SectionConstraint<'a> {
    pub hom: &'a GroupHom,
    pub embedding: &'a [usize],
}

/// Extends generator images to the subgroup they generate, checking every
/// edge `x → x·g` of the Cayley graph. `None` on a clash.
fn extend(k: &FinGroup, h: &FinGroup, images: &[(usize, usize)]) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; k.order()];
    map[k.identity()] = Some(h.identity());
    let mut queue = vec![k.identity()];
    while let Some(x) = queue.pop() {
        let fx = map[x].expect("queued elements are assigned");
        for &(g, y) in images {
            let z = k.mul(x, g);
            let want = h.mul(fx, y);
            match map[z] {
                Some(v) if v != want => return None,
                Some(_) => {}
                None => {
                    map[z] = Some(want);
                    queue.push(z);
                }
            }
        }
    }
    Some(map)
}

pub(crate) fn search(
    k: &FinGroup,
    h: &FinGroup,
    constraint: Option<SectionConstraint<'_>>,
    visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let gens = k.generators();
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = k.element_order(g);
            h.elements()
                .filter(|&y| ord.is_multiple_of(h.element_order(y)))
                .filter(|&y| constraint.is_none_or(|c| c.hom.apply(y) == c.embedding[g]))
                .collect()
        })
        .collect();
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(gens.len());
    fn rec(
        k: &FinGroup,
        h: &FinGroup,
        gens: &[usize],
        options: &[Vec<usize>],
        chosen: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some(partial) = extend(k, h, chosen) else {
            return ControlFlow::Continue(());
        };
        let i = chosen.len();
        if i == gens.len() {
            return visit(partial.into_iter().map(|v| v.expect("generators span")).collect());
        }
        for &y in &options[i] {
            chosen.push((gens[i], y));
            let flow = rec(k, h, gens, options, chosen, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    rec(k, h, &gens, &options, &mut chosen, visit)
}

/// All homomorphisms `K → H`, optionally only the sections over an
/// embedding. Ordered lexicographically by generator images.
pub fn hom_search(
    k: &FinGroup,
    h: &FinGroup,
    constraint: Option<SectionConstraint<'_>>,
) -> Result<Vec<GroupHom>, AlgebraError> {
    for g in [k, h] {
        if g.order() > crate::DEFAULT_MAX_ORDER {
            return Err(AlgebraError::OrderTooLarge {
                order: g.order(),
                limit: crate::DEFAULT_MAX_ORDER,
            });
        }
    }
    let mut out = Vec::new();
    let _ = search(k, h, constraint, &mut |map| {
        out.push(map);
        ControlFlow::Continue(())
    });
    Ok(out
        .into_iter()
        .map(|map| GroupHom::new(k.clone(), h.clone(), map).expect("search only yields homomorphisms"))
        .collect())
}

/// The first section of `hom` over the subgroup `elements` of its target,
/// as a table indexed like `elements`.
pub fn find_section(hom: &GroupHom, elements: &[usize]) -> Result<Option<Vec<usize>>, AlgebraError> {
    let k = hom.target().restrict_to(elements)?;
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    let mut found = None;
    let _ = search(
        &k,
        hom.source(),
        Some(SectionConstraint {
            hom,
            embedding: &sorted,
        }),
        &mut |map| {
            found = Some(map);
            ControlFlow::Break(())
        },
    );
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionedSubgroup {
    pub elements: Vec<usize>,
    /// Image of each listed element in the source group.
    pub section: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSecOutcome {
    pub value: ExtNat,
    pub cover: Vec<SectionedSubgroup>,
    /// An element of the target lying in no sectioned subgroup.
    pub uncovered: Option<usize>,
}

/// Least number of subgroups of the target (of the given kind) that cover
/// it and each carry a section of `hom`.
pub fn sec_group_hom(hom: &GroupHom, filter: SubgroupFilter) -> Result<GroupSecOutcome, AlgebraError> {
    let mut sectioned = Vec::new();
    for s in subgroups(hom.target(), filter)? {
        if let Some(section) = find_section(hom, s.elements())? {
            sectioned.push(SectionedSubgroup {
                elements: s.elements().to_vec(),
                section,
            });
        }
    }
    let sets: Vec<Vec<usize>> = sectioned.iter().map(|s| s.elements.clone()).collect();
    let cert = exact_cover(hom.target().order(), &sets);
    let cover = cert
        .cover
        .iter()
        .map(|c| {
            sectioned
                .iter()
                .find(|s| &s.elements == c)
                .cloned()
                .expect("cover uses listed subgroups")
        })
        .collect();
    Ok(GroupSecOutcome {
        value: cert.value,
        cover,
        uncovered: cert.uncovered,
    })
}

/// The group as a one-object category with element `i` named `g{i}`.
pub fn group_category(g: &FinGroup) -> FinCat {
    let names: Vec<String> = g.elements().map(|i| format!("g{i}")).collect();
    FinCat::one_object(&names, &g.table(), g.identity()).expect("a group is a one-object category")
}

/// `a ~ b` iff `a b a⁻¹ b⁻¹ a b = 1`.
pub fn commutator_relation(g: &FinGroup) -> ExplicitRelation {
    let word = |a: usize, b: usize| {
        [a, b, g.inv(a), g.inv(b), a, b]
            .into_iter()
            .fold(g.identity(), |acc, x| g.mul(acc, x))
    };
    ExplicitRelation::new(
        g.elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .filter(|&(a, b)| word(a, b) == g.identity())
            .map(|(a, b)| (Mor(a), Mor(b))),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationOutcome {
    pub value: ExtNat,
    /// `(x, h)`: the section `x` and the covering element `h`.
    pub witness: Option<(usize, usize)>,
}

/// Sectional number of `g` in the one-object category of `G` for the
/// commutator relation.
pub fn group_equation_sec(group: &FinGroup, g: usize) -> Result<EquationOutcome, AlgebraError> {
    let cat = group_category(group);
    let rel = commutator_relation(group);
    let out = r_sec(&cat, &Topology::Trivial, &rel, Mor(g))?;
    let witness = match &out.certificate {
        sectional::Certificate::Cover { family, .. } => family.first().map(|w| (w.section.0, w.member.0)),
        sectional::Certificate::Exhausted { .. } => None,
    };
    Ok(EquationOutcome {
        value: out.value,
        witness,
    })
}
