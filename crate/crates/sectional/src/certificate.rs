//! Named, serializable certificates and their independent replay.

use fincat_core::{FinCat, Mor};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sieves::{generate_sieve, PrincipalSieves};
use thiserror::Error;
use topology::Topology;

use crate::search::{designated_route_applies, next_combination};
use crate::{candidates, Certificate, ExtNat, MorphismRelation, Obstruction, Route, SecOutcome, SectionalError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecReport {
    pub morphism: String,
    pub mono: bool,
    pub topology: String,
    pub value: ExtNat,
    pub route: Route,
    pub certificate: CertificateView,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateView {
    Cover {
        sieve: Vec<String>,
        family: Vec<WitnessView>,
    },
    Exhausted {
        candidates: Vec<String>,
        obstruction: ObstructionView,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessView {
    pub member: String,
    pub section: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ObstructionView {
    NoCandidates,
    Uncovered { point: usize },
    Sieves { blocked: Vec<BlockedSieve> },
    Exhausted { tried: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockedSieve {
    pub sieve: Vec<String>,
    pub missing: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate rejected: {0}")]
    Rejected(String),
    #[error(transparent)]
    Sectional(#[from] SectionalError),
}

impl From<fincat_core::CategoryError> for CertificateError {
    fn from(e: fincat_core::CategoryError) -> Self {
        CertificateError::Sectional(e.into())
    }
}

impl From<sieves::SieveError> for CertificateError {
    fn from(e: sieves::SieveError) -> Self {
        CertificateError::Sectional(e.into())
    }
}

fn names(cat: &FinCat, ms: impl IntoIterator<Item = Mor>) -> Vec<String> {
    ms.into_iter().map(|m| cat.name(m).to_string()).collect()
}

pub fn report(cat: &FinCat, top: &Topology, f: Mor, mono: bool, outcome: &SecOutcome) -> SecReport {
    let certificate = match &outcome.certificate {
        Certificate::Cover { sieve, family } => CertificateView::Cover {
            sieve: sieve.member_names(cat),
            family: family
                .iter()
                .map(|w| WitnessView {
                    member: cat.name(w.member).to_string(),
                    section: cat.name(w.section).to_string(),
                })
                .collect(),
        },
        Certificate::Exhausted {
            candidates,
            obstruction,
        } => CertificateView::Exhausted {
            candidates: names(cat, candidates.iter().copied()),
            obstruction: match obstruction {
                Obstruction::NoCandidates => ObstructionView::NoCandidates,
                Obstruction::Uncovered { point } => ObstructionView::Uncovered { point: *point },
                Obstruction::Sieves(list) => ObstructionView::Sieves {
                    blocked: list
                        .iter()
                        .map(|(s, m)| BlockedSieve {
                            sieve: s.member_names(cat),
                            missing: cat.name(*m).to_string(),
                        })
                        .collect(),
                },
                Obstruction::Exhausted { tried } => ObstructionView::Exhausted {
                    tried: names(cat, tried.iter().copied()),
                },
            },
        },
    };
    SecReport {
        morphism: cat.name(f).to_string(),
        mono,
        topology: top.label().to_string(),
        value: outcome.value,
        route: outcome.route,
        certificate,
    }
}

fn reject<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError::Rejected(msg.into()))
}

fn lookup(cat: &FinCat, names: &[String]) -> Result<Vec<Mor>, CertificateError> {
    names
        .iter()
        .map(|n| cat.find_morphism(n).map_err(CertificateError::from))
        .collect()
}

fn bits(cat: &FinCat, ms: &[Mor]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(cat.num_morphisms());
    for m in ms {
        b.insert(m.0);
    }
    b
}

/// Replays a report against the category, topology and relation it claims
/// to describe. Finite reports are checked member by member; infinite ones
/// have their obstruction re-derived from scratch.
pub fn verify(
    cat: &FinCat,
    top: &Topology,
    rel: &dyn MorphismRelation,
    report: &SecReport,
    limit: usize,
) -> Result<(), CertificateError> {
    let f = cat.find_morphism(&report.morphism)?;
    let y = cat.cod(f);
    match &report.certificate {
        CertificateView::Cover { sieve, family } => {
            if report.value != ExtNat::Finite(family.len()) || family.is_empty() {
                return reject("value does not match the family size");
            }
            let mut members = Vec::new();
            for w in family {
                let g = cat.find_morphism(&w.member)?;
                let s = cat.find_morphism(&w.section)?;
                if cat.cod(g) != y {
                    return reject(format!("`{}` does not land in the codomain", w.member));
                }
                if cat.dom(s) != cat.dom(g) || cat.cod(s) != cat.dom(f) {
                    return reject(format!("`{}` has the wrong shape for a section", w.section));
                }
                if !rel.related(cat.comp(f, s), g) {
                    return reject(format!("`{}` is not a section over `{}`", w.section, w.member));
                }
                if report.mono && !cat.is_monomorphism(g) {
                    return reject(format!("`{}` is not a monomorphism", w.member));
                }
                members.push(g);
            }
            let generated = generate_sieve(cat, y, &members)?;
            if generated.member_set() != &bits(cat, &lookup(cat, sieve)?) {
                return reject("listed sieve is not the one the family generates");
            }
            if !top.is_covering_sieve(cat, &generated) {
                return reject("family does not cover");
            }
            Ok(())
        }
        CertificateView::Exhausted {
            candidates: listed,
            obstruction,
        } => {
            if report.value != ExtNat::Infinite {
                return reject("exhaustion certificate with a finite value");
            }
            let cands: Vec<Mor> = candidates(cat, rel, f, report.mono).iter().map(|w| w.member).collect();
            if lookup(cat, listed)? != cands {
                return reject("candidate list differs from a fresh enumeration");
            }
            let cand_bits = bits(cat, &cands);
            let principal = PrincipalSieves::new(cat);
            match obstruction {
                ObstructionView::NoCandidates => {
                    if !cands.is_empty() {
                        return reject("candidates exist");
                    }
                }
                ObstructionView::Uncovered { point } => {
                    let Topology::Rule(rule) = top else {
                        return reject("point obstruction needs a subobject rule");
                    };
                    if *point >= rule.points(y) {
                        return reject("point out of range");
                    }
                    if !designated_route_applies(rule, y, &cand_bits, &principal) {
                        return reject("designated candidates do not decide covering here");
                    }
                    if rule
                        .designated(y)
                        .iter()
                        .any(|d| cand_bits.contains(d.inclusion.0) && d.points.contains(*point))
                    {
                        return reject(format!("point {point} is reached by a designated candidate"));
                    }
                }
                ObstructionView::Sieves { blocked } => {
                    let covering: Vec<_> = top
                        .covering_sieves(cat, y, limit)
                        .map_err(SectionalError::lift_topology)?
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .collect();
                    if covering.len() != blocked.len() {
                        return reject("blocked list does not match the covering sieves");
                    }
                    for (s, b) in covering.iter().zip(blocked) {
                        if s.member_set() != &bits(cat, &lookup(cat, &b.sieve)?) {
                            return reject("blocked list does not match the covering sieves");
                        }
                        let missing = cat.find_morphism(&b.missing)?;
                        let mut generated = FixedBitSet::with_capacity(cat.num_morphisms());
                        for c in s.members().filter(|m| cand_bits.contains(m.0)) {
                            generated.union_with(principal.of(c));
                        }
                        if !s.contains(missing) || generated.contains(missing.0) {
                            return reject(format!("`{}` does not block its sieve", b.missing));
                        }
                    }
                }
                ObstructionView::Exhausted { tried } => {
                    let tried = lookup(cat, tried)?;
                    if tried.iter().any(|t| !cand_bits.contains(t.0)) {
                        return reject("tried a non-candidate");
                    }
                    if tried != cands {
                        let dominated = cands.iter().all(|&c| tried.iter().any(|&t| principal.factors(c, t)));
                        let upward = top
                            .is_upward_closed(cat, limit)
                            .map_err(SectionalError::lift_topology)?;
                        if !dominated || !upward {
                            return reject("restricted candidates do not justify exhaustion");
                        }
                    }
                    let mut count = 0usize;
                    for k in 1..=tried.len() {
                        let mut idx: Vec<usize> = (0..k).collect();
                        loop {
                            count += 1;
                            if count > limit {
                                return Err(SectionalError::UniverseTooLarge {
                                    what: "families to replay".into(),
                                    limit,
                                }
                                .into());
                            }
                            let fam: Vec<Mor> = idx.iter().map(|&i| tried[i]).collect();
                            if top.is_covering_sieve(cat, &principal.generate(cat, y, &fam)) {
                                return reject("a family of tried candidates covers");
                            }
                            if !next_combination(&mut idx, tried.len()) {
                                break;
                            }
                        }
                    }
                }
            }
            Ok(())
        }
    }
}
