use std::fmt;

use fincat_core::{FinCat, Mor, Obj};
use serde::Serialize;
use sieves::{all_sieves, pullback_sieve, Sieve};

use crate::{too_many, Topology, TopologyError};

/// Rule topologies with more designated inclusions on one object than this
/// are refused for (T3).
pub const T3_MAX_SUBOBJECTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    T1,
    T2,
    T3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "T1" | "t1" => Ok(Axiom::T1),
            "T2" | "t2" => Ok(Axiom::T2),
            "T3" | "t3" => Ok(Axiom::T3),
            other => Err(format!("unknown axiom `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// The maximal sieve on `object` does not cover.
    T1 { object: Obj },
    /// `sieve` covers but its pullback along `morphism` does not.
    T2 { morphism: Mor, sieve: Sieve },
    /// `candidate` is locally covering along every member of the covering
    /// sieve `covering` but does not cover.
    T3 { covering: Sieve, candidate: Sieve },
}

impl Counterexample {
    pub fn axiom(&self) -> Axiom {
        match self {
            Counterexample::T1 { .. } => Axiom::T1,
            Counterexample::T2 { .. } => Axiom::T2,
            Counterexample::T3 { .. } => Axiom::T3,
        }
    }

    /// Re-evaluates the failure from scratch; `true` when it reproduces.
    pub fn replay(&self, cat: &FinCat, top: &Topology) -> bool {
        match self {
            Counterexample::T1 { object } => !top.is_covering_sieve(cat, &Sieve::full(cat, *object)),
            Counterexample::T2 { morphism, sieve } => {
                top.is_covering_sieve(cat, sieve)
                    && pullback_sieve(cat, *morphism, sieve)
                        .map(|p| !top.is_covering_sieve(cat, &p))
                        .unwrap_or(false)
            }
            Counterexample::T3 { covering, candidate } => {
                covering.target() == candidate.target()
                    && top.is_covering_sieve(cat, covering)
                    && !top.is_covering_sieve(cat, candidate)
                    && locally_covering(cat, top, covering, candidate)
            }
        }
    }

    pub fn describe(&self, cat: &FinCat) -> CounterexampleView {
        let obj = |o: Obj| cat.object_name(o).to_string();
        match self {
            Counterexample::T1 { object } => CounterexampleView {
                axiom: Axiom::T1,
                object: obj(*object),
                morphism: None,
                sieve: None,
                candidate: None,
            },
            Counterexample::T2 { morphism, sieve } => CounterexampleView {
                axiom: Axiom::T2,
                object: obj(sieve.target()),
                morphism: Some(cat.name(*morphism).to_string()),
                sieve: Some(sieve.member_names(cat)),
                candidate: None,
            },
            Counterexample::T3 { covering, candidate } => CounterexampleView {
                axiom: Axiom::T3,
                object: obj(covering.target()),
                morphism: None,
                sieve: Some(covering.member_names(cat)),
                candidate: Some(candidate.member_names(cat)),
            },
        }
    }
}

/// Named form of a counterexample for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleView {
    pub axiom: Axiom,
    pub object: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morphism: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sieve: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub label: String,
    pub outcomes: Vec<AxiomOutcome>,
    pub checked_universe: String,
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> Option<bool> {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .map(|o| o.counterexample.is_none())
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.counterexample.is_none())
    }

    pub fn counterexample(&self, axiom: Axiom) -> Option<&Counterexample> {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .and_then(|o| o.counterexample.as_ref())
    }
}

fn locally_covering(cat: &FinCat, top: &Topology, covering: &Sieve, candidate: &Sieve) -> bool {
    covering.members().all(|f| {
        pullback_sieve(cat, f, candidate)
            .map(|p| top.is_covering_sieve(cat, &p))
            .unwrap_or(false)
    })
}

impl Topology {
    /// Exhaustively checks the requested axioms. Counterexamples are the
    /// least by object index, then by sieve, then by morphism index.
    pub fn check_axioms(&self, cat: &FinCat, levels: &[Axiom], limit: usize) -> Result<AxiomReport, TopologyError> {
        let mut levels = levels.to_vec();
        levels.sort();
        levels.dedup();
        if levels.contains(&Axiom::T3) {
            if let Topology::Rule(r) = self {
                if let Some(o) = cat.object_ids().find(|&o| r.designated(o).len() > T3_MAX_SUBOBJECTS) {
                    return Err(TopologyError::UniverseTooLarge {
                        what: format!("designated subobjects of `{}`", cat.object_name(o)),
                        limit: T3_MAX_SUBOBJECTS,
                    });
                }
            }
        }
        let mut covering = Vec::with_capacity(cat.num_objects());
        let mut total = 0;
        for o in cat.object_ids() {
            let list = self.covering_sieves(cat, o, limit)?;
            total += list.len();
            covering.push(list);
        }
        let mut outcomes = Vec::new();
        for axiom in levels {
            let counterexample = match axiom {
                Axiom::T1 => cat
                    .object_ids()
                    .find(|&o| !self.is_covering_sieve(cat, &Sieve::full(cat, o)))
                    .map(|object| Counterexample::T1 { object }),
                Axiom::T2 => self.t2_counterexample(cat, &covering),
                Axiom::T3 => self.t3_counterexample(cat, &covering, limit)?,
            };
            outcomes.push(AxiomOutcome { axiom, counterexample });
        }
        Ok(AxiomReport {
            label: self.label().to_string(),
            outcomes,
            checked_universe: format!(
                "{} objects, {} morphisms, {} covering sieves",
                cat.num_objects(),
                cat.num_morphisms(),
                total
            ),
        })
    }

    fn t2_counterexample(&self, cat: &FinCat, covering: &[Vec<Sieve>]) -> Option<Counterexample> {
        for (c, list) in covering.iter().enumerate() {
            for s in list {
                for &f in cat.homs_into(Obj(c)) {
                    let p = pullback_sieve(cat, f, s).expect("codomain matches");
                    if !self.is_covering_sieve(cat, &p) {
                        return Some(Counterexample::T2 {
                            morphism: f,
                            sieve: s.clone(),
                        });
                    }
                }
            }
        }
        None
    }

    fn t3_counterexample(
        &self,
        cat: &FinCat,
        covering: &[Vec<Sieve>],
        limit: usize,
    ) -> Result<Option<Counterexample>, TopologyError> {
        for (c, list) in covering.iter().enumerate() {
            if list.is_empty() {
                continue;
            }
            let others: Vec<Sieve> = all_sieves(cat, Obj(c), limit)
                .map_err(|e| too_many(e, "sieves on one object"))?
                .into_iter()
                .filter(|s| !self.is_covering_sieve(cat, s))
                .collect();
            for s in list {
                if let Some(candidate) = others.iter().find(|t| locally_covering(cat, self, s, t)) {
                    return Ok(Some(Counterexample::T3 {
                        covering: s.clone(),
                        candidate: candidate.clone(),
                    }));
                }
            }
        }
        Ok(None)
    }
}
