//! `--top` and `--rel` arguments.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use fincat_core::{FinCat, RawCategory};
use sectional::HomRelation;
use serde::Deserialize;
use topology::{ExtensionalTopology, SubobjectRule, Topology};

use crate::error::{invalid, CliError};
use crate::input::read_json;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopSpec {
    Discrete,
    Trivial,
    /// Object name to covering sieves, each a list of member names.
    File(PathBuf),
    /// A subobject rule file.
    Rule(PathBuf),
}

impl FromStr for TopSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "discrete" => Ok(TopSpec::Discrete),
            "trivial" => Ok(TopSpec::Trivial),
            _ => {
                if let Some(p) = s.strip_prefix("file:") {
                    Ok(TopSpec::File(p.into()))
                } else if let Some(p) = s.strip_prefix("rule:") {
                    Ok(TopSpec::Rule(p.into()))
                } else {
                    Err(format!("expected discrete, trivial, file:PATH or rule:PATH, got `{s}`"))
                }
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleFile {
    #[serde(default = "rule_label")]
    label: String,
    /// Objects left out have no points.
    points: BTreeMap<String, usize>,
    designated: Vec<DesignatedEntry>,
}

fn rule_label() -> String {
    "rule".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DesignatedEntry {
    inclusion: String,
    points: Vec<usize>,
}

impl TopSpec {
    pub fn build(&self, cat: &FinCat) -> Result<Topology, CliError> {
        Ok(match self {
            TopSpec::Discrete => Topology::Discrete,
            TopSpec::Trivial => Topology::Trivial,
            TopSpec::File(path) => {
                let by_name: BTreeMap<String, Vec<Vec<String>>> = read_json(path)?;
                let label = path
                    .file_stem()
                    .map_or("file".into(), |s| s.to_string_lossy().into_owned());
                Topology::Extensional(ExtensionalTopology::from_names(cat, label, &by_name).map_err(invalid)?)
            }
            TopSpec::Rule(path) => Topology::Rule(load_rule(cat, path)?),
        })
    }
}

fn load_rule(cat: &FinCat, path: &Path) -> Result<SubobjectRule, CliError> {
    let file: RuleFile = read_json(path)?;
    for name in file.points.keys() {
        cat.find_object(name).map_err(invalid)?;
    }
    let points = cat
        .object_ids()
        .map(|o| file.points.get(cat.object_name(o)).copied().unwrap_or(0))
        .collect();
    let designated = file
        .designated
        .into_iter()
        .map(|d| Ok((cat.find_morphism(&d.inclusion).map_err(invalid)?, d.points)))
        .collect::<Result<Vec<_>, CliError>>()?;
    SubobjectRule::new(cat, file.label, points, designated).map_err(invalid)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelSpec {
    Trivial,
    Total,
    /// Morphism name to class label.
    Classes(PathBuf),
    /// A functor into another category; related morphisms have the same image.
    Functor(PathBuf),
}

impl FromStr for RelSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(RelSpec::Trivial),
            "total" => Ok(RelSpec::Total),
            _ => {
                if let Some(p) = s.strip_prefix("classes:") {
                    Ok(RelSpec::Classes(p.into()))
                } else if let Some(p) = s.strip_prefix("functor:") {
                    Ok(RelSpec::Functor(p.into()))
                } else {
                    Err(format!(
                        "expected trivial, total, classes:PATH or functor:PATH, got `{s}`"
                    ))
                }
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorFile {
    target: RawCategory,
    objects: BTreeMap<String, String>,
    morphisms: BTreeMap<String, String>,
}

impl RelSpec {
    pub fn build(&self, cat: &FinCat, max_morphisms: usize) -> Result<HomRelation, CliError> {
        match self {
            RelSpec::Trivial => Ok(HomRelation::trivial(cat)),
            RelSpec::Total => Ok(HomRelation::total(cat)),
            RelSpec::Classes(path) => {
                let labels: BTreeMap<String, usize> = read_json(path)?;
                let table = cat
                    .morphism_ids()
                    .map(|m| {
                        labels
                            .get(cat.name(m))
                            .copied()
                            .ok_or_else(|| CliError::Validation(format!("no class for `{}`", cat.name(m))))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                HomRelation::from_classes(cat, &table).map_err(invalid)
            }
            RelSpec::Functor(path) => {
                let file: FunctorFile = read_json(path)?;
                let target = FinCat::validate(&file.target, max_morphisms).map_err(invalid)?;
                let on_objects = cat
                    .object_ids()
                    .map(|o| {
                        let image = file.objects.get(cat.object_name(o)).ok_or_else(|| {
                            CliError::Validation(format!("no image for object `{}`", cat.object_name(o)))
                        })?;
                        target.find_object(image).map_err(invalid)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let on_morphisms = cat
                    .morphism_ids()
                    .map(|m| {
                        let image = file
                            .morphisms
                            .get(cat.name(m))
                            .ok_or_else(|| CliError::Validation(format!("no image for `{}`", cat.name(m))))?;
                        target.find_morphism(image).map_err(invalid)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                HomRelation::functor_induced(cat, &target, &on_objects, &on_morphisms).map_err(invalid)
            }
        }
    }
}
