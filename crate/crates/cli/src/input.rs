//! Reading and validating input files.

use std::path::Path;

use algebra_instances::{corpus, FinGroup, FinRing, GroupFile, GroupHom, GroupHomFile, RingFile, DEFAULT_MAX_ORDER};
use combinatorial_instances::{GraphHom, GraphHomFile};
use fincat_core::{FinCat, RawCategory};
use serde::de::DeserializeOwned;

use crate::error::{invalid, CliError};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        location: "0:0".into(),
        message: e.to_string(),
    })?;
    parse_json(&path.display().to_string(), &text)
}

pub fn parse_json<T: DeserializeOwned>(origin: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: origin.to_string(),
        location: format!("{}:{}", e.line(), e.column()),
        message: e.to_string(),
    })
}

pub fn load_category(path: &Path, max_morphisms: usize) -> Result<FinCat, CliError> {
    let raw: RawCategory = read_json(path)?;
    FinCat::validate(&raw, max_morphisms).map_err(invalid)
}

/// A group file, or `corpus:NAME` for a bundled group.
pub fn load_group(spec: &str) -> Result<FinGroup, CliError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::group(name).ok_or_else(|| CliError::Validation(format!("no bundled group named `{name}`")));
    }
    let file: GroupFile = read_json(Path::new(spec))?;
    file.into_group(DEFAULT_MAX_ORDER).map_err(invalid)
}

pub fn load_group_hom(path: &Path) -> Result<GroupHom, CliError> {
    let file: GroupHomFile = read_json(path)?;
    file.into_hom(DEFAULT_MAX_ORDER).map_err(invalid)
}

/// A ring file, or `corpus:NAME` for a bundled ring.
pub fn load_ring(spec: &str) -> Result<FinRing, CliError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::ring(name).ok_or_else(|| CliError::Validation(format!("no bundled ring named `{name}`")));
    }
    let file: RingFile = read_json(Path::new(spec))?;
    file.into_ring(DEFAULT_MAX_ORDER).map_err(invalid)
}

pub fn load_graph_hom(path: &Path) -> Result<GraphHom, CliError> {
    let file: GraphHomFile = read_json(path)?;
    file.into_hom().map_err(invalid)
}
