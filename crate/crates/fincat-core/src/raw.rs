use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::category::{Draft, FinCat, Mor, Morphism, Obj};
use crate::error::CategoryError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMorphism {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// The JSON category format.
///
/// Composites with an identity on either side may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<RawMorphism>,
    pub identities: BTreeMap<String, String>,
    /// Triples `[g, f, g∘f]`.
    pub composition: Vec<[String; 3]>,
}

impl FinCat {
    pub fn validate(raw: &RawCategory, limit: usize) -> Result<FinCat, CategoryError> {
        let object = |name: &str| {
            raw.objects
                .iter()
                .position(|o| o == name)
                .map(Obj)
                .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
        };
        let morphisms = raw
            .morphisms
            .iter()
            .map(|m| {
                Ok(Morphism {
                    name: m.name.clone(),
                    dom: object(&m.dom)?,
                    cod: object(&m.cod)?,
                })
            })
            .collect::<Result<Vec<_>, CategoryError>>()?;
        let morphism = |name: &str| {
            raw.morphisms
                .iter()
                .position(|m| m.name == name)
                .map(Mor)
                .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
        };
        for key in raw.identities.keys() {
            object(key)?;
        }
        let identities = raw
            .objects
            .iter()
            .map(|o| raw.identities.get(o).map(|m| morphism(m)).transpose())
            .collect::<Result<Vec<_>, _>>()?;
        let mut draft = Draft::new(raw.objects.clone(), morphisms, identities, limit)?;
        for [g, f, gf] in &raw.composition {
            draft.set(morphism(g)?, morphism(f)?, morphism(gf)?)?;
        }
        draft.finish(true)
    }

    /// The full description, including identity composites.
    pub fn to_raw(&self) -> RawCategory {
        let morphisms = self
            .morphisms()
            .iter()
            .map(|m| RawMorphism {
                name: m.name.clone(),
                dom: self.object_name(m.dom).to_string(),
                cod: self.object_name(m.cod).to_string(),
            })
            .collect();
        let identities = self
            .object_ids()
            .map(|o| (self.object_name(o).to_string(), self.name(self.identity(o)).to_string()))
            .collect();
        let mut composition = Vec::new();
        for g in self.morphism_ids() {
            for &f in self.homs_into(self.dom(g)) {
                composition.push([
                    self.name(g).to_string(),
                    self.name(f).to_string(),
                    self.name(self.comp(g, f)).to_string(),
                ]);
            }
        }
        RawCategory {
            objects: self.objects().to_vec(),
            morphisms,
            identities,
            composition,
        }
    }
}
