//! Functions between finite sets and the pair-projection demos.

use sectional::ExtNat;
use serde::{Deserialize, Serialize};

use crate::CombinatorialError;

/// A function `0..source → 0..target` given by its value table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSetFun {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl FinSetFun {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, CombinatorialError> {
        if let Some(&v) = values.iter().find(|&&v| v >= target) {
            return Err(CombinatorialError::Invalid(format!(
                "value {v} outside a target of size {target}"
            )));
        }
        Ok(FinSetFun {
            source: values.len(),
            target,
            values,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.first_missed().is_none()
    }

    fn first_missed(&self) -> Option<usize> {
        let mut hit = vec![false; self.target];
        self.values.iter().for_each(|&v| hit[v] = true);
        hit.iter().position(|&h| !h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSecOutcome {
    pub value: ExtNat,
    /// The least preimage of each target element.
    pub section: Option<Vec<usize>>,
    /// The least target element without a preimage.
    pub obstruction: Option<usize>,
}

/// For finite sets the number is 1 exactly when the function is onto.
pub fn sec_set_fun(f: &FinSetFun) -> SetSecOutcome {
    match f.first_missed() {
        Some(y) => SetSecOutcome {
            value: ExtNat::Infinite,
            section: None,
            obstruction: Some(y),
        },
        None => {
            let mut section = vec![usize::MAX; f.target];
            for (x, &y) in f.values.iter().enumerate().rev() {
                section[y] = x;
            }
            SetSecOutcome {
                value: ExtNat::Finite(1),
                section: Some(section),
                obstruction: None,
            }
        }
    }
}

/// The first-coordinate projection from strictly increasing pairs of
/// `elements` (sorted, distinct) onto `elements`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairProjection {
    pub elements: Vec<u64>,
    pub pairs: Vec<(u64, u64)>,
    pub function: FinSetFun,
}

pub fn pair_projection(elements: &[u64]) -> PairProjection {
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    elements.dedup();
    let mut pairs = Vec::new();
    let mut values = Vec::new();
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i + 1..] {
            pairs.push((a, b));
            values.push(i);
        }
    }
    let function = FinSetFun::new(elements.len(), values).expect("indices are in range");
    PairProjection {
        elements,
        pairs,
        function,
    }
}
