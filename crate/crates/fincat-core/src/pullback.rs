use serde::{Deserialize, Serialize};

use crate::category::{FinCat, Mor};
use crate::error::CategoryError;

/// A square `φ∘f′ = f∘φ′` with `f: X → Y`, `φ: Y′ → Y`, `f′: X′ → Y′`
/// and `φ′: X′ → X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CommutativeSquare {
    pub f: Mor,
    pub phi: Mor,
    pub f_prime: Mor,
    pub phi_prime: Mor,
}

impl FinCat {
    pub fn commutes(&self, sq: &CommutativeSquare) -> bool {
        match (self.compose(sq.phi, sq.f_prime), self.compose(sq.f, sq.phi_prime)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// The first cone `(α, β)` with `φ∘α = f∘β` that does not factor
    /// through the square, or `None` if the square is a weak pullback.
    pub fn weak_pullback_gap(&self, sq: &CommutativeSquare) -> Result<Option<(Mor, Mor)>, CategoryError> {
        if !self.commutes(sq) {
            return Err(CategoryError::NotCommutative);
        }
        let (y_prime, x, x_prime) = (self.dom(sq.phi), self.dom(sq.f), self.dom(sq.f_prime));
        for &alpha in self.homs_into(y_prime) {
            let z = self.dom(alpha);
            let target = self.comp(sq.phi, alpha);
            for &beta in self.hom(z, x) {
                if self.comp(sq.f, beta) != target {
                    continue;
                }
                let mediated = self
                    .hom(z, x_prime)
                    .iter()
                    .any(|&h| self.comp(sq.f_prime, h) == alpha && self.comp(sq.phi_prime, h) == beta);
                if !mediated {
                    return Ok(Some((alpha, beta)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_weak_pullback(&self, sq: &CommutativeSquare) -> Result<bool, CategoryError> {
        Ok(self.weak_pullback_gap(sq)?.is_none())
    }

    /// Weak pullback whose mediating morphisms are also unique.
    pub fn is_pullback(&self, sq: &CommutativeSquare) -> Result<bool, CategoryError> {
        if !self.commutes(sq) {
            return Err(CategoryError::NotCommutative);
        }
        let (y_prime, x, x_prime) = (self.dom(sq.phi), self.dom(sq.f), self.dom(sq.f_prime));
        for &alpha in self.homs_into(y_prime) {
            let z = self.dom(alpha);
            for &beta in self.hom(z, x) {
                if self.comp(sq.f, beta) != self.comp(sq.phi, alpha) {
                    continue;
                }
                let count = self
                    .hom(z, x_prime)
                    .iter()
                    .filter(|&&h| self.comp(sq.f_prime, h) == alpha && self.comp(sq.phi_prime, h) == beta)
                    .count();
                if count != 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn pullback_candidates(
        &self,
        f: Mor,
        phi: Mor,
    ) -> Result<impl Iterator<Item = CommutativeSquare> + '_, CategoryError> {
        if self.cod(f) != self.cod(phi) {
            return Err(CategoryError::CodMismatch {
                f: self.name(f).to_string(),
                phi: self.name(phi).to_string(),
            });
        }
        let (x, y_prime) = (self.dom(f), self.dom(phi));
        Ok(self.object_ids().flat_map(move |apex| {
            self.hom(apex, y_prime).iter().flat_map(move |&f_prime| {
                self.hom(apex, x).iter().filter_map(move |&phi_prime| {
                    let sq = CommutativeSquare {
                        f,
                        phi,
                        f_prime,
                        phi_prime,
                    };
                    (self.commutes(&sq) && self.weak_pullback_gap(&sq).ok()?.is_none()).then_some(sq)
                })
            })
        }))
    }

    /// All weak pullbacks of the cospan `X --f--> Y <--φ-- Y′`, ordered by
    /// apex, then `f′`, then `φ′`. Empty when the cospan has none.
    pub fn find_weak_pullbacks(&self, f: Mor, phi: Mor) -> Result<Vec<CommutativeSquare>, CategoryError> {
        Ok(self.pullback_candidates(f, phi)?.collect())
    }

    /// The lowest-index weak pullback of the cospan, if any.
    pub fn first_weak_pullback(&self, f: Mor, phi: Mor) -> Result<Option<CommutativeSquare>, CategoryError> {
        Ok(self.pullback_candidates(f, phi)?.next())
    }

    /// Whether every cospan has a weak pullback.
    pub fn has_all_weak_pullbacks(&self) -> bool {
        self.object_ids().all(|y| {
            let into = self.homs_into(y);
            into.iter().all(|&f| {
                into.iter()
                    .all(|&phi| matches!(self.first_weak_pullback(f, phi), Ok(Some(_))))
            })
        })
    }
}
