//! Finite-range scans: sums of two odd primes and twin primes.

use sectional::ExtNat;
use serde::{Deserialize, Serialize};

use crate::sets::{pair_projection, sec_set_fun};
use crate::CombinatorialError;

/// `is_prime[k]` for `k <= n`.
pub fn prime_sieve(n: u64) -> Vec<bool> {
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= n {
        if is_prime[p] {
            (p * p..=n).step_by(p).for_each(|k| is_prime[k] = false);
        }
        p += 1;
    }
    is_prime
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachReport {
    pub max: u64,
    pub evens_checked: usize,
    pub odd_primes: usize,
    /// Even numbers in range that are not a sum of two odd primes.
    pub exceptions: Vec<u64>,
    /// The even number needing the largest least summand, with that summand.
    pub hardest: Option<(u64, u64)>,
}

/// The least odd prime `p` with `e - p` an odd prime and `p <= e - p`.
pub fn least_odd_prime_pair(e: u64, is_prime: &[bool]) -> Option<(u64, u64)> {
    (3..=e / 2)
        .step_by(2)
        .find(|&p| is_prime[p as usize] && is_prime[(e - p) as usize])
        .map(|p| (p, e - p))
}

/// Checks that sums of two odd primes hit every even number in `(4, max]`.
pub fn goldbach_surjectivity(max: u64) -> Result<GoldbachReport, CombinatorialError> {
    if max < 6 {
        return Err(CombinatorialError::Precondition(format!(
            "the range of even numbers above 4 up to {max} is empty"
        )));
    }
    let is_prime = prime_sieve(max);
    let mut report = GoldbachReport {
        max,
        evens_checked: 0,
        odd_primes: (3..=max).filter(|&k| is_prime[k as usize]).count(),
        exceptions: Vec::new(),
        hardest: None,
    };
    for e in (6..=max).step_by(2) {
        report.evens_checked += 1;
        match least_odd_prime_pair(e, &is_prime) {
            Some((p, _)) => {
                if report.hardest.is_none_or(|(_, q)| p > q) {
                    report.hardest = Some((e, p));
                }
            }
            None => report.exceptions.push(e),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinReport {
    pub max: u64,
    /// Primes `p <= max` with `p + 2` prime.
    pub twins: Vec<u64>,
    pub pairs: usize,
    pub value: ExtNat,
    /// A twin prime outside the image of the pair projection.
    pub obstruction: Option<u64>,
}

/// The projection from increasing pairs of twin primes up to `max` onto
/// the first coordinate. At any finite range the largest twin prime is
/// missed.
pub fn twin_prime_projection(max: u64) -> Result<TwinReport, CombinatorialError> {
    if max < 3 {
        return Err(CombinatorialError::Precondition(format!("no twin primes up to {max}")));
    }
    let is_prime = prime_sieve(max + 2);
    let twins: Vec<u64> = (2..=max)
        .filter(|&p| is_prime[p as usize] && is_prime[p as usize + 2])
        .collect();
    let proj = pair_projection(&twins);
    let out = sec_set_fun(&proj.function);
    Ok(TwinReport {
        max,
        pairs: proj.pairs.len(),
        value: out.value,
        obstruction: out.obstruction.map(|i| proj.elements[i]),
        twins,
    })
}
