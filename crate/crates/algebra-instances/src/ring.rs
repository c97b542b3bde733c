//! Finite associative rings without a required unit.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use sectional::ExtNat;
use serde::{Deserialize, Serialize};

use crate::hom::{search, SectionConstraint};
use crate::subgroup::{exact_cover, CoverCertificate};
use crate::{AlgebraError, FinGroup, GroupHom};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinRing {
    add: FinGroup,
    mul: Vec<usize>,
}

impl FinRing {
    /// Checks that addition is an abelian group and multiplication is
    /// associative and distributes over addition on both sides.
    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        Self::from_tables_with_limit(add, mul, crate::DEFAULT_MAX_ORDER)
    }

    pub fn from_tables_with_limit(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<Self, AlgebraError> {
        let add = FinGroup::from_table_with_limit(add, limit).map_err(|e| match e {
            AlgebraError::NotAGroup(msg) => AlgebraError::NotARing(format!("addition: {msg}")),
            other => other,
        })?;
        if !add.is_abelian() {
            return Err(AlgebraError::NotARing("addition is not commutative".into()));
        }
        let n = add.order();
        if mul.len() != n || mul.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(AlgebraError::NotARing(
                "multiplication table has the wrong shape".into(),
            ));
        }
        let m = |a: usize, b: usize| mul[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(AlgebraError::NotARing(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                    if m(a, add.mul(b, c)) != add.mul(m(a, b), m(a, c)) {
                        return Err(AlgebraError::NotARing(format!("{a}·({b}+{c}) does not distribute")));
                    }
                    if m(add.mul(a, b), c) != add.mul(m(a, c), m(b, c)) {
                        return Err(AlgebraError::NotARing(format!("({a}+{b})·{c} does not distribute")));
                    }
                }
            }
        }
        Ok(FinRing {
            add,
            mul: mul.into_iter().flatten().collect(),
        })
    }

    fn from_fns(n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let t = |op: &dyn Fn(usize, usize) -> usize| (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::from_tables_with_limit(t(&add), t(&mul), usize::MAX).expect("constructor yields a ring")
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn zero(&self) -> usize {
        self.add.identity()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn additive_group(&self) -> &FinGroup {
        &self.add
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.table()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    /// `Z/n` with its usual operations.
    pub fn integers_mod(n: usize) -> Self {
        Self::from_fns(n, |a, b| (a + b) % n, |a, b| a * b % n)
    }

    /// `Z/n` with every product zero.
    pub fn null(n: usize) -> Self {
        Self::from_fns(n, |a, b| (a + b) % n, |_, _| 0)
    }

    /// Componentwise product; `(a, b)` is element `a * |right| + b`.
    pub fn product(left: &FinRing, right: &FinRing) -> Self {
        let m = right.order();
        Self::from_fns(
            left.order() * m,
            |x, y| left.add(x / m, y / m) * m + right.add(x % m, y % m),
            |x, y| left.mul(x / m, y / m) * m + right.mul(x % m, y % m),
        )
    }

    /// `F_2[x]` modulo a monic polynomial of degree `d ≥ 1`, given by its
    /// coefficient bits (bit `i` is the coefficient of `x^i`). Element
    /// bits are coefficients of `1, x, .., x^(d-1)`.
    pub fn f2_quotient(modulus: u32) -> Self {
        assert!(modulus >= 2, "modulus must have positive degree");
        let d = 31 - modulus.leading_zeros();
        let reduce = move |mut p: u32| {
            for shift in (0..=31 - modulus.leading_zeros()).rev() {
                if p >> (shift + d) & 1 == 1 {
                    p ^= modulus << shift;
                }
            }
            p
        };
        let mul = move |a: usize, b: usize| {
            let mut p = 0u32;
            for i in 0..d {
                if b >> i & 1 == 1 {
                    p ^= (a as u32) << i;
                }
            }
            reduce(p) as usize
        };
        Self::from_fns(1 << d, |a, b| a ^ b, mul)
    }

    /// The subring generated by `seeds`.
    pub fn generated(&self, seeds: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(self.zero());
        let mut members = vec![self.zero()];
        for s in seeds {
            if !set.contains(s) {
                set.insert(s);
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                for z in [self.add(x, y), self.mul(x, y), self.mul(y, x)] {
                    if !set.contains(z) {
                        set.insert(z);
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
        set
    }
}

/// On-disk form of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl RingFile {
    pub fn into_ring(self, limit: usize) -> Result<FinRing, AlgebraError> {
        if self.add.len() != self.order {
            return Err(AlgebraError::NotARing(format!(
                "declared order {} but the addition table has {} rows",
                self.order,
                self.add.len()
            )));
        }
        FinRing::from_tables_with_limit(self.add, self.mul, limit)
    }
}

impl From<&FinRing> for RingFile {
    fn from(r: &FinRing) -> Self {
        RingFile {
            order: r.order(),
            add: r.add_table(),
            mul: r.mul_table(),
        }
    }
}

/// A map preserving addition and multiplication; units are not required
/// to be preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: FinRing,
    target: FinRing,
    map: Vec<usize>,
}

impl RingHom {
    pub fn new(source: FinRing, target: FinRing, map: Vec<usize>) -> Result<Self, AlgebraError> {
        if map.len() != source.order() || map.iter().any(|&v| v >= target.order()) {
            return Err(AlgebraError::NotAHom("table has the wrong shape".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(AlgebraError::NotAHom(format!("the sum {a}+{b} is not preserved")));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(AlgebraError::NotAHom(format!("the product {a}·{b} is not preserved")));
                }
            }
        }
        Ok(RingHom { source, target, map })
    }

    pub fn identity(r: &FinRing) -> Self {
        RingHom {
            source: r.clone(),
            target: r.clone(),
            map: (0..r.order()).collect(),
        }
    }

    pub fn source(&self) -> &FinRing {
        &self.source
    }

    pub fn target(&self) -> &FinRing {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_isomorphism(&self) -> bool {
        let image: BTreeSet<usize> = self.map.iter().copied().collect();
        image.len() == self.source.order() && image.len() == self.target.order()
    }
}

/// Every subring (additive subgroup closed under multiplication), ordered
/// by size and then by element list.
pub fn subrings(r: &FinRing, proper: bool) -> Result<Vec<Vec<usize>>, AlgebraError> {
    if r.order() > crate::DEFAULT_MAX_ORDER {
        return Err(AlgebraError::OrderTooLarge {
            order: r.order(),
            limit: crate::DEFAULT_MAX_ORDER,
        });
    }
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let add = |found: &mut BTreeMap<Vec<usize>, Vec<usize>>, seeds: Vec<usize>| -> bool {
        let set: Vec<usize> = r.generated(seeds.iter().copied()).ones().collect();
        if found.contains_key(&set) {
            return false;
        }
        found.insert(set, seeds);
        true
    };
    for a in 0..r.order() {
        add(&mut found, vec![a]);
        for b in a + 1..r.order() {
            add(&mut found, vec![a, b]);
        }
    }
    loop {
        let current: Vec<Vec<usize>> = found.values().cloned().collect();
        let mut grew = false;
        for (i, x) in current.iter().enumerate() {
            for y in &current[i + 1..] {
                grew |= add(&mut found, x.iter().chain(y).copied().collect());
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_keys().filter(|s| !proper || s.len() < r.order()).collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Least number of proper subrings whose union is the ring.
pub fn sigma_ring(r: &FinRing) -> Result<CoverCertificate, AlgebraError> {
    Ok(exact_cover(r.order(), &subrings(r, true)?))
}

/// The first ring section of `hom` over the subring `elements` of its
/// target, indexed like the sorted element list.
pub fn find_ring_section(hom: &RingHom, elements: &[usize]) -> Result<Option<Vec<usize>>, AlgebraError> {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let k = hom.target.additive_group().restrict_to(&sorted)?;
    let additive = GroupHom::new(
        hom.source.additive_group().clone(),
        hom.target.additive_group().clone(),
        hom.map.clone(),
    )?;
    let pos = |x: usize| sorted.binary_search(&x).expect("subring is closed");
    let mut found = None;
    let _ = search(
        &k,
        hom.source.additive_group(),
        Some(SectionConstraint {
            hom: &additive,
            embedding: &sorted,
        }),
        &mut |map| {
            let multiplicative = (0..sorted.len()).all(|i| {
                (0..sorted.len())
                    .all(|j| map[pos(hom.target.mul(sorted[i], sorted[j]))] == hom.source.mul(map[i], map[j]))
            });
            if multiplicative {
                found = Some(map);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSecOutcome {
    pub value: ExtNat,
    /// Each covering subring with its section, indexed like the subring.
    pub cover: Vec<(Vec<usize>, Vec<usize>)>,
    pub uncovered: Option<usize>,
}

/// Least number of (proper) subrings of the target covering it, each with
/// a ring section of `hom`.
pub fn sec_ring_hom(hom: &RingHom, proper: bool) -> Result<RingSecOutcome, AlgebraError> {
    let mut sectioned = Vec::new();
    for s in subrings(hom.target(), proper)? {
        if let Some(section) = find_ring_section(hom, &s)? {
            sectioned.push((s, section));
        }
    }
    let sets: Vec<Vec<usize>> = sectioned.iter().map(|(s, _)| s.clone()).collect();
    let cert = exact_cover(hom.target().order(), &sets);
    let cover = cert
        .cover
        .iter()
        .map(|c| {
            sectioned
                .iter()
                .find(|(s, _)| s == c)
                .cloned()
                .expect("cover uses listed subrings")
        })
        .collect();
    Ok(RingSecOutcome {
        value: cert.value,
        cover,
        uncovered: cert.uncovered,
    })
}

/// Least `n` such that every product of `n` elements of `subset` is zero.
pub fn nil_index(r: &FinRing, subset: &[usize]) -> ExtNat {
    let start: BTreeSet<usize> = subset.iter().copied().collect();
    let zero_only = |p: &BTreeSet<usize>| p.iter().all(|&x| x == r.zero());
    let mut current = start.clone();
    let mut seen: Vec<BTreeSet<usize>> = Vec::new();
    for n in 1.. {
        if zero_only(&current) {
            return ExtNat::Finite(n);
        }
        if seen.contains(&current) {
            return ExtNat::Infinite;
        }
        let next = current
            .iter()
            .flat_map(|&p| start.iter().map(move |&s| r.mul(p, s)))
            .collect();
        seen.push(std::mem::replace(&mut current, next));
    }
    unreachable!("the product sets eventually repeat")
}

/// Whether the nilpotence index of `kernel` is at most `sec`.
pub fn check_nil_bound(r: &FinRing, kernel: &[usize], sec: ExtNat) -> bool {
    nil_index(r, kernel) <= sec
}
