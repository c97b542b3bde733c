//! Finite groups as verified Cayley tables.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::AlgebraError;

/// Largest group or ring order accepted unless a caller raises it.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// A finite group on the elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// Checks closure, associativity, identity and inverses exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        Self::from_table_with_limit(table, DEFAULT_MAX_ORDER)
    }

    pub fn from_table_with_limit(table: Vec<Vec<usize>>, limit: usize) -> Result<Self, AlgebraError> {
        let n = table.len();
        if n == 0 {
            return Err(AlgebraError::NotAGroup("empty table".into()));
        }
        if n > limit {
            return Err(AlgebraError::OrderTooLarge { order: n, limit });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::NotAGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(AlgebraError::NotAGroup(format!(
                    "entry {bad} in row {a} is out of range"
                )));
            }
            flat.extend_from_slice(row);
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| AlgebraError::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (a, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| AlgebraError::NotAGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(AlgebraError::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        Ok(FinGroup {
            order: n,
            table: flat,
            identity,
            inverse,
        })
    }

    /// Builds a table from an already verified operation. Only used by the
    /// constructors below, whose operations are groups by construction.
    fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect();
        Self::from_table_with_limit(table, usize::MAX).expect("constructor yields a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.order)
    }

    /// The subgroup generated by `seeds`, as a set of elements.
    pub fn generated(&self, seeds: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order);
        set.insert(self.identity);
        let gens: Vec<usize> = seeds.into_iter().collect();
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
        }
        set
    }

    /// A generating set picked greedily: each element added enlarges the
    /// subgroup generated so far. Elements of larger order are tried first.
    pub fn generators(&self) -> Vec<usize> {
        self.generators_of(&self.elements().collect::<Vec<_>>())
    }

    /// Greedy generators for the subgroup consisting of `elements`.
    pub fn generators_of(&self, elements: &[usize]) -> Vec<usize> {
        let mut by_order: Vec<usize> = elements.to_vec();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = self.generated([]);
        for a in by_order {
            if span.count_ones(..) == elements.len() {
                break;
            }
            if !span.contains(a) {
                gens.push(a);
                span = self.generated(gens.iter().copied());
            }
        }
        gens
    }

    /// The subgroup on `elements` as a group of its own, with elements
    /// renumbered in increasing order of their index in `self`.
    pub fn restrict_to(&self, elements: &[usize]) -> Result<FinGroup, AlgebraError> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut table = Vec::with_capacity(sorted.len());
        for &a in &sorted {
            let mut row = Vec::with_capacity(sorted.len());
            for &b in &sorted {
                let &ab = pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| AlgebraError::NotAGroup("subset is not closed".into()))?;
                row.push(ab);
            }
            table.push(row);
        }
        FinGroup::from_table(table)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn klein() -> Self {
        Self::product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// Direct product; `(a, b)` is element `a * |right| + b`.
    pub fn product(left: &FinGroup, right: &FinGroup) -> Self {
        let m = right.order;
        Self::from_fn(left.order * m, |x, y| {
            left.mul(x / m, y / m) * m + right.mul(x % m, y % m)
        })
    }

    /// `N ⋊ Z/k` where the generator of `Z/k` acts by the automorphism
    /// `action`. Element `(x, j)` is `j * |N| + x`.
    pub fn semidirect(normal: &FinGroup, action: &[usize], k: usize) -> Result<Self, AlgebraError> {
        let n = normal.order;
        if action.len() != n || action.iter().any(|&v| v >= n) {
            return Err(AlgebraError::NotAGroup("action table has the wrong shape".into()));
        }
        GroupHom::new(normal.clone(), normal.clone(), action.to_vec())?;
        let mut powers = vec![(0..n).collect::<Vec<_>>()];
        for j in 1..=k {
            let prev: &Vec<usize> = &powers[j - 1];
            powers.push(prev.iter().map(|&x| action[x]).collect());
        }
        if powers[k].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(AlgebraError::NotAGroup(format!(
                "action does not have order dividing {k}"
            )));
        }
        Ok(Self::from_fn(n * k, |a, b| {
            let (x1, j1) = (a % n, a / n);
            let (x2, j2) = (b % n, b / n);
            ((j1 + j2) % k) * n + normal.mul(x1, powers[j1][x2])
        }))
    }

    /// The symmetry group of a regular `n`-gon, of order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let neg: Vec<usize> = (0..n).map(|a| (n - a) % n).collect();
        Self::semidirect(&Self::cyclic(n), &neg, 2).expect("negation is an involution")
    }

    /// `Z/m ⋊ Z/k` with the generator acting as multiplication by `r`.
    pub fn metacyclic(m: usize, k: usize, r: usize) -> Result<Self, AlgebraError> {
        let action: Vec<usize> = (0..m).map(|a| a * r % m).collect();
        Self::semidirect(&Self::cyclic(m), &action, k)
    }

    /// The dicyclic group of order `4n`; `n = 2` is the quaternion group.
    /// Element `a^i x^j` is `j * 2n + i`, with `x² = a^n` and `x a x⁻¹ = a⁻¹`.
    pub fn dicyclic(n: usize) -> Self {
        let m = 2 * n;
        Self::from_fn(2 * m, |p, q| {
            let (i1, j1) = (p % m, p / m);
            let (i2, j2) = (q % m, q / m);
            match (j1, j2) {
                (0, _) => j2 * m + (i1 + i2) % m,
                (_, 0) => m + (i1 + m - i2) % m,
                _ => (i1 + m - i2 + n) % m,
            }
        })
    }

    pub fn quaternion() -> Self {
        Self::dicyclic(2)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(n, &gens, usize::MAX).expect("symmetric group")
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_permutations(n, &gens, usize::MAX).expect("alternating group")
    }

    /// The permutation group generated by `gens` (0-based image tables).
    /// Composition is `(p·q)(x) = p(q(x))`; element 0 is the identity and
    /// the rest are numbered in breadth-first order.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], limit: usize) -> Result<Self, AlgebraError> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&v| v >= degree || std::mem::replace(&mut seen[v], true)) {
                return Err(AlgebraError::Parse(format!(
                    "{g:?} is not a permutation of degree {degree}"
                )));
            }
        }
        let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut next = 0;
        while next < elements.len() {
            for g in gens {
                let p: Vec<usize> = elements[next].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&p) {
                    if elements.len() == limit {
                        return Err(AlgebraError::OrderTooLarge {
                            order: elements.len() + 1,
                            limit,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
        Ok(Self::from_fn(elements.len(), |a, b| {
            index[&compose(&elements[a], &elements[b])]
        }))
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` with points `1..=degree`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Vec<usize>, AlgebraError> {
        let mut perm: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(perm);
        }
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| AlgebraError::Parse(format!("malformed cycle notation `{text}`")))?;
            let points: Vec<usize> = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(p) if (1..=degree).contains(&p) => Ok(p - 1),
                    _ => Err(AlgebraError::Parse(format!("`{s}` is not a point in 1..={degree}"))),
                })
                .collect::<Result<_, _>>()?;
            for (i, &p) in points.iter().enumerate() {
                if std::mem::replace(&mut moved[p], true) {
                    return Err(AlgebraError::Parse(format!("point {} repeated in `{text}`", p + 1)));
                }
                perm[p] = points[(i + 1) % points.len()];
            }
            rest = body.1.trim_start();
        }
        Ok(perm)
    }
}

/// On-disk form of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { order: usize, table: Vec<Vec<usize>> },
    Permutations { degree: usize, perm_gens: Vec<String> },
}

impl GroupFile {
    pub fn into_group(self, limit: usize) -> Result<FinGroup, AlgebraError> {
        match self {
            GroupFile::Table { order, table } => {
                if table.len() != order {
                    return Err(AlgebraError::NotAGroup(format!(
                        "declared order {order} but the table has {} rows",
                        table.len()
                    )));
                }
                FinGroup::from_table_with_limit(table, limit)
            }
            GroupFile::Permutations { degree, perm_gens } => {
                let gens = perm_gens
                    .iter()
                    .map(|g| FinGroup::parse_cycles(degree, g))
                    .collect::<Result<Vec<_>, _>>()?;
                FinGroup::from_permutations(degree, &gens, limit)
            }
        }
    }
}

impl From<&FinGroup> for GroupFile {
    fn from(g: &FinGroup) -> Self {
        GroupFile::Table {
            order: g.order(),
            table: g.table(),
        }
    }
}

/// A homomorphism between two groups, stored as an element table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FinGroup,
    target: FinGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FinGroup, target: FinGroup, map: Vec<usize>) -> Result<Self, AlgebraError> {
        if map.len() != source.order() || map.iter().any(|&v| v >= target.order()) {
            return Err(AlgebraError::NotAHom("table has the wrong shape".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(AlgebraError::NotAHom(format!("the product {a}·{b} is not preserved")));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn identity(g: &FinGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: g.elements().collect(),
        }
    }

    pub fn source(&self) -> &FinGroup {
        &self.source
    }

    pub fn target(&self) -> &FinGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self) -> FixedBitSet {
        let mut hit = FixedBitSet::with_capacity(self.target.order());
        for &v in &self.map {
            hit.insert(v);
        }
        hit
    }

    pub fn is_surjective(&self) -> bool {
        self.image().count_ones(..) == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.image().count_ones(..) == self.source.order()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// On-disk form of a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHomFile {
    pub source: GroupFile,
    pub target: GroupFile,
    pub map: Vec<usize>,
}

impl GroupHomFile {
    pub fn into_hom(self, limit: usize) -> Result<GroupHom, AlgebraError> {
        GroupHom::new(self.source.into_group(limit)?, self.target.into_group(limit)?, self.map)
    }
}
