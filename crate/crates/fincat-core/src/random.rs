//! Seeded generators of small categories for property checks.

use rand::{Rng, RngExt};

use crate::{ConcreteBuilder, FinCat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Closure of a few random functions between small sets.
    Concrete,
    /// A random finite poset.
    Poset,
    /// An intersection-closed family of subsets, ordered by inclusion.
    MeetSemilattice,
    /// A small group with one object.
    Group,
}

#[derive(Debug, Clone)]
pub struct RandomCategory {
    pub family: Family,
    pub cat: FinCat,
}

pub fn random_category<R: Rng + ?Sized>(rng: &mut R, max_morphisms: usize) -> RandomCategory {
    let family = match rng.random_range(0..10) {
        0..=3 => Family::Concrete,
        4..=5 => Family::Poset,
        6..=7 => Family::MeetSemilattice,
        _ => Family::Group,
    };
    RandomCategory {
        family,
        cat: random_of(family, rng, max_morphisms),
    }
}

pub fn random_of<R: Rng + ?Sized>(family: Family, rng: &mut R, max_morphisms: usize) -> FinCat {
    match family {
        Family::Concrete => random_concrete(rng, max_morphisms),
        Family::Poset => random_poset(rng, max_morphisms),
        Family::MeetSemilattice => random_meet_semilattice(rng, max_morphisms),
        Family::Group => random_group(rng, max_morphisms),
    }
}

pub fn random_concrete<R: Rng + ?Sized>(rng: &mut R, max_morphisms: usize) -> FinCat {
    loop {
        let mut b = ConcreteBuilder::new();
        let k = rng.random_range(1..=3);
        let objs: Vec<_> = (0..k)
            .map(|i| b.object(format!("X{i}"), rng.random_range(1..=3)))
            .collect();
        for i in 0..rng.random_range(1..=3) {
            let dom = objs[rng.random_range(0..k)];
            let cod = objs[rng.random_range(0..k)];
            let size = b.carrier_size(cod);
            let map = (0..b.carrier_size(dom)).map(|_| rng.random_range(0..size)).collect();
            b.morphism(format!("a{i}"), dom, cod, map);
        }
        if b.close(max_morphisms).is_ok() {
            return b.build(max_morphisms).expect("closed concrete family is a category");
        }
    }
}

fn transitive_closure(n: usize, rel: &mut [bool]) {
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i * n + k] && rel[k * n + j] {
                    rel[i * n + j] = true;
                }
            }
        }
    }
}

pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, max_morphisms: usize) -> FinCat {
    loop {
        let n = rng.random_range(2..=6);
        let p = rng.random_range(0.15..0.6);
        let mut rel = vec![false; n * n];
        for i in 0..n {
            rel[i * n + i] = true;
            for j in i + 1..n {
                rel[i * n + j] = rng.random_bool(p);
            }
        }
        transitive_closure(n, &mut rel);
        if rel.iter().filter(|&&r| r).count() > max_morphisms {
            continue;
        }
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        return FinCat::preorder(&names, |i, j| rel[i * n + j]).expect("closure is a preorder");
    }
}

pub fn random_meet_semilattice<R: Rng + ?Sized>(rng: &mut R, max_morphisms: usize) -> FinCat {
    loop {
        let bits = rng.random_range(2..=4);
        let mut family: Vec<u32> = (0..rng.random_range(2..=5))
            .map(|_| rng.random_range(0..1u32 << bits))
            .collect();
        family.sort_unstable();
        family.dedup();
        loop {
            let mut next = family.clone();
            for &a in &family {
                for &b in &family {
                    next.push(a & b);
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.len() == family.len() {
                break;
            }
            family = next;
        }
        let n = family.len();
        let count = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| family[i] & !family[j] == 0)
            .count();
        if count > max_morphisms {
            continue;
        }
        let names: Vec<String> = family.iter().map(|s| format!("s{s:b}")).collect();
        return FinCat::preorder(&names, |i, j| family[i] & !family[j] == 0).expect("inclusion is a preorder");
    }
}

fn symmetric_three() -> FinCat {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|x| {
            perms
                .iter()
                .map(|y| {
                    let xy = [x[y[0]], x[y[1]], x[y[2]]];
                    perms.iter().position(|p| *p == xy).expect("closed")
                })
                .collect()
        })
        .collect();
    let names: Vec<String> = (0..6).map(|i| format!("s{i}")).collect();
    FinCat::one_object(&names, &table, 0).expect("S3 is a group")
}

pub fn random_group<R: Rng + ?Sized>(rng: &mut R, max_morphisms: usize) -> FinCat {
    if max_morphisms >= 6 && rng.random_bool(0.25) {
        return symmetric_three();
    }
    FinCat::cyclic_group(rng.random_range(1..=max_morphisms.clamp(1, 8)))
}
