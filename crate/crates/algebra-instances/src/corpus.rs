//! Bundled groups and rings: one representative of every group of order at
//! most 16, and a handful of small rings.

use crate::{FinGroup, FinRing};

fn z(n: usize) -> FinGroup {
    FinGroup::cyclic(n)
}

fn x(a: &FinGroup, b: &FinGroup) -> FinGroup {
    FinGroup::product(a, b)
}

fn meta(m: usize, k: usize, r: usize) -> FinGroup {
    FinGroup::metacyclic(m, k, r).expect("valid metacyclic parameters")
}

/// `(Z/4 × Z/2) ⋊ Z/2` acting by `(a, b) ↦ (a, b + a)` or, for the
/// central product of `Z/4` and `D4`, by `(a, b) ↦ (a + 2b, b)`.
fn over_z4_z2(action: impl Fn(usize, usize) -> (usize, usize)) -> FinGroup {
    let normal = x(&z(4), &z(2));
    let table: Vec<usize> = (0..8)
        .map(|e| {
            let (a, b) = action(e / 2, e % 2);
            (a % 4) * 2 + b % 2
        })
        .collect();
    FinGroup::semidirect(&normal, &table, 2).expect("valid action")
}

/// Named groups of order at most 16, one per isomorphism class.
pub fn groups() -> Vec<(&'static str, FinGroup)> {
    let v4 = FinGroup::klein();
    let z2 = z(2);
    vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("V4", v4.clone()),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", FinGroup::symmetric(3)),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", x(&z(4), &z2)),
        ("Z2^3", x(&v4, &z2)),
        ("D4", FinGroup::dihedral(4)),
        ("Q8", FinGroup::quaternion()),
        ("Z9", z(9)),
        ("Z3xZ3", x(&z(3), &z(3))),
        ("Z10", z(10)),
        ("D5", FinGroup::dihedral(5)),
        ("Z11", z(11)),
        ("Z12", z(12)),
        ("Z6xZ2", x(&z(6), &z2)),
        ("A4", FinGroup::alternating(4)),
        ("D6", FinGroup::dihedral(6)),
        ("Dic3", FinGroup::dicyclic(3)),
        ("Z13", z(13)),
        ("Z14", z(14)),
        ("D7", FinGroup::dihedral(7)),
        ("Z15", z(15)),
        ("Z16", z(16)),
        ("Z4xZ4", x(&z(4), &z(4))),
        ("(Z4xZ2):Z2", over_z4_z2(|a, b| (a, b + a))),
        ("Z4:Z4", meta(4, 4, 3)),
        ("Z8xZ2", x(&z(8), &z2)),
        ("M16", meta(8, 2, 5)),
        ("D8", FinGroup::dihedral(8)),
        ("SD16", meta(8, 2, 3)),
        ("Q16", FinGroup::dicyclic(4)),
        ("Z4xZ2xZ2", x(&x(&z(4), &z2), &z2)),
        ("Z2xD4", x(&z2, &FinGroup::dihedral(4))),
        ("Z2xQ8", x(&z2, &FinGroup::quaternion())),
        ("Z4*D4", over_z4_z2(|a, b| (a + 2 * b, b))),
        ("Z2^4", x(&v4, &v4)),
    ]
}

/// Looks a corpus group up by name.
pub fn group(name: &str) -> Option<FinGroup> {
    groups().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// Small rings, with and without unit.
pub fn rings() -> Vec<(&'static str, FinRing)> {
    let f2 = FinRing::integers_mod(2);
    vec![
        ("Z2", f2.clone()),
        ("Z3", FinRing::integers_mod(3)),
        ("Z4", FinRing::integers_mod(4)),
        ("Z5", FinRing::integers_mod(5)),
        ("Z6", FinRing::integers_mod(6)),
        ("Z8", FinRing::integers_mod(8)),
        ("Z9", FinRing::integers_mod(9)),
        ("F2xF2", FinRing::product(&f2, &f2)),
        ("F4", FinRing::f2_quotient(0b111)),
        ("F2[x]/x^2", FinRing::f2_quotient(0b100)),
        ("F2[x]/x^3", FinRing::f2_quotient(0b1000)),
        ("F2xF2xF2", FinRing::product(&FinRing::product(&f2, &f2), &f2)),
        ("null Z2", FinRing::null(2)),
        ("null Z4", FinRing::null(4)),
        ("Z2xZ4", FinRing::product(&f2, &FinRing::integers_mod(4))),
    ]
}

pub fn ring(name: &str) -> Option<FinRing> {
    rings().into_iter().find(|(n, _)| *n == name).map(|(_, r)| r)
}
