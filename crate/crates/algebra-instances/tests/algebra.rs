use algebra_instances::encoding::{
    group_hom_site, ring_hom_site, subgroup_rule, subring_rule, substructure_site, Structure,
};
use algebra_instances::*;
use proptest::prelude::*;
use sectional::{r_sec, ExtNat, HomRelation};
use topology::{Axiom, Topology, DEFAULT_SIEVE_LIMIT};

fn g(name: &str) -> FinGroup {
    corpus::group(name).unwrap_or_else(|| panic!("no corpus group {name}"))
}

/// Least number of sets from `sets` whose union is `0..universe`, by
/// trying every subfamily.
fn brute_cover(universe: usize, sets: &[Vec<usize>]) -> ExtNat {
    assert!(sets.len() <= 20);
    let mut best = ExtNat::Infinite;
    for mask in 1u32..1 << sets.len() {
        let mut hit = vec![false; universe];
        for (i, s) in sets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.iter().for_each(|&a| hit[a] = true);
            }
        }
        if hit.iter().all(|&h| h) {
            best = best.min(ExtNat::Finite(mask.count_ones() as usize));
        }
    }
    best
}

fn brute_subgroups(grp: &FinGroup) -> Vec<Vec<usize>> {
    Structure::of_group(grp).substructures().unwrap()
}

fn is_cyclic_set(grp: &FinGroup, s: &[usize]) -> bool {
    s.iter().any(|&a| grp.element_order(a) == s.len())
}

fn brute_sigma(grp: &FinGroup, cyclic: bool) -> ExtNat {
    let subs: Vec<Vec<usize>> = brute_subgroups(grp)
        .into_iter()
        .filter(|s| s.len() < grp.order() && (!cyclic || is_cyclic_set(grp, s)))
        .collect();
    brute_cover(grp.order(), &subs)
}

/// Whether `s`, indexed like the sorted `elements`, is a section of `h`.
fn is_section(h: &GroupHom, elements: &[usize], s: &[usize]) -> bool {
    let pos = |x: usize| elements.iter().position(|&e| e == x).unwrap();
    elements.iter().enumerate().all(|(i, &a)| {
        h.apply(s[i]) == a
            && elements
                .iter()
                .enumerate()
                .all(|(j, &b)| s[pos(h.target().mul(a, b))] == h.source().mul(s[i], s[j]))
    })
}

/// sec by brute force: sectioned subgroups from the brute-force homs.
fn brute_sec(h: &GroupHom, filter: SubgroupFilter) -> ExtNat {
    let target = h.target();
    let sub_st = Structure::of_group(target);
    let src = Structure::of_group(h.source());
    let sectioned: Vec<Vec<usize>> = brute_subgroups(target)
        .into_iter()
        .filter(|s| !filter.proper() || s.len() < target.order())
        .filter(|s| !filter.cyclic() || is_cyclic_set(target, s))
        .filter(|s| {
            sub_st
                .restrict(s)
                .homs_to(&src)
                .unwrap()
                .iter()
                .any(|m| is_section(h, s, m))
        })
        .collect();
    // only maximal ones matter; keeps the brute force small
    let maximal: Vec<Vec<usize>> = sectioned
        .iter()
        .filter(|s| {
            !sectioned
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x)))
        })
        .cloned()
        .collect();
    brute_cover(target.order(), &maximal)
}

fn small_groups() -> Vec<(&'static str, FinGroup)> {
    corpus::groups().into_iter().filter(|(_, x)| x.order() <= 8).collect()
}

#[test]
fn corpus_has_one_group_per_class_up_to_16() {
    let counts = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
    let groups = corpus::groups();
    for (n, &c) in counts.iter().enumerate() {
        assert_eq!(
            groups.iter().filter(|(_, x)| x.order() == n + 1).count(),
            c,
            "order {}",
            n + 1
        );
    }
    // invariants separating the classes: element order profile, centre, subgroup count
    let signature = |x: &FinGroup| {
        let mut orders: Vec<usize> = x.elements().map(|a| x.element_order(a)).collect();
        orders.sort();
        let mut centre: Vec<usize> = x
            .elements()
            .filter(|&a| x.elements().all(|b| x.mul(a, b) == x.mul(b, a)))
            .map(|a| x.element_order(a))
            .collect();
        centre.sort();
        (
            x.order(),
            orders,
            centre,
            subgroups(x, SubgroupFilter::All).unwrap().len(),
        )
    };
    let sigs: Vec<_> = groups.iter().map(|(_, x)| signature(x)).collect();
    for i in 0..sigs.len() {
        for j in i + 1..sigs.len() {
            assert_ne!(sigs[i], sigs[j], "{} and {}", groups[i].0, groups[j].0);
        }
    }
}

#[test]
fn subgroups_match_brute_force_and_lagrange() {
    for (name, grp) in corpus::groups() {
        let fast: Vec<Vec<usize>> = subgroups(&grp, SubgroupFilter::All)
            .unwrap()
            .iter()
            .map(|s| s.elements().to_vec())
            .collect();
        assert_eq!(fast, brute_subgroups(&grp), "{name}");
        assert!(fast.iter().all(|s| grp.order() % s.len() == 0), "{name}");
        let cyc = subgroups(&grp, SubgroupFilter::Cyclic).unwrap();
        assert!(cyc.iter().all(|s| is_cyclic_set(&grp, s.elements())), "{name}");
        let expected = fast.iter().filter(|s| is_cyclic_set(&grp, s)).count();
        assert_eq!(cyc.len(), expected, "{name}");
    }
}

#[test]
fn subgroup_examples() {
    let v4 = FinGroup::klein();
    let proper = subgroups(&v4, SubgroupFilter::Proper).unwrap();
    let lists: Vec<&[usize]> = proper.iter().map(|s| s.elements()).collect();
    assert_eq!(lists, vec![&[0][..], &[0, 1], &[0, 2], &[0, 3]]);
    let z5 = subgroups(&FinGroup::cyclic(5), SubgroupFilter::Proper).unwrap();
    assert_eq!(z5.len(), 1);
    assert_eq!(z5[0].elements(), &[0]);
    let s3 = FinGroup::symmetric(3);
    let cyc = subgroups(&s3, SubgroupFilter::Cyclic).unwrap();
    let singles: std::collections::BTreeSet<Vec<usize>> =
        s3.elements().map(|a| s3.generated([a]).ones().collect()).collect();
    assert_eq!(cyc.len(), singles.len());
    assert_eq!(cyc.len(), 5);
}

#[test]
fn covering_numbers_match_brute_force() {
    let v4 = FinGroup::klein();
    let s3 = FinGroup::symmetric(3);
    assert_eq!(sigma_group(&v4, CoverVariant::Proper).unwrap().value, ExtNat::Finite(3));
    assert_eq!(brute_sigma(&v4, false), ExtNat::Finite(3));
    assert_eq!(sigma_group(&s3, CoverVariant::Proper).unwrap().value, ExtNat::Finite(4));
    assert_eq!(brute_sigma(&s3, false), ExtNat::Finite(4));
    for n in 2..=12 {
        let z = FinGroup::cyclic(n);
        let out = sigma_group(&z, CoverVariant::Proper).unwrap();
        assert_eq!(out.value, ExtNat::Infinite, "Z/{n}");
        assert_eq!(brute_sigma(&z, false), ExtNat::Infinite);
        let gen = out.uncovered.unwrap();
        assert_eq!(z.element_order(gen), n);
    }
    for (name, grp) in small_groups() {
        for (variant, cyclic) in [(CoverVariant::Proper, false), (CoverVariant::ProperCyclic, true)] {
            let out = sigma_group(&grp, variant).unwrap();
            assert_eq!(out.value, brute_sigma(&grp, cyclic), "{name} {variant:?}");
            if let ExtNat::Finite(k) = out.value {
                assert_eq!(out.cover.len(), k);
                let mut hit = vec![false; grp.order()];
                for s in &out.cover {
                    assert!(s.len() < grp.order());
                    s.iter().for_each(|&a| hit[a] = true);
                }
                assert!(hit.iter().all(|&h| h));
            }
        }
    }
}

#[test]
fn covering_number_lower_bound_and_cyclic_comparison() {
    for (name, grp) in corpus::groups() {
        let proper = sigma_group(&grp, CoverVariant::Proper).unwrap().value;
        let cyclic = sigma_group(&grp, CoverVariant::ProperCyclic).unwrap().value;
        assert_eq!(proper.is_finite(), !grp.is_cyclic(), "{name}");
        if proper.is_finite() {
            assert!(proper >= ExtNat::Finite(3), "{name}");
        }
        assert!(proper <= cyclic, "{name}");
    }
}

#[test]
fn homomorphism_examples() {
    let z2 = FinGroup::cyclic(2);
    let z4 = FinGroup::cyclic(4);
    let homs = hom_search(&z2, &z4, None).unwrap();
    let maps: Vec<&[usize]> = homs.iter().map(|h| h.map()).collect();
    assert_eq!(maps, vec![&[0, 0][..], &[0, 2]]);

    let q = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
    let none = hom_search(
        &z2,
        &z4,
        Some(SectionConstraint {
            hom: &q,
            embedding: &[0, 1],
        }),
    )
    .unwrap();
    assert!(none.is_empty());

    let v4 = FinGroup::klein();
    // (a, b) is element 2a + b; p keeps the first coordinate
    let p = GroupHom::new(v4.clone(), z2.clone(), vec![0, 0, 1, 1]).unwrap();
    let some = hom_search(
        &z2,
        &v4,
        Some(SectionConstraint {
            hom: &p,
            embedding: &[0, 1],
        }),
    )
    .unwrap();
    assert!(some.iter().any(|s| s.apply(1) == 2));
    assert!(some.iter().all(|s| p.apply(s.apply(1)) == 1));
}

#[test]
fn hom_search_matches_brute_force() {
    for (hn, h) in small_groups() {
        for (kn, k) in small_groups() {
            let fast: Vec<Vec<usize>> = hom_search(&k, &h, None)
                .unwrap()
                .iter()
                .map(|x| x.map().to_vec())
                .collect();
            let mut sorted = fast.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), fast.len(), "{kn}->{hn} duplicates");
            assert_eq!(
                sorted,
                Structure::of_group(&k).homs_to(&Structure::of_group(&h)).unwrap(),
                "{kn}->{hn}"
            );
        }
    }
}

#[test]
fn sectional_number_examples() {
    let z2 = FinGroup::cyclic(2);
    let v4 = FinGroup::klein();
    let p = GroupHom::new(v4.clone(), z2.clone(), vec![0, 0, 1, 1]).unwrap();
    let out = sec_group_hom(&p, SubgroupFilter::All).unwrap();
    assert_eq!(out.value, ExtNat::Finite(1));
    assert!(is_section(&p, &out.cover[0].elements, &out.cover[0].section));

    let q = GroupHom::new(FinGroup::cyclic(4), z2, vec![0, 1, 0, 1]).unwrap();
    let out = sec_group_hom(&q, SubgroupFilter::All).unwrap();
    assert_eq!(out.value, ExtNat::Infinite);
    assert_eq!(out.uncovered, Some(1));
}

#[test]
fn isomorphisms_give_the_covering_number() {
    for (name, grp) in corpus::groups() {
        let sigma = sigma_group(&grp, CoverVariant::Proper).unwrap().value;
        let mut isos = vec![GroupHom::identity(&grp)];
        if grp.order() <= 8 {
            isos.extend(
                hom_search(&grp, &grp, None)
                    .unwrap()
                    .into_iter()
                    .filter(GroupHom::is_isomorphism),
            );
        }
        for h in isos {
            assert_eq!(
                sec_group_hom(&h, SubgroupFilter::Proper).unwrap().value,
                sigma,
                "{name}"
            );
        }
    }
}

fn all_small_homs() -> Vec<(String, GroupHom)> {
    let mut out = Vec::new();
    for (hn, h) in small_groups() {
        for (gn, grp) in small_groups() {
            for hom in hom_search(&h, &grp, None).unwrap() {
                out.push((format!("{hn}->{gn} {:?}", hom.map()), hom));
            }
        }
    }
    out
}

#[test]
fn sectional_number_laws_on_small_homomorphisms() {
    let homs = all_small_homs();
    assert!(homs.len() > 1000);
    for (name, h) in &homs {
        let sec = sec_group_hom(h, SubgroupFilter::All).unwrap().value;
        let sec_proper = sec_group_hom(h, SubgroupFilter::Proper).unwrap().value;
        let sigma = sigma_group(h.target(), CoverVariant::Proper).unwrap().value;
        if sec.is_finite() {
            assert!(h.is_surjective(), "{name}");
        }
        let splits = !hom_search(
            h.target(),
            h.source(),
            Some(SectionConstraint {
                hom: h,
                embedding: &h.target().elements().collect::<Vec<_>>(),
            }),
        )
        .unwrap()
        .is_empty();
        assert_eq!(sec == ExtNat::Finite(1), splits, "{name}");
        if sec >= ExtNat::Finite(2) {
            assert_eq!(sec, sec_proper, "{name}");
        }
        if sec == ExtNat::Finite(1) {
            assert_eq!(sec_proper, sigma, "{name}");
            let cyclic = sec_group_hom(h, SubgroupFilter::ProperCyclic).unwrap().value;
            let sigma_cyclic = sigma_group(h.target(), CoverVariant::ProperCyclic).unwrap().value;
            assert_eq!(cyclic, sigma_cyclic, "{name}");
        }
    }
}

#[test]
fn surjective_homs_need_not_reach_the_cyclic_covering_number() {
    // Z/4 × Z/2 → V4, (a, b) ↦ (a mod 2, b); elements are 2a + b on both sides
    let src = FinGroup::product(&FinGroup::cyclic(4), &FinGroup::cyclic(2));
    let v4 = FinGroup::klein();
    let map: Vec<usize> = src.elements().map(|e| ((e / 2) % 2) * 2 + e % 2).collect();
    let h = GroupHom::new(src, v4.clone(), map).unwrap();
    assert!(h.is_surjective());
    let sec = sec_group_hom(&h, SubgroupFilter::ProperCyclic).unwrap();
    assert_eq!(sec.value, ExtNat::Infinite);
    assert_eq!(brute_sec(&h, SubgroupFilter::ProperCyclic), ExtNat::Infinite);
    // the order-2 subgroup {(0,0), (1,0)} has no section: its preimages have order 4
    assert_eq!(sec.uncovered, Some(2));
    assert_eq!(
        sigma_group(&v4, CoverVariant::ProperCyclic).unwrap().value,
        ExtNat::Finite(3)
    );
}

#[test]
fn sectional_numbers_match_brute_force() {
    for (name, h) in all_small_homs().iter().step_by(7) {
        for filter in [
            SubgroupFilter::All,
            SubgroupFilter::Proper,
            SubgroupFilter::ProperCyclic,
        ] {
            let out = sec_group_hom(h, filter).unwrap();
            assert_eq!(out.value, brute_sec(h, filter), "{name} {filter:?}");
            for s in &out.cover {
                assert!(is_section(h, &s.elements, &s.section), "{name}");
            }
        }
    }
}

#[test]
fn engine_agrees_on_explicit_encodings() {
    let pairs = [
        ("V4", "Z2"),
        ("Z4", "Z2"),
        ("Z4xZ2", "V4"),
        ("S3", "Z2"),
        ("Q8", "V4"),
        ("Z6", "Z3"),
    ];
    for (hn, gn) in pairs {
        let (h, grp) = (g(hn), g(gn));
        for hom in hom_search(&h, &grp, None).unwrap().iter().step_by(3) {
            let site = group_hom_site(hom).unwrap();
            let rel = HomRelation::trivial(&site.cat);
            for filter in [
                SubgroupFilter::All,
                SubgroupFilter::Proper,
                SubgroupFilter::Cyclic,
                SubgroupFilter::ProperCyclic,
            ] {
                let top = Topology::Rule(subgroup_rule(&site, &grp, filter));
                let engine = r_sec(&site.cat, &top, &rel, site.hom).unwrap().value;
                let inst = sec_group_hom(hom, filter).unwrap().value;
                assert_eq!(engine, inst, "{hn}->{gn} {:?} {filter:?}", hom.map());
            }
        }
    }
}

#[test]
fn subgroup_and_subring_rules_are_quasi_grothendieck() {
    for name in ["Z2", "Z4", "V4", "Z6", "S3", "Q8"] {
        let site = substructure_site(&Structure::of_group(&g(name))).unwrap();
        let top = Topology::Rule(site.rule.clone());
        let report = top
            .check_axioms(&site.cat, &[Axiom::T1, Axiom::T2], DEFAULT_SIEVE_LIMIT)
            .unwrap();
        assert!(report.all_pass(), "{name}");

        let proper = Topology::Rule(site.rule.proper("proper subgroups"));
        let report = proper
            .check_axioms(&site.cat, &[Axiom::T1], DEFAULT_SIEVE_LIMIT)
            .unwrap();
        let cx = report.counterexample(Axiom::T1).expect("proper subgroups break T1");
        assert!(cx.replay(&site.cat, &proper), "{name}");
    }
    for name in ["Z4", "Z6", "F2xF2", "F4", "F2[x]/x^2", "null Z4"] {
        let r = corpus::ring(name).unwrap();
        let site = substructure_site(&Structure::of_ring(&r)).unwrap();
        let top = Topology::Rule(site.rule.clone());
        let report = top
            .check_axioms(&site.cat, &[Axiom::T1, Axiom::T2], DEFAULT_SIEVE_LIMIT)
            .unwrap();
        assert!(report.all_pass(), "{name}");
    }
}

#[test]
fn group_equation_matches_brute_force() {
    for (name, grp) in small_groups().into_iter().chain([("A4", g("A4"))]) {
        for a in grp.elements() {
            let solvable = grp.elements().any(|x| {
                grp.elements().any(|h| {
                    let word = [a, x, h, grp.inv(x), grp.inv(a), grp.inv(h), a, x, h];
                    word.iter().fold(grp.identity(), |acc, &w| grp.mul(acc, w)) == grp.identity()
                })
            });
            let out = group_equation_sec(&grp, a).unwrap();
            assert_eq!(out.value == ExtNat::Finite(1), solvable, "{name} {a}");
            assert!(out.value == ExtNat::Finite(1) || out.value == ExtNat::Infinite);
            if let Some((x, h)) = out.witness {
                let word = [a, x, h, grp.inv(x), grp.inv(a), grp.inv(h), a, x, h];
                assert_eq!(
                    word.iter().fold(grp.identity(), |acc, &w| grp.mul(acc, w)),
                    grp.identity()
                );
            }
        }
        let id = group_equation_sec(&grp, grp.identity()).unwrap();
        assert_eq!(id.value, ExtNat::Finite(1));
    }
}

#[test]
fn group_files_parse_and_validate() {
    let s3: GroupFile = serde_json::from_str(r#"{"degree": 3, "perm_gens": ["(1 2)", "(1 2 3)"]}"#).unwrap();
    let s3 = s3.into_group(DEFAULT_MAX_ORDER).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let table: GroupFile = serde_json::from_str(r#"{"order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    assert_eq!(table.into_group(DEFAULT_MAX_ORDER).unwrap(), FinGroup::cyclic(2));
    let bad: GroupFile = serde_json::from_str(r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#).unwrap();
    assert!(matches!(
        bad.into_group(DEFAULT_MAX_ORDER),
        Err(AlgebraError::NotAGroup(_))
    ));
    let s6: GroupFile = serde_json::from_str(r#"{"degree": 6, "perm_gens": ["(1 2)", "(1 2 3 4 5 6)"]}"#).unwrap();
    assert!(matches!(
        s6.into_group(DEFAULT_MAX_ORDER),
        Err(AlgebraError::OrderTooLarge { .. })
    ));
    assert!(FinGroup::parse_cycles(3, "(1 4)").is_err());
    assert!(FinGroup::parse_cycles(3, "(1 2)(2 3)").is_err());
    assert_eq!(FinGroup::parse_cycles(4, "(1 2)(3 4)").unwrap(), vec![1, 0, 3, 2]);
    let round = GroupFile::from(&FinGroup::quaternion());
    let text = serde_json::to_string(&round).unwrap();
    let back: GroupFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back.into_group(DEFAULT_MAX_ORDER).unwrap(), FinGroup::quaternion());
    assert_eq!(FinGroup::symmetric(4).order(), 24);
    assert_eq!(FinGroup::alternating(4).order(), 12);
}

#[test]
fn ring_examples() {
    let f2 = FinRing::integers_mod(2);
    let f2xf2 = corpus::ring("F2xF2").unwrap();
    let sub_st = |r: &FinRing| Structure::of_ring(r).substructures().unwrap();
    for (name, r) in corpus::rings() {
        assert_eq!(subrings(&r, false).unwrap(), sub_st(&r), "{name}");
        let proper: Vec<Vec<usize>> = sub_st(&r).into_iter().filter(|s| s.len() < r.order()).collect();
        assert_eq!(sigma_ring(&r).unwrap().value, brute_cover(r.order(), &proper), "{name}");
        let iso = RingHom::identity(&r);
        assert_eq!(
            sec_ring_hom(&iso, true).unwrap().value,
            sigma_ring(&r).unwrap().value,
            "{name}"
        );
    }
    for p in [2, 3, 5, 7] {
        assert_eq!(sigma_ring(&FinRing::integers_mod(p)).unwrap().value, ExtNat::Infinite);
    }
    assert_eq!(sigma_ring(&f2xf2).unwrap().value, ExtNat::Finite(3));

    // the projection F2 × F2 → F2 splits; Z/4 → Z/2 does not
    let proj = RingHom::new(f2xf2.clone(), f2.clone(), vec![0, 0, 1, 1]).unwrap();
    assert_eq!(sec_ring_hom(&proj, false).unwrap().value, ExtNat::Finite(1));
    let q = RingHom::new(FinRing::integers_mod(4), f2.clone(), vec![0, 1, 0, 1]).unwrap();
    assert_eq!(sec_ring_hom(&q, false).unwrap().value, ExtNat::Infinite);
    // the zero map is a ring map in the weak sense
    assert!(RingHom::new(f2.clone(), f2xf2.clone(), vec![0, 0]).is_ok());
    assert!(FinRing::from_tables(vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 0]]).is_ok());
    let not_distributive = FinRing::from_tables(vec![vec![0, 1], vec![1, 0]], vec![vec![1, 1], vec![1, 1]]);
    assert!(matches!(not_distributive, Err(AlgebraError::NotARing(_))));
}

#[test]
fn ring_sections_match_encodings() {
    let cases = [
        ("F2xF2", "Z2"),
        ("Z4", "Z2"),
        ("Z6", "Z3"),
        ("F2xF2", "F2xF2"),
        ("Z2xZ4", "Z4"),
    ];
    for (sn, tn) in cases {
        let (src, tgt) = (corpus::ring(sn).unwrap(), corpus::ring(tn).unwrap());
        let maps = Structure::of_ring(&src).homs_to(&Structure::of_ring(&tgt)).unwrap();
        for map in maps {
            let h = RingHom::new(src.clone(), tgt.clone(), map).unwrap();
            let site = ring_hom_site(&h).unwrap();
            let rel = HomRelation::trivial(&site.cat);
            for proper in [false, true] {
                let top = Topology::Rule(subring_rule(&site, proper));
                let engine = r_sec(&site.cat, &top, &rel, site.hom).unwrap().value;
                assert_eq!(
                    engine,
                    sec_ring_hom(&h, proper).unwrap().value,
                    "{sn}->{tn} {:?}",
                    h.map()
                );
            }
        }
    }
}

#[test]
fn nilpotence_examples() {
    let z4 = FinRing::integers_mod(4);
    let z8 = FinRing::integers_mod(8);
    assert_eq!(nil_index(&z4, &[2]), ExtNat::Finite(2));
    assert_eq!(nil_index(&z8, &[2]), ExtNat::Finite(3));
    assert_eq!(nil_index(&z4, &[1]), ExtNat::Infinite);
    assert_eq!(nil_index(&z8, &[0]), ExtNat::Finite(1));
    assert!(check_nil_bound(&z8, &[0], ExtNat::Finite(1)));
    assert!(check_nil_bound(&z8, &[2], ExtNat::Finite(3)));
    assert!(!check_nil_bound(&z8, &[2], ExtNat::Finite(2)));
    assert!(check_nil_bound(&z4, &[1], ExtNat::Infinite));
}

/// nil by listing every product of length up to `bound`.
fn brute_nil(r: &FinRing, s: &[usize], bound: usize) -> Option<usize> {
    let mut products: Vec<usize> = s.to_vec();
    for n in 1..=bound {
        if products.iter().all(|&p| p == r.zero()) {
            return Some(n);
        }
        products = products
            .iter()
            .flat_map(|&p| s.iter().map(move |&x| r.mul(p, x)))
            .collect();
        products.sort();
        products.dedup();
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nil_index_matches_products(ring_idx in 0usize..15, mask in 0u32..512) {
        let (_, r) = corpus::rings().swap_remove(ring_idx);
        let s: Vec<usize> = (0..r.order()).filter(|&i| mask >> (i % 9) & 1 == 1).collect();
        let bound = r.order() + 2;
        match nil_index(&r, &s) {
            ExtNat::Finite(n) => prop_assert_eq!(brute_nil(&r, &s, bound), Some(n)),
            ExtNat::Infinite => prop_assert_eq!(brute_nil(&r, &s, bound), None),
        }
    }

    #[test]
    fn generated_sets_are_subgroups(group_idx in 0usize..42, seeds in proptest::collection::vec(0usize..16, 0..3)) {
        let (_, grp) = corpus::groups().swap_remove(group_idx);
        let seeds: Vec<usize> = seeds.into_iter().map(|s| s % grp.order()).collect();
        let set: Vec<usize> = grp.generated(seeds.iter().copied()).ones().collect();
        prop_assert!(seeds.iter().all(|s| set.contains(s)));
        prop_assert_eq!(grp.order() % set.len(), 0);
        for &a in &set {
            for &b in &set {
                prop_assert!(set.contains(&grp.mul(a, grp.inv(b))));
            }
        }
        let all = subgroups(&grp, SubgroupFilter::All).unwrap();
        prop_assert!(all.iter().any(|s| s.elements() == set.as_slice()));
    }

    #[test]
    fn composite_homs_need_at_least_as_many(i in 0usize..14, j in 0usize..14, k in 0usize..14, a in 0usize..64, b in 0usize..64) {
        let groups = small_groups();
        let (x, y, z) = (&groups[i].1, &groups[j].1, &groups[k].1);
        let f_all = hom_search(x, y, None).unwrap();
        let g_all = hom_search(y, z, None).unwrap();
        let (f, gh) = (&f_all[a % f_all.len()], &g_all[b % g_all.len()]);
        let composite: Vec<usize> = x.elements().map(|e| gh.apply(f.apply(e))).collect();
        let gf = GroupHom::new(x.clone(), z.clone(), composite).unwrap();
        let sec_gf = sec_group_hom(&gf, SubgroupFilter::All).unwrap().value;
        let sec_g = sec_group_hom(gh, SubgroupFilter::All).unwrap().value;
        prop_assert!(sec_gf >= sec_g);
    }
}
