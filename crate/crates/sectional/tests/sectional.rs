use fincat_core::random::random_category;
use fincat_core::{CategoryBuilder, ConcreteBuilder, FinCat, Mor, Obj};
use fixedbitset::FixedBitSet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sectional::certificate::{report, verify, CertificateView, ObstructionView, SecReport};
use sectional::cover::min_set_cover;
use sectional::random::{random_congruence, random_partition};
use sectional::Strategy;
use sectional::*;
use sieves::{all_sieves, generate_sieve};
use topology::random::{random_coarsening, random_extensional, random_quasi};
use topology::{ExtensionalTopology, SubobjectRule, Topology, DEFAULT_SIEVE_LIMIT};

const LIMIT: usize = DEFAULT_SEARCH_LIMIT;

fn positions(outer: u32, inner: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| outer >> b & 1 == 1)
        .enumerate()
        .filter(|(_, b)| inner >> b & 1 == 1)
        .map(|(i, _)| i)
        .collect()
}

/// Subsets of an `n`-element set with all functions between them, covered
/// by jointly surjective subset inclusions.
fn subsets(n: usize) -> (FinCat, Topology) {
    subsets_among((0..1u32 << n).collect())
}

fn subsets_among(masks: Vec<u32>) -> (FinCat, Topology) {
    let mut b = ConcreteBuilder::new();
    let objs: Vec<Obj> = masks
        .iter()
        .map(|&m| b.object(format!("{m:b}"), m.count_ones() as usize))
        .collect();
    let mut incl = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &c) in masks.iter().enumerate() {
            let (da, dc) = (a.count_ones() as usize, c.count_ones() as usize);
            for code in 0..dc.pow(da as u32) {
                let map: Vec<usize> = (0..da).map(|k| code / dc.pow(k as u32) % dc).collect();
                let is_incl = a & !c == 0 && map == positions(c, a);
                let m = b.morphism(format!("f{i}_{j}_{code}"), objs[i], objs[j], map);
                if is_incl {
                    incl.push((m, positions(c, a)));
                }
            }
        }
    }
    let cat = b.build(10_000).unwrap();
    let points = masks.iter().map(|m| m.count_ones() as usize).collect();
    let rule = SubobjectRule::new(&cat, "subsets", points, incl).unwrap();
    (cat, Topology::Rule(rule))
}

/// Opens of a finite space ordered by inclusion, covered by open covers.
fn opens(family: &[u32]) -> (FinCat, Topology) {
    let names: Vec<String> = family.iter().map(|u| format!("{u:b}")).collect();
    let cat = FinCat::preorder(&names, |i, j| family[i] & !family[j] == 0).unwrap();
    let points = family.iter().map(|u| u.count_ones() as usize).collect();
    let designated: Vec<(Mor, Vec<usize>)> = cat
        .morphism_ids()
        .map(|m| {
            let (v, u) = (family[cat.dom(m).0], family[cat.cod(m).0]);
            (m, positions(u, v))
        })
        .collect();
    (
        cat.clone(),
        Topology::Rule(SubobjectRule::new(&cat, "opens", points, designated).unwrap()),
    )
}

/// Sieves containing a covering sieve of `top`.
fn upward_closure(cat: &FinCat, top: &Topology) -> Topology {
    let covering = cat
        .object_ids()
        .map(|o| {
            let all = all_sieves(cat, o, DEFAULT_SIEVE_LIMIT).unwrap();
            let base: Vec<_> = all.iter().filter(|s| top.is_covering_sieve(cat, s)).cloned().collect();
            all.into_iter()
                .filter(|s| base.iter().any(|b| b.is_subset(s)))
                .collect()
        })
        .collect();
    Topology::Extensional(ExtensionalTopology::new(cat, "upward", covering).unwrap())
}

/// Lex-least minimum family of sectioned morphisms, straight from the
/// definition. `None` when there are too many candidates to enumerate.
fn oracle(cat: &FinCat, top: &Topology, rel: &dyn MorphismRelation, f: Mor, mono: bool) -> Option<Option<Vec<Mor>>> {
    let y = cat.cod(f);
    let cands: Vec<Mor> = cat
        .homs_into(y)
        .iter()
        .copied()
        .filter(|&g| !mono || cat.is_monomorphism(g))
        .filter(|&g| {
            cat.hom(cat.dom(g), cat.dom(f))
                .iter()
                .any(|&s| rel.related(cat.comp(f, s), g))
        })
        .collect();
    if cands.len() > 12 {
        return None;
    }
    let mut best: Option<Vec<Mor>> = None;
    for mask in 1u32..1 << cands.len() {
        let fam: Vec<Mor> = (0..cands.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cands[i])
            .collect();
        if best.as_ref().is_some_and(|b| b.len() < fam.len()) {
            continue;
        }
        if top.is_covering_family(cat, y, &fam).unwrap()
            && best.as_ref().is_none_or(|b| (fam.len(), &fam) < (b.len(), b))
        {
            best = Some(fam);
        }
    }
    Some(best)
}

fn value_of(family: &Option<Vec<Mor>>) -> ExtNat {
    family.as_ref().map(|f| f.len()).into()
}

fn random_setup(seed: u64) -> (FinCat, Topology, HomRelation, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cat = random_category(&mut rng, 24).cat;
    let top = if seed.is_multiple_of(2) {
        Topology::Extensional(random_quasi(&cat, &mut rng))
    } else {
        Topology::Extensional(random_extensional(&cat, &mut rng))
    };
    let rel = match seed % 3 {
        0 => HomRelation::trivial(&cat),
        1 => random_partition(&cat, 2, &mut rng),
        _ => random_congruence(&cat, &mut rng),
    };
    (cat, top, rel, rng)
}

fn opts(mono: bool, strategy: Strategy) -> SearchOptions {
    SearchOptions {
        mono,
        strategy,
        limit: LIMIT,
    }
}

#[test]
fn section_lookup() {
    let cat = FinCat::walking_arrow();
    let u = cat.find_morphism("u").unwrap();
    let id_a = cat.identity(cat.find_object("A").unwrap());
    let id_b = cat.identity(cat.find_object("B").unwrap());
    let eq = HomRelation::trivial(&cat);
    assert_eq!(has_r_section(&cat, &eq, u, u).unwrap(), Some(id_a));
    assert_eq!(has_r_section(&cat, &eq, u, id_b).unwrap(), None);
    assert!(matches!(
        has_r_section(&cat, &eq, u, id_a),
        Err(SectionalError::CodMismatch { .. })
    ));

    let z4 = FinCat::cyclic_group(4);
    let total = HomRelation::total(&z4);
    let g2 = z4.find_morphism("g2").unwrap();
    let g1 = z4.find_morphism("g1").unwrap();
    assert_eq!(has_r_section(&z4, &total, g2, g1).unwrap(), Some(Mor(0)));
}

#[test]
fn relation_construction() {
    let cat = FinCat::cyclic_group(4);
    let eq = HomRelation::trivial(&cat);
    assert!(eq.is_trivial() && eq.preserves_composition());
    assert!(cat.morphism_ids().all(|m| eq.class_of(m) == m.0));

    // collapse onto the one-morphism category
    let point = FinCat::cyclic_group(1);
    let collapse = HomRelation::functor_induced(&cat, &point, &[Obj(0)], &[Mor(0); 4]).unwrap();
    assert!(collapse.preserves_composition());
    assert_eq!(collapse, HomRelation::total(&cat));

    // g0 ~ g1 ~ g2 without g0 ~ g2
    let [g0, g1, g2, g3] = [0, 1, 2, 3].map(Mor);
    let mut pairs: Vec<(Mor, Mor)> = [g0, g1, g2, g3].iter().map(|&m| (m, m)).collect();
    pairs.extend([(g0, g1), (g1, g0), (g1, g2), (g2, g1)]);
    assert!(matches!(
        HomRelation::from_pairs(&cat, &pairs),
        Err(RelationError::NotEquivalence(_))
    ));
    pairs.extend([(g0, g2), (g2, g0)]);
    let rel = HomRelation::from_pairs(&cat, &pairs).unwrap();
    assert!(!rel.preserves_composition());
    assert_eq!(rel.pairs().len(), pairs.len());

    assert!(matches!(
        HomRelation::from_classes(&cat, &[0, 1]),
        Err(RelationError::NotTotal { expected: 4, found: 2 })
    ));
    // the congruence generated by g0 ~ g2 identifies the cosets of {g0, g2}
    let cong = HomRelation::congruence_generated_by(&cat, &[(g0, g2)]).unwrap();
    assert!(cong.preserves_composition());
    assert!(cong.related(g1, g3) && !cong.related(g0, g1));
    assert!(matches!(
        HomRelation::functor_induced(&cat, &point, &[Obj(0)], &[Mor(0), Mor(0)]),
        Err(RelationError::NotAFunctor(_))
    ));
}

#[test]
fn discrete_topology_gives_one() {
    for seed in 0..40 {
        let (cat, _, rel, _) = random_setup(seed);
        for f in cat.morphism_ids() {
            let out = r_sec(&cat, &Topology::Discrete, &rel, f).unwrap();
            assert_eq!(out.value, ExtNat::Finite(1));
            let via_sieves =
                sectional_number(&cat, &Topology::Discrete, &rel, f, opts(false, Strategy::Sieves)).unwrap();
            assert_eq!(via_sieves.value, ExtNat::Finite(1));
            if cat.is_monomorphism(f) {
                assert_eq!(
                    r_msec(&cat, &Topology::Discrete, &rel, f).unwrap().value,
                    ExtNat::Finite(1)
                );
            }
        }
    }
}

#[test]
fn subobject_classes_examples() {
    let cat = FinCat::walking_arrow();
    let b = cat.find_object("B").unwrap();
    let classes = subobject_classes(&cat, b);
    let reps: Vec<&str> = classes.iter().map(|c| cat.name(c.representative)).collect();
    assert_eq!(reps, ["1_B", "u"]);

    let z6 = FinCat::cyclic_group(6);
    let classes = subobject_classes(&z6, Obj(0));
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].members.len(), 6);
    assert_eq!(classes[0].representative, z6.identity(Obj(0)));
}

#[test]
fn designated_route_matches_other_routes() {
    let cases = [
        subsets(2),
        subsets(3),
        opens(&[0b000, 0b001, 0b010, 0b011, 0b111]),
        opens(&[0b00, 0b01, 0b10, 0b11]),
    ];
    for (cat, top) in &cases {
        let Topology::Rule(rule) = top else { unreachable!() };
        let proper = Topology::Rule(rule.proper("proper"));
        for t in [top, &proper] {
            let eq = HomRelation::trivial(cat);
            for f in cat.morphism_ids() {
                for mono in [false, true] {
                    let auto = sectional_number(cat, t, &eq, f, opts(mono, Strategy::Auto)).unwrap();
                    let sieves = sectional_number(cat, t, &eq, f, opts(mono, Strategy::Sieves)).unwrap();
                    assert_eq!(auto.value, sieves.value, "{} mono={mono}", cat.name(f));
                    let rep = report(cat, t, f, mono, &auto);
                    verify(cat, t, &eq, &rep, LIMIT).unwrap();
                    if let Some(family) = oracle(cat, t, &eq, f, mono) {
                        assert_eq!(value_of(&family), auto.value);
                        assert_eq!(sieves.family(), family);
                    }
                }
            }
        }
    }
}

#[test]
fn designated_route_is_used_on_rules() {
    let (cat, top) = subsets(3);
    let f = cat.find_morphism("f7_7_0").unwrap();
    let out = sec(&cat, &top, f).unwrap();
    assert_eq!(out.route, Route::Designated);
    assert_eq!(out.value, ExtNat::Infinite);
    assert!(matches!(
        out.certificate,
        Certificate::Exhausted {
            obstruction: Obstruction::Uncovered { .. },
            ..
        }
    ));
    // a constant map onto the 3-point set has sections only over points
    let Topology::Rule(rule) = &top else { unreachable!() };
    let proper = Topology::Rule(rule.proper("proper"));
    let id = cat.identity(cat.find_object("111").unwrap());
    assert_eq!(sec(&cat, &top, id).unwrap().value, ExtNat::Finite(1));
    assert_eq!(sec(&cat, &proper, id).unwrap().value, ExtNat::Finite(2));
}

#[test]
fn projective_objects_in_finite_sets() {
    let (cat, top) = subsets(2);
    for o in cat.object_ids() {
        assert!(is_projective(&cat, o));
    }
    for m in cat.object_ids() {
        let out = sigma_proj(&cat, &top, m, &Projectivity::Derived, SearchOptions::default()).unwrap();
        assert_eq!(out.value(), ExtNat::Finite(1));
    }
    let none = Projectivity::Supplied(vec![false; cat.num_objects()]);
    let m = cat.find_object("11").unwrap();
    assert_eq!(
        sigma_proj(&cat, &top, m, &none, SearchOptions::default())
            .unwrap()
            .value(),
        ExtNat::Infinite
    );
}

#[test]
fn non_projective_object() {
    // B receives an epi from A that has no section
    let mut b = CategoryBuilder::new();
    let a = b.object("A");
    let bo = b.object("B");
    b.morphism("e", a, bo);
    let cat = b.build().unwrap();
    let e = cat.find_morphism("e").unwrap();
    assert!(cat.is_epimorphism(e));
    assert!(is_projective(&cat, a));
    assert!(!is_projective(&cat, bo));
    let out = sigma_proj(
        &cat,
        &Topology::Trivial,
        bo,
        &Projectivity::Derived,
        SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(out.value(), ExtNat::Infinite);
}

#[test]
fn ls_category_checks() {
    // nonempty subsets: a one-point set is weakly initial
    let (cat, top) = subsets_among((1..4).collect());
    let point = cat.find_object("1").unwrap();
    let y = cat.find_object("11").unwrap();
    let total = HomRelation::total(&cat);
    let out = ls_category(&cat, &top, &total, point, y, SearchOptions::default()).unwrap();
    assert!(out.agree);
    assert_eq!(out.value, ExtNat::Finite(1));
    let d = ls_category(&cat, &Topology::Discrete, &total, point, y, SearchOptions::default()).unwrap();
    assert_eq!(d.value, ExtNat::Finite(1));
    // two points of a 2-element set are unrelated under equality
    assert!(matches!(
        ls_category(
            &cat,
            &top,
            &HomRelation::trivial(&cat),
            point,
            y,
            SearchOptions::default()
        ),
        Err(SectionalError::NotRConnected { .. })
    ));

    // with the empty set present, only the empty set is weakly initial
    let (cat, top) = subsets(2);
    let empty = cat.find_object("0").unwrap();
    let y = cat.find_object("11").unwrap();
    assert!(matches!(
        ls_category(
            &cat,
            &top,
            &HomRelation::total(&cat),
            cat.find_object("1").unwrap(),
            y,
            SearchOptions::default()
        ),
        Err(SectionalError::NotWeakInitial(_))
    ));
    let out = ls_category(
        &cat,
        &top,
        &HomRelation::trivial(&cat),
        empty,
        y,
        SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(out.value, ExtNat::Infinite);

    let arrow = FinCat::walking_arrow();
    assert!(matches!(
        ls_category(
            &arrow,
            &Topology::Trivial,
            &HomRelation::trivial(&arrow),
            Obj(1),
            Obj(0),
            SearchOptions::default()
        ),
        Err(SectionalError::NotWeakInitial(_))
    ));
    let mut b = CategoryBuilder::new();
    let i = b.object("I");
    b.object("Y");
    let lone = b.build().unwrap();
    assert!(matches!(
        ls_category(
            &lone,
            &Topology::Trivial,
            &HomRelation::trivial(&lone),
            i,
            Obj(1),
            SearchOptions::default()
        ),
        Err(SectionalError::NotWeakInitial(_))
    ));
}

#[test]
fn sieve_characterization_examples() {
    let cat = FinCat::walking_arrow();
    let b = cat.find_object("B").unwrap();
    let id_b = cat.identity(b);
    let u = cat.find_morphism("u").unwrap();
    assert!(sieve_characterization(&cat, &Topology::Trivial, id_b, 1, LIMIT).unwrap());
    assert!(!sieve_characterization(&cat, &Topology::Trivial, u, 2, LIMIT).unwrap());
    assert!(sieve_characterization(&cat, &Topology::Discrete, u, 1, LIMIT).unwrap());
    assert_eq!(generate_sieve(&cat, b, &[id_b]).unwrap(), sieves::Sieve::full(&cat, b));
}

#[test]
fn tampered_certificates_are_rejected() {
    let (cat, top) = subsets(2);
    let eq = HomRelation::trivial(&cat);
    let f = cat.find_morphism("f3_3_1").unwrap();
    let out = sec(&cat, &top, f).unwrap();
    let good = report(&cat, &top, f, false, &out);
    verify(&cat, &top, &eq, &good, LIMIT).unwrap();

    let mut wrong_value = good.clone();
    wrong_value.value = ExtNat::Finite(7);
    assert!(verify(&cat, &top, &eq, &wrong_value, LIMIT).is_err());

    if let CertificateView::Cover { family, .. } = &good.certificate {
        let mut broken = good.clone();
        let mut fam = family.clone();
        fam.truncate(fam.len().saturating_sub(1));
        broken.value = ExtNat::Finite(fam.len());
        broken.certificate = CertificateView::Cover {
            sieve: vec![],
            family: fam,
        };
        assert!(verify(&cat, &top, &eq, &broken, LIMIT).is_err());
    }

    let fake = SecReport {
        value: ExtNat::Infinite,
        certificate: CertificateView::Exhausted {
            candidates: vec![],
            obstruction: ObstructionView::NoCandidates,
        },
        ..good
    };
    assert!(verify(&cat, &top, &eq, &fake, LIMIT).is_err());
}

#[test]
fn extnat_serde() {
    assert_eq!(serde_json::to_string(&ExtNat::Infinite).unwrap(), "\"infinity\"");
    assert_eq!(serde_json::to_string(&ExtNat::Finite(3)).unwrap(), "3");
    let back: ExtNat = serde_json::from_str("\"infinity\"").unwrap();
    assert_eq!(back, ExtNat::Infinite);
    assert!(ExtNat::Finite(usize::MAX) < ExtNat::Infinite);
    assert!(serde_json::from_str::<ExtNat>("\"lots\"").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn set_cover_matches_brute_force(sets in prop::collection::vec(0u16..256, 0..9), universe in 0usize..8) {
        let bits: Vec<FixedBitSet> = sets
            .iter()
            .map(|&s| {
                let mut b = FixedBitSet::with_capacity(universe);
                for e in 0..universe {
                    if s >> e & 1 == 1 {
                        b.insert(e);
                    }
                }
                b
            })
            .collect();
        let full = (1u16 << universe) - 1;
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << sets.len() {
            let idx: Vec<usize> = (0..sets.len()).filter(|i| mask >> i & 1 == 1).collect();
            let union = idx.iter().fold(0u16, |acc, &i| acc | (sets[i] & full));
            if union == full && best.as_ref().is_none_or(|b| (idx.len(), &idx) < (b.len(), b)) {
                best = Some(idx);
            }
        }
        prop_assert_eq!(min_set_cover(universe, &bits), best);
    }

    #[test]
    fn engine_matches_definition(seed in any::<u64>()) {
        let (cat, top, rel, _) = random_setup(seed);
        for f in cat.morphism_ids() {
            for mono in [false, true] {
                let Some(expected) = oracle(&cat, &top, &rel, f, mono) else { continue };
                for strategy in [Strategy::Auto, Strategy::Sieves, Strategy::Families { maximal_only: false }] {
                    let out = sectional_number(&cat, &top, &rel, f, opts(mono, strategy)).unwrap();
                    prop_assert_eq!(out.value, value_of(&expected));
                    if strategy != Strategy::Auto {
                        prop_assert_eq!(out.family(), expected.clone());
                    }
                }
            }
        }
    }

    #[test]
    fn certificates_replay(seed in any::<u64>()) {
        let (cat, top, rel, _) = random_setup(seed);
        for f in cat.morphism_ids() {
            for mono in [false, true] {
                for strategy in [Strategy::Auto, Strategy::Families { maximal_only: false }] {
                    let out = sectional_number(&cat, &top, &rel, f, opts(mono, strategy)).unwrap();
                    let rep = report(&cat, &top, f, mono, &out);
                    prop_assert!(verify(&cat, &top, &rel, &rep, LIMIT).is_ok(), "{:?}", rep);
                    let json = serde_json::to_string(&rep).unwrap();
                    let back: SecReport = serde_json::from_str(&json).unwrap();
                    prop_assert_eq!(back, rep);
                }
            }
        }
    }

    #[test]
    fn inequality_chain(seed in any::<u64>()) {
        let (cat, top, rel, _) = random_setup(seed);
        let eq = HomRelation::trivial(&cat);
        for f in cat.morphism_ids() {
            let r_s = r_sec(&cat, &top, &rel, f).unwrap().value;
            let r_m = r_msec(&cat, &top, &rel, f).unwrap().value;
            let s = r_sec(&cat, &top, &eq, f).unwrap().value;
            let m = r_msec(&cat, &top, &eq, f).unwrap().value;
            prop_assert!(r_s <= r_m.min(s) && r_m.min(s) <= m);
        }
    }

    #[test]
    fn finer_topology_lowers_the_number(seed in any::<u64>()) {
        let (cat, top, rel, mut rng) = random_setup(seed);
        let Topology::Extensional(ext) = &top else { unreachable!() };
        let coarse = Topology::Extensional(random_coarsening(&cat, ext, &mut rng));
        for f in cat.morphism_ids() {
            for mono in [false, true] {
                let fine = sectional_number(&cat, &top, &rel, f, opts(mono, Strategy::Auto)).unwrap().value;
                let rough = sectional_number(&cat, &coarse, &rel, f, opts(mono, Strategy::Auto)).unwrap().value;
                prop_assert!(fine <= rough);
            }
        }
    }

    #[test]
    fn subobject_form_matches_mono_number(seed in any::<u64>()) {
        let (cat, top, _, mut rng) = random_setup(seed);
        let rel = if seed % 2 == 0 { HomRelation::trivial(&cat) } else { random_congruence(&cat, &mut rng) };
        for f in cat.morphism_ids() {
            let direct = r_msec(&cat, &top, &rel, f).unwrap().value;
            prop_assert_eq!(msec_via_subobjects(&cat, &top, &rel, f, LIMIT).unwrap(), direct);
        }
    }

    #[test]
    fn generated_sieve_form(seed in any::<u64>()) {
        let (cat, top, _, _) = random_setup(seed);
        for f in cat.morphism_ids() {
            let s = sec(&cat, &top, f).unwrap().value;
            for m in 1..=3 {
                let expected = s <= ExtNat::Finite(m);
                prop_assert_eq!(sieve_characterization(&cat, &top, f, m, LIMIT).unwrap(), expected);
            }
        }
    }

    #[test]
    fn invariance_and_related_morphisms(seed in any::<u64>()) {
        let (cat, top, _, mut rng) = random_setup(seed);
        let rel = random_congruence(&cat, &mut rng);
        prop_assert!(rel.preserves_composition());
        let values: Vec<(ExtNat, ExtNat)> = cat
            .morphism_ids()
            .map(|f| (r_sec(&cat, &top, &rel, f).unwrap().value, r_msec(&cat, &top, &rel, f).unwrap().value))
            .collect();
        for f in cat.morphism_ids() {
            for f2 in cat.homs_into(cat.cod(f)).iter().copied() {
                let fibrewise = cat.hom(cat.dom(f), cat.dom(f2)).iter().any(|&psi| rel.related(cat.comp(f2, psi), f));
                if fibrewise {
                    prop_assert!(values[f.0].0 >= values[f2.0].0);
                    prop_assert!(values[f.0].1 >= values[f2.0].1);
                }
                if rel.related(f, f2) {
                    prop_assert_eq!(values[f.0], values[f2.0]);
                }
            }
        }
    }

    #[test]
    fn composite_needs_at_least_as_many(seed in any::<u64>()) {
        let (cat, top, _, _) = random_setup(seed);
        let values: Vec<ExtNat> = cat.morphism_ids().map(|f| sec(&cat, &top, f).unwrap().value).collect();
        for f in cat.morphism_ids() {
            for &g in cat.homs_from(cat.cod(f)) {
                prop_assert!(values[cat.comp(g, f).0] >= values[g.0]);
            }
        }
    }

    #[test]
    fn initial_codomain_gives_one(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cat = random_category(&mut rng, 24).cat;
        let top = Topology::Extensional(random_quasi(&cat, &mut rng));
        let rel = random_partition(&cat, 2, &mut rng);
        for i in cat.initial_objects() {
            for &f in cat.homs_into(i) {
                prop_assert_eq!(r_sec(&cat, &top, &rel, f).unwrap().value, ExtNat::Finite(1));
                prop_assert_eq!(r_msec(&cat, &top, &rel, f).unwrap().value, ExtNat::Finite(1));
            }
        }
    }

    #[test]
    fn maximal_candidates_suffice_when_upward_closed(seed in any::<u64>()) {
        let (cat, top, _, mut rng) = random_setup(seed);
        let up = upward_closure(&cat, &top);
        prop_assert!(up.is_upward_closed(&cat, DEFAULT_SIEVE_LIMIT).unwrap());
        let rel = random_congruence(&cat, &mut rng);
        for f in cat.morphism_ids() {
            let all = sectional_number(&cat, &up, &rel, f, opts(false, Strategy::Auto)).unwrap();
            let restricted = sectional_number(&cat, &up, &rel, f, opts(false, Strategy::Families { maximal_only: true })).unwrap();
            prop_assert_eq!(all.value, restricted.value);
            let rep = report(&cat, &up, f, false, &restricted);
            prop_assert!(verify(&cat, &up, &rel, &rep, LIMIT).is_ok());
        }
    }
}
