use fincat_core::random::random_category;
use fincat_core::{CategoryBuilder, CategoryError, CommutativeSquare, FinCat, RawCategory};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn raw(json: &str) -> RawCategory {
    serde_json::from_str(json).unwrap()
}

/// A ⇉ B → C with c∘v = c∘w.
fn parallel_pair() -> FinCat {
    let mut b = CategoryBuilder::new();
    let (a, bb, c) = (b.object("A"), b.object("B"), b.object("C"));
    let v = b.morphism("v", a, bb);
    let w = b.morphism("w", a, bb);
    let cm = b.morphism("c", bb, c);
    let k = b.morphism("k", a, c);
    b.compose(cm, v, k).compose(cm, w, k);
    b.build().unwrap()
}

fn subsets_of_two() -> FinCat {
    let names: Vec<String> = ["0", "1", "2", "12"].iter().map(|s| s.to_string()).collect();
    let sets = [0b00u8, 0b01, 0b10, 0b11];
    FinCat::preorder(&names, |i, j| sets[i] & !sets[j] == 0).unwrap()
}

#[test]
fn walking_arrow_validates_from_json() {
    let cat = FinCat::validate(
        &raw(r#"{"objects":["A","B"],
            "morphisms":[{"name":"id_A","dom":"A","cod":"A"},{"name":"id_B","dom":"B","cod":"B"},
                         {"name":"u","dom":"A","cod":"B"}],
            "identities":{"A":"id_A","B":"id_B"},
            "composition":[["u","id_A","u"],["id_B","u","u"]]}"#),
        512,
    )
    .unwrap();
    let (a, b) = (cat.find_object("A").unwrap(), cat.find_object("B").unwrap());
    let u = cat.find_morphism("u").unwrap();
    assert_eq!(cat.hom(a, b), &[u]);
    assert!(cat.hom(b, a).is_empty());
    assert!(cat.is_monomorphism(u));
    assert_eq!(cat.initial_objects(), vec![a]);
}

#[test]
fn cyclic_two_as_one_object_category() {
    let cat = FinCat::validate(
        &raw(r#"{"objects":["*"],
            "morphisms":[{"name":"1","dom":"*","cod":"*"},{"name":"g","dom":"*","cod":"*"}],
            "identities":{"*":"1"},
            "composition":[["g","g","1"]]}"#),
        512,
    )
    .unwrap();
    assert_eq!(cat.hom(fincat_core::Obj(0), fincat_core::Obj(0)).len(), 2);
    assert!(cat.initial_objects().is_empty());
}

#[test]
fn non_associative_chain_is_rejected() {
    let err = FinCat::validate(
        &raw(r#"{"objects":["A","B","C","D"],
            "morphisms":[{"name":"iA","dom":"A","cod":"A"},{"name":"iB","dom":"B","cod":"B"},
              {"name":"iC","dom":"C","cod":"C"},{"name":"iD","dom":"D","cod":"D"},
              {"name":"f","dom":"A","cod":"B"},{"name":"g","dom":"B","cod":"C"},{"name":"h","dom":"C","cod":"D"},
              {"name":"gf","dom":"A","cod":"C"},{"name":"hg","dom":"B","cod":"D"},
              {"name":"x","dom":"A","cod":"D"},{"name":"y","dom":"A","cod":"D"}],
            "identities":{"A":"iA","B":"iB","C":"iC","D":"iD"},
            "composition":[["g","f","gf"],["h","g","hg"],["h","gf","x"],["hg","f","y"]]}"#),
        512,
    )
    .unwrap_err();
    assert!(matches!(err, CategoryError::NonAssociative { .. }), "{err}");
}

#[test]
fn validation_errors() {
    let missing_id = raw(r#"{"objects":["A"],"morphisms":[{"name":"f","dom":"A","cod":"A"}],
        "identities":{},"composition":[]}"#);
    assert_eq!(
        FinCat::validate(&missing_id, 512).unwrap_err(),
        CategoryError::MissingIdentity("A".into())
    );
    let undefined = raw(r#"{"objects":["A"],"morphisms":[{"name":"1","dom":"A","cod":"A"},
        {"name":"e","dom":"A","cod":"A"}],"identities":{"A":"1"},"composition":[]}"#);
    assert!(matches!(
        FinCat::validate(&undefined, 512).unwrap_err(),
        CategoryError::UndefinedComposite { .. }
    ));
    let bad_cod = raw(r#"{"objects":["A","B"],"morphisms":[{"name":"a","dom":"A","cod":"A"},
        {"name":"b","dom":"B","cod":"B"},{"name":"u","dom":"A","cod":"B"}],
        "identities":{"A":"a","B":"b"},"composition":[["u","a","b"]]}"#);
    assert!(matches!(
        FinCat::validate(&bad_cod, 512).unwrap_err(),
        CategoryError::DomCodMismatch(_)
    ));
    let unknown_key = r#"{"objects":[],"morphisms":[],"identities":{},"composition":[],"extra":1}"#;
    assert!(serde_json::from_str::<RawCategory>(unknown_key).is_err());
    let big = FinCat::cyclic_group(8).to_raw();
    assert_eq!(
        FinCat::validate(&big, 4).unwrap_err(),
        CategoryError::TooLarge { count: 8, limit: 4 }
    );
}

#[test]
fn fold_morphism_is_not_mono() {
    let cat = parallel_pair();
    let c = cat.find_morphism("c").unwrap();
    assert!(!cat.is_monomorphism(c));
    assert!(cat.is_monomorphism(cat.find_morphism("v").unwrap()));
    assert!(cat.is_epimorphism(c));
}

#[test]
fn trivial_category_has_zero_object() {
    let mut b = CategoryBuilder::new();
    let o = b.object("*");
    let cat = b.build().unwrap();
    assert_eq!(cat.initial_objects(), vec![o]);
}

#[test]
fn identity_square_is_weak_pullback() {
    let cat = parallel_pair();
    for f in cat.morphism_ids() {
        let (x, y) = (cat.dom(f), cat.cod(f));
        let sq = CommutativeSquare {
            f,
            phi: cat.identity(y),
            f_prime: f,
            phi_prime: cat.identity(x),
        };
        assert!(cat.is_weak_pullback(&sq).unwrap());
        let found = cat.find_weak_pullbacks(f, cat.identity(y)).unwrap();
        assert!(found.contains(&sq));
    }
}

#[test]
fn intersection_square_in_subsets_of_two() {
    let cat = subsets_of_two();
    let m = |s: &str| cat.find_morphism(s).unwrap();
    let sq = CommutativeSquare {
        f: m("1<=12"),
        phi: m("2<=12"),
        f_prime: m("0<=2"),
        phi_prime: m("0<=1"),
    };
    assert!(cat.is_weak_pullback(&sq).unwrap());
    assert!(cat.is_pullback(&sq).unwrap());
    let found = cat.find_weak_pullbacks(m("1<=12"), m("2<=12")).unwrap();
    assert_eq!(found, vec![sq]);
    assert!(cat.has_all_weak_pullbacks());
}

#[test]
fn parallel_pair_square_is_not_weak_pullback() {
    let cat = parallel_pair();
    let (c, v) = (cat.find_morphism("c").unwrap(), cat.find_morphism("v").unwrap());
    let sq = CommutativeSquare {
        f: c,
        phi: c,
        f_prime: v,
        phi_prime: v,
    };
    let gap = cat.weak_pullback_gap(&sq).unwrap();
    // the cone (1_B, 1_B) needs a morphism B → A
    let id_b = cat.identity(cat.cod(v));
    assert_eq!(gap, Some((id_b, id_b)));
    let bad = CommutativeSquare {
        f: c,
        phi: cat.identity(cat.cod(c)),
        f_prime: v,
        phi_prime: v,
    };
    assert_eq!(cat.is_weak_pullback(&bad), Err(CategoryError::NotCommutative));
}

#[test]
fn cospan_without_weak_pullback() {
    let mut b = CategoryBuilder::new();
    let (a, bb, c) = (b.object("A"), b.object("B"), b.object("C"));
    let f = b.morphism("f", a, c);
    let phi = b.morphism("phi", bb, c);
    let cat = b.build().unwrap();
    assert_eq!(cat.num_morphisms(), 5);
    assert!(cat.find_weak_pullbacks(f, phi).unwrap().is_empty());
    assert!(!cat.has_all_weak_pullbacks());
    assert!(matches!(
        cat.find_weak_pullbacks(f, cat.identity(a)),
        Err(CategoryError::CodMismatch { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validation_is_idempotent(seed in any::<u64>()) {
        let cat = random_category(&mut ChaCha8Rng::seed_from_u64(seed), 24).cat;
        let again = FinCat::validate(&cat.to_raw(), 512).unwrap();
        prop_assert_eq!(&again, &cat);
        prop_assert_eq!(FinCat::validate(&again.to_raw(), 512).unwrap(), again);
    }

    #[test]
    fn identities_are_monos(seed in any::<u64>()) {
        let cat = random_category(&mut ChaCha8Rng::seed_from_u64(seed), 24).cat;
        for o in cat.object_ids() {
            prop_assert!(cat.is_monomorphism(cat.identity(o)));
            prop_assert!(cat.is_isomorphism(cat.identity(o)));
        }
    }

    #[test]
    fn pullbacks_are_weak_pullbacks(seed in any::<u64>()) {
        let cat = random_category(&mut ChaCha8Rng::seed_from_u64(seed), 16).cat;
        for y in cat.object_ids() {
            for &f in cat.homs_into(y) {
                for &phi in cat.homs_into(y) {
                    for apex in cat.object_ids() {
                        for &fp in cat.hom(apex, cat.dom(phi)) {
                            for &pp in cat.hom(apex, cat.dom(f)) {
                                let sq = CommutativeSquare { f, phi, f_prime: fp, phi_prime: pp };
                                if cat.commutes(&sq) && cat.is_pullback(&sq).unwrap() {
                                    prop_assert!(cat.is_weak_pullback(&sq).unwrap());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
