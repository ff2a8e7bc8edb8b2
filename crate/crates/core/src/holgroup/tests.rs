use super::*;

fn hol(p: u64, n: u32) -> Holomorph {
    Holomorph::from_pn(p, n).unwrap()
}

const SMALL: &[(u64, u32)] = &[(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)];

#[test]
fn orders() {
    assert_eq!(hol(3, 2).order(), 54);
    assert_eq!(hol(2, 5).order(), 512);
    assert_eq!(hol(2, 1).order(), 2);
    assert!(matches!(Holomorph::from_pn(9, 1), Err(Error::NotPrime(9))));
    for &(p, n) in SMALL {
        let g = hol(p, n);
        assert_eq!(g.order(), g.params().group_order());
    }
}

#[test]
fn primitive_roots() {
    assert_eq!(primitive_root_mod_pn(3, 2).unwrap(), 2);
    assert_eq!(primitive_root_mod_pn(3, 1).unwrap(), 2);
    // 2 mod 25 by direct powering: 2^20 ≡ 1 and no proper divisor of 20 works
    let mut x = 1u64;
    let mut first_one = 0;
    for k in 1..=20 {
        x = x * 2 % 25;
        if x == 1 && first_one == 0 {
            first_one = k;
        }
    }
    assert_eq!(first_one, 20);
    assert_eq!(primitive_root_mod_pn(5, 2).unwrap(), 2);
    assert!(primitive_root_mod_pn(2, 3).is_err());
}

#[test]
fn group_law() {
    let g = hol(3, 2);
    let a = Element::new(1, 1);
    let b = Element::new(0, 2);
    assert_eq!(g.conjugate(b, a), Element::new(2, 1));
    assert_eq!(g.inv(a), Element::new(8, 1));
    let h = hol(2, 5);
    assert_eq!(h.element_order(Element::new(0, 31)), 2);
    for x in g.elements() {
        assert_eq!(g.mul(x, g.inv(x)), g.identity());
        for y in [a, b, Element::new(4, 5)] {
            let z = Element::new(7, 8);
            assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        }
    }
}

#[test]
fn element_order_matches_powering() {
    for &(p, n) in SMALL {
        let g = hol(p, n);
        let mut exponent = 1;
        for x in g.elements() {
            let mut k = 1;
            let mut y = x;
            while y != g.identity() {
                y = g.mul(y, x);
                k += 1;
            }
            assert_eq!(g.element_order(x), k, "order of {x} in Hol(C_{p}^{n})");
            exponent = lcm(exponent, k);
        }
        assert_eq!(g.exponent(), exponent);
    }
}

#[test]
fn generators_satisfy_relations() {
    for &(p, n) in SMALL.iter().chain(&[(2, 5), (5, 2)]) {
        let g = hol(p, n);
        let images: Vec<Element> = g.generators().iter().map(|s| s.element).collect();
        for rel in g.relations() {
            let lhs = eval_word(&rel.lhs, &images, &g.identity(), |x, y| g.mul(*x, *y));
            let rhs = eval_word(&rel.rhs, &images, &g.identity(), |x, y| g.mul(*x, *y));
            assert_eq!(lhs, rhs, "{} in Hol(C_{p}^{n})", rel.label);
        }
        for s in g.generators() {
            assert_eq!(g.element_order(s.element), s.order);
        }
        assert_eq!(g.whole().order(), g.subgroup_from_generators(&images).order());
    }
    let g = hol(2, 5);
    assert_eq!(g.generator(GenName::B).unwrap().order, 8);
}

#[test]
fn words_evaluate_to_elements() {
    for &(p, n) in SMALL {
        let g = hol(p, n);
        let images: Vec<Element> = g.generators().iter().map(|s| s.element).collect();
        for x in g.elements() {
            let w = g.word(x);
            assert_eq!(eval_word(&w, &images, &g.identity(), |x, y| g.mul(*x, *y)), x);
        }
    }
}

#[test]
fn class_counts() {
    assert_eq!(
        hol(3, 2).conjugacy_classes(DEFAULT_ENUMERATION_BUDGET).unwrap().len(),
        10
    );
    assert_eq!(
        hol(2, 1).conjugacy_classes(DEFAULT_ENUMERATION_BUDGET).unwrap().len(),
        2
    );
    let big = hol(2, 5).conjugacy_classes(DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert_eq!(big.len(), 47);
    assert_eq!(big.sizes().iter().sum::<u64>(), 512);
    assert!(big.sizes().iter().all(|s| 512 % s == 0));
    assert!(matches!(
        hol(3, 2).conjugacy_classes(10),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn classes_are_conjugation_closed() {
    let g = hol(3, 2);
    let cc = g.conjugacy_classes(DEFAULT_ENUMERATION_BUDGET).unwrap();
    for x in g.elements() {
        for y in g.elements() {
            assert_eq!(cc.class_index(&g, x), cc.class_index(&g, g.conjugate(y, x)));
        }
    }
    let reps = cc.representatives();
    assert!(reps.windows(2).all(|w| w[0] < w[1]));
    for c in &cc.classes {
        assert_eq!(c.representative, c.members[0]);
    }
}

#[test]
fn centers() {
    let z = hol(2, 5).center();
    assert_eq!(z.members(), &[Element::new(0, 1), Element::new(16, 1)]);
    assert_eq!(hol(3, 2).center().order(), 1);
    assert_eq!(hol(2, 1).center().order(), 2);
}

#[test]
fn unique_minimal_normal_subgroup() {
    for &(p, n) in SMALL.iter().chain(&[(2, 5), (5, 2)]) {
        let g = hol(p, n);
        let mins = g.minimal_normal_subgroups(DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(mins.len(), 1, "Hol(C_{p}^{n})");
        assert_eq!(mins[0].order(), p);
        let q = g.modulus();
        let expected = g.subgroup_from_generators(&[Element::new(q / p, 1)]);
        assert_eq!(mins[0], expected);
    }
}

#[test]
fn subgroups_and_cores() {
    let g = hol(3, 2);
    assert_eq!(g.translation_subgroup().order(), 9);
    let aut = g.aut_subgroup();
    assert_eq!(aut.order(), 6);
    assert_eq!(g.subgroup_from_generators(&[g.identity()]).order(), 1);
    assert_eq!(g.core(&aut).order(), 1);
    assert!(g.is_core_free(&aut));
    assert_eq!(g.core(&g.translation_subgroup()), g.translation_subgroup());
    assert_eq!(g.core(&g.whole()), g.whole());
    assert!(g.is_normal(&g.translation_subgroup()));
    assert!(!g.is_normal(&aut));
}

/// Core recomputed as the intersection of all conjugates.
fn core_by_conjugates(g: &Holomorph, h: &Subgroup) -> Subgroup {
    let members: Vec<Element> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| g.elements().all(|y| h.contains(g.conjugate(y, x))))
        .collect();
    Subgroup::from_sorted(members, vec![])
}

#[test]
fn subgroup_counts() {
    let count = |p, n| hol(p, n).all_subgroups(100).unwrap().len();
    assert_eq!(count(3, 1), 6);
    assert_eq!(count(2, 1), 2);
    assert_eq!(count(2, 2), 10);
    assert!(matches!(
        hol(5, 2).all_subgroups(100),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn three_generators_suffice_at_small_order() {
    for &(p, n) in &[(2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let g = hol(p, n);
        if g.order() > 60 {
            continue;
        }
        let three = g.all_subgroups_with_max_gens(100, 3).unwrap();
        let four = g.all_subgroups_with_max_gens(100, 4).unwrap();
        assert_eq!(three, four, "Hol(C_{p}^{n})");
        for h in &three {
            assert_eq!(g.order() % h.order(), 0);
            assert_eq!(g.core(h), core_by_conjugates(&g, h));
            for &x in h.members() {
                for &y in h.members() {
                    assert!(h.contains(g.mul(x, g.inv(y))));
                }
            }
        }
    }
}

#[test]
fn serde_shapes() {
    let e = Element::new(3, 5);
    assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"i":3,"u":5}"#);
    let g = hol(3, 1);
    let h = g.translation_subgroup();
    let text = serde_json::to_string(&h).unwrap();
    assert_eq!(text, r#"[{"i":0,"u":1},{"i":1,"u":1},{"i":2,"u":1}]"#);
    let back: Subgroup = serde_json::from_str(&text).unwrap();
    assert_eq!(back, h);
}
