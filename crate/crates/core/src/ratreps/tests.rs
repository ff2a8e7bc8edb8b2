use super::*;
use crate::holgroup::DEFAULT_ENUMERATION_BUDGET;

fn table(p: u64, n: u32) -> CharacterTable {
    let g = Holomorph::from_pn(p, n).unwrap();
    CharacterTable::compute(&g, DEFAULT_ENUMERATION_BUDGET).unwrap()
}

fn triples(components: &[WedderburnComponent]) -> Vec<(u64, u64, u64, u64)> {
    components
        .iter()
        .map(|c| (c.n, c.conductor, c.paper_label, c.multiplicity))
        .collect()
}

#[test]
fn class_counts() {
    assert_eq!(galois_classes(&table(3, 2)).unwrap().len(), 7);
    assert_eq!(galois_classes(&table(2, 5)).unwrap().len(), 26);
    assert_eq!(galois_classes(&table(2, 1)).unwrap().len(), 2);
    assert_eq!(galois_classes(&table(2, 3)).unwrap().len(), 11);
    assert_eq!(rational_count_formula(3, 2).unwrap(), 7);
    assert_eq!(rational_count_formula(2, 5).unwrap(), 26);
    assert_eq!(rational_count_formula(3, 1).unwrap(), 3);
    assert!(rational_count_formula(2, 2).is_err());
    for &(p, n) in &[(3, 1), (3, 3), (5, 1), (5, 2), (7, 1), (2, 3), (2, 4)] {
        let classes = galois_classes(&table(p, n)).unwrap();
        assert_eq!(
            classes.len() as u64,
            rational_count_formula(p, n).unwrap(),
            "Hol(C_{p}^{n})"
        );
    }
}

#[test]
fn psi_is_a_sum_of_conjugates() {
    let t = table(3, 2);
    for class in galois_classes(&t).unwrap() {
        assert_eq!(class.degree, class.galois_order() * class.complex_degree);
        for &m in &class.members {
            assert_eq!(t.irreps()[m].params.omega_order(), class.paper_label);
            assert_eq!(t.irreps()[m].degree, class.complex_degree);
        }
        // Galois closed: every conjugate of a member is a member
        let e = t.exponent();
        for k in units_mod(e) {
            for &m in &class.members {
                assert!(class.members.contains(&t.galois_image(m, k).unwrap()));
            }
        }
    }
}

#[test]
fn wedderburn_hol_c9() {
    let w = wedderburn(&galois_classes(&table(3, 2)).unwrap());
    assert_eq!(
        triples(&w),
        vec![
            (1, 1, 1, 1),
            (1, 1, 2, 1),
            (1, 3, 3, 1),
            (1, 3, 6, 1),
            (2, 1, 1, 1),
            (2, 3, 3, 1),
            (6, 1, 1, 1)
        ]
    );
    assert_eq!(w.iter().map(WedderburnComponent::dimension).sum::<u64>(), 54);
    assert_eq!(
        render_wedderburn(&w),
        "Q ⊕ Q ⊕ Q(ζ_3) ⊕ Q(ζ_6) ⊕ M_2(Q) ⊕ M_2(Q(ζ_3)) ⊕ M_6(Q)"
    );
}

#[test]
fn wedderburn_hol_c3_and_c32() {
    let w = wedderburn(&galois_classes(&table(3, 1)).unwrap());
    assert_eq!(render_wedderburn(&w), "Q ⊕ Q ⊕ M_2(Q)");
    let w = wedderburn(&galois_classes(&table(2, 5)).unwrap());
    assert_eq!(
        triples(&w),
        vec![
            (1, 1, 1, 4),
            (1, 1, 2, 4),
            (1, 4, 4, 4),
            (1, 8, 8, 4),
            (2, 1, 1, 1),
            (2, 1, 2, 1),
            (2, 4, 4, 1),
            (2, 8, 8, 1),
            (4, 1, 1, 1),
            (4, 1, 2, 1),
            (4, 4, 4, 1),
            (8, 1, 1, 1),
            (8, 1, 2, 1),
            (16, 1, 1, 1)
        ]
    );
    assert_eq!(w.iter().map(WedderburnComponent::dimension).sum::<u64>(), 512);
}

#[test]
fn faithful_models() {
    for &(p, n) in &[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let t = table(p, n);
        let classes = galois_classes(&t).unwrap();
        let model = faithful_rational_model(t.group());
        assert_eq!(model.dim() as u64, euler_phi(p.pow(n)));
        model.check_relations(t.group()).unwrap();
        let f = faithful_class(&classes).unwrap();
        let traces = model.trace_function(t.group(), t.classes());
        let psi: Vec<Rational> = f.psi.iter().map(|&v| Rational::from_integer(v.into())).collect();
        assert_eq!(traces, psi);
    }
    let t = table(2, 1);
    let model = faithful_rational_model(t.group());
    assert_eq!(
        model.images()[0],
        Matrix::from_rows(vec![vec![Rational::from_integer((-1).into())]])
    );
}

#[test]
fn schur_report_hol_c9() {
    let t = table(3, 2);
    let classes = galois_classes(&t).unwrap();
    let report = schur_index_report(&t, &classes).unwrap();
    for (class, status) in classes.iter().zip(&report) {
        let expected = if class.complex_degree == 1 || class.is_faithful() {
            SchurStatus::Certified
        } else {
            SchurStatus::Asserted
        };
        assert_eq!(*status, expected);
    }
    let asserted: Vec<_> = classes
        .iter()
        .zip(&report)
        .filter(|(_, s)| **s == SchurStatus::Asserted)
        .map(|(c, _)| (c.complex_degree, c.field_conductor))
        .collect();
    assert_eq!(asserted, vec![(2, 1), (2, 3)]);
}

#[test]
fn cyclic_lemma() {
    let reps = cyclic_rational_reps(3, 2);
    assert_eq!(reps.len(), 3);
    assert_eq!(reps[0].image(1), Matrix::identity(1));
    let chars: Vec<Vec<Rational>> = reps.iter().map(CyclicRationalRep::character).collect();
    let int = |v: i64| Rational::from_integer(v.into());
    let expected: Vec<Rational> = (0..9)
        .map(|j| match j {
            0 => int(6),
            3 | 6 => int(-3),
            _ => int(0),
        })
        .collect();
    assert_eq!(chars[2], expected);
    for r in &reps {
        let step = 3u64.pow(r.index);
        let kernel: Vec<u64> = (0..9).filter(|j| j % step == 0).collect();
        assert_eq!(r.kernel(), kernel);
    }
    assert_eq!(reps.iter().map(|r| r.dim()).sum::<usize>(), 9);
    let c8 = cyclic_rational_reps(2, 3);
    assert_eq!(c8[3].character()[4], int(-4));
}
