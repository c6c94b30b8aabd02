use cubicq::a4tilde::{
    a4_apply, a4_consistency_check, augmentation_checks, basis_words, build_action_tables, build_from,
    cardinality_ledger, involution_permutation, resolved_entries, A4Error, Side, TableSource, DIM,
};
use cubicq::expr::ExprError;
use cubicq::ring::{named, LaurentPoly};

fn e(i: usize) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); DIM];
    v[i - 1] = LaurentPoly::one();
    v
}

fn combo(terms: &[(&str, usize)]) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); DIM];
    for (c, i) in terms {
        v[i - 1] = &v[i - 1] + &LaurentPoly::parse(c).unwrap();
    }
    v
}

#[test]
fn basis_words_are_distinct_and_framed() {
    let words = basis_words();
    assert_eq!(words.len(), 25);
    assert_eq!(words[0], [3, -2, 3]);
    assert_eq!(words[24], [1, -2, 1, 3, -2, 3]);
    let distinct: std::collections::BTreeSet<_> = words.iter().collect();
    assert_eq!(distinct.len(), 25);
}

#[test]
fn involution_permutation_is_word_reversal() {
    let words = basis_words();
    let sigma = involution_permutation();
    for i in 1..=DIM {
        let rev: Vec<i32> = words[i - 1].iter().rev().copied().collect();
        match words.iter().position(|w| *w == rev) {
            Some(j) => assert_eq!(sigma[i - 1], j + 1, "e{i}"),
            None => assert!(i == 18 || i == 21, "e{i} reverses outside the basis"),
        }
    }
}

#[test]
fn table_examples() {
    let t = build_action_tables().unwrap();
    assert_eq!(t.left1.apply(&e(3)).unwrap(), e(1));
    assert_eq!(t.left2.apply(&e(4)).unwrap(), combo(&[("a+b+c", 4), ("-a*b-a*c-b*c", 2), ("a*b*c", 6)]));
    assert_eq!(t.involution.apply(&e(1)).unwrap(), e(1));
    assert_eq!(t.involution.apply(&e(2)).unwrap(), e(8));
    assert_eq!(
        t.involution.apply(&e(18)).unwrap(),
        combo(&[("1", 18), ("a", 3), ("-a", 9), ("a^-1", 8), ("-a^-1", 2)])
    );
}

#[test]
fn apply_words_on_both_sides() {
    let a = named::a();
    let ae1: Vec<LaurentPoly> = e(1).iter().map(|c| c * &a).collect();
    assert_eq!(a4_apply(&[2], Side::Left, &e(1)).unwrap(), ae1);
    assert_eq!(a4_apply(&[2], Side::Right, &e(1)).unwrap(), ae1);
    let v = combo(&[("a-b", 3), ("c^2", 17), ("1", 23)]);
    assert_eq!(a4_apply(&[], Side::Left, &v).unwrap(), v);
    assert_eq!(a4_apply(&[1, -1, 2, -2], Side::Left, &v).unwrap(), v);
    assert_eq!(a4_apply(&[-2, 1, 2, -1], Side::Right, &v).unwrap(), {
        let x = a4_apply(&[-2, 1], Side::Right, &v).unwrap();
        a4_apply(&[2, -1], Side::Right, &x).unwrap()
    });
    // (s_1 v) s_2 = s_1 (v s_2)
    let l = a4_apply(&[2], Side::Right, &a4_apply(&[1], Side::Left, &v).unwrap()).unwrap();
    let r = a4_apply(&[1], Side::Left, &a4_apply(&[2], Side::Right, &v).unwrap()).unwrap();
    assert_eq!(l, r);
    assert!(matches!(a4_apply(&[3], Side::Left, &v), Err(A4Error::Letter(3))));
    assert!(matches!(a4_apply(&[1], Side::Left, &v[..3]), Err(A4Error::Length(3))));
}

#[test]
fn consistency_holds() {
    let t = build_action_tables().unwrap();
    let r = a4_consistency_check(&t).unwrap();
    for c in &r.checks {
        assert!(c.holds, "{c:?}");
    }
    // A cubic operator has determinant a^i b^j c^k with i + j + k the dimension.
    for d in [&r.det_left1, &r.det_left2] {
        let p = LaurentPoly::parse(d).unwrap();
        let (exps, coeff) = p.terms().next().unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(coeff.to_string(), "1");
        assert_eq!(exps.iter().sum::<i32>(), 25);
    }
    for c in augmentation_checks(&t).unwrap() {
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn broken_table_fails_consistency() {
    let src = TableSource::builtin().unwrap();
    let mut entries = src.entries.clone();
    for (name, body) in entries.iter_mut() {
        if name == "l1_e5" {
            *body = "a*e5".into();
        }
    }
    let t = build_from(&TableSource { entries }).unwrap();
    assert!(!a4_consistency_check(&t).unwrap().all_hold());
}

#[test]
fn reversed_companion_identity() {
    // The reversed form of the expansion of 21x1-2 expresses f(e21) through w_+ and s_2 w_+.
    let t = build_action_tables().unwrap();
    let named_vectors = resolved_entries().unwrap();
    let a = named::a();
    let fe21 = t.involution.apply(&e(21)).unwrap();
    let two_wplus = t.left2.apply(&e(22)).unwrap();
    let mut rhs = e(22);
    for (i, x) in rhs.iter_mut().enumerate() {
        *x = &*x - &(&two_wplus[i] * &a.pow(-1));
        *x = &*x + &(&a * &named_vectors["w21x1b"][i]);
    }
    let adds = combo(&[("a^-1", 16), ("-a^2", 18), ("a^2", 6), ("-1", 4)]);
    for (x, y) in rhs.iter_mut().zip(adds) {
        *x = &*x + &y;
    }
    assert_eq!(fe21, rhs);
}

#[test]
fn reference_errors_are_reported() {
    let cyclic = TableSource::parse("f_e18 := $p\np := $q\nq := $p\nf_e21 := e21").unwrap();
    match build_from(&cyclic) {
        Err(A4Error::Expr { source: ExprError::Cycle(_), .. }) => {}
        other => panic!("{other:?}"),
    }
    let partial = TableSource::parse("f_e18 := e18\nf_e21 := e21\nl1_e1 := e2").unwrap();
    assert!(matches!(build_from(&partial), Err(A4Error::Missing(n)) if n == "l1_e2"));
    assert!(matches!(TableSource::parse("x := e1\nx := e2"), Err(A4Error::Duplicate(_))));
    assert!(matches!(TableSource::parse("x e1"), Err(A4Error::Format(1))));
}

#[test]
fn cardinalities() {
    let counts: Vec<(usize, usize)> = cardinality_ledger().iter().map(|c| (c.expected, c.counted)).collect();
    assert_eq!(counts, [(20, 20), (136, 136), (201, 201), (219, 219), (239, 239), (264, 264)]);
}
