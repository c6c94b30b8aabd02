use cubicq::freealg::{cubic_relation, defining_relations, AlgElem, AlgSymmetry};
use cubicq::ring::{named::*, LaurentPoly};
use proptest::prelude::*;

fn lp(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

#[test]
fn generator_times_inverse_is_one() {
    let x = AlgElem::word(&[1], 3) * AlgElem::word(&[-1], 3);
    assert_eq!(x, AlgElem::one(3));
}

#[test]
fn scalars_multiply() {
    let x = AlgElem::term(a(), &[1], 3) * AlgElem::term(b(), &[2], 3);
    assert_eq!(x, AlgElem::term(a() * b(), &[1, 2], 3));
}

#[test]
fn relation_one_coefficients() {
    let (r1, _) = defining_relations();
    assert_eq!(r1.num_terms(), 12);
    assert_eq!(r1.coeff(&[-1, 2, 1]), LaurentPoly::one());
    assert_eq!(r1.coeff(&[1, 2, -1]), lp("-1"));
    assert_eq!(r1.coeff(&[-1, -2, 1]), lp("-a^2"));
    assert_eq!(r1.coeff(&[2, 1]), lp("-a^-1"));
}

#[test]
fn relation_two_coefficients() {
    let (_, r2) = defining_relations();
    assert_eq!(r2.num_terms(), 12);
    assert_eq!(r2.coeff(&[2, 1, 1, 2]), lp("-a"));
    assert_eq!(r2.coeff(&[1, 2, 1, 1, 2]), LaurentPoly::one());
    assert_eq!(r2.coeff(&[1]), lp("a^4"));
}

#[test]
fn relation_times_generator_matches_termwise_concatenation() {
    let (r1, _) = defining_relations();
    let prod = &r1 * &AlgElem::word(&[2], 3);
    // Concatenate each word with s_2 by hand and cancel a trailing inverse.
    let mut expected = AlgElem::zero(3);
    for (w, c) in r1.terms() {
        let mut word = w.clone();
        if word.last() == Some(&-2) {
            word.pop();
        } else {
            word.push(2);
        }
        expected.add_term(word, c.clone());
    }
    assert_eq!(prod, expected);
    assert_eq!(prod.num_terms(), 12);
}

#[test]
fn cubic_expansion() {
    let expected = AlgElem::word(&[1, 1, 1], 3) - AlgElem::term(u(), &[1, 1], 3) + AlgElem::term(v(), &[1], 3)
        - AlgElem::scalar(w(), 3);
    assert_eq!(cubic_relation(1, 3), expected);
}

#[test]
fn symmetry_examples() {
    let x = AlgElem::term(a(), &[1], 3);
    assert_eq!(x.apply_symmetry(AlgSymmetry::Phi), AlgElem::term(lp("a^-1"), &[-1], 3));
    assert_eq!(AlgElem::word(&[1, 2], 3).apply_symmetry(AlgSymmetry::PhiPsi), AlgElem::word(&[2, 1], 3));
    for g in [1, 2, -1, -2] {
        let s = AlgElem::word(&[g], 3);
        assert_eq!(s.apply_symmetry(AlgSymmetry::PhiPsi), s);
    }
}

#[test]
fn json_round_trip() {
    let (r1, _) = defining_relations();
    let s = serde_json::to_string(&r1.to_json()).unwrap();
    assert_eq!(AlgElem::parse_json(&s).unwrap(), r1);
    let bare = r#"[{"coeff":"2*a","word":[1,-2]},{"coeff":"1","word":[]}]"#;
    let x = AlgElem::parse_json(bare).unwrap();
    assert_eq!(x, AlgElem::term(lp("2*a"), &[1, -2], 3) + AlgElem::one(3));
}

fn arb_elem() -> impl Strategy<Value = AlgElem> {
    let word = prop::collection::vec(prop_oneof![Just(1), Just(2), Just(-1), Just(-2)], 0..4);
    let coeff = (-2i64..=2, -1i32..=1, -1i32..=1, -1i32..=1).prop_map(|(k, x, y, z)| LaurentPoly::monomial(k, [x, y, z]));
    prop::collection::vec((coeff, word), 0..4).prop_map(|ts| {
        ts.into_iter().fold(AlgElem::zero(3), |acc, (c, w)| acc + AlgElem::term(c, &w, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associative_and_unital(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
        prop_assert_eq!((&x * &y) * z.clone(), x.clone() * (&y * &z));
        prop_assert_eq!(&x * &AlgElem::one(3), x.clone());
        prop_assert_eq!(&AlgElem::one(3) * &x, x);
    }

    #[test]
    fn symmetries_respect_products(x in arb_elem(), y in arb_elem()) {
        let xy = &x * &y;
        prop_assert_eq!(xy.apply_symmetry(AlgSymmetry::Phi), x.apply_symmetry(AlgSymmetry::Phi) * y.apply_symmetry(AlgSymmetry::Phi));
        prop_assert_eq!(xy.apply_symmetry(AlgSymmetry::Psi), y.apply_symmetry(AlgSymmetry::Psi) * x.apply_symmetry(AlgSymmetry::Psi));
        prop_assert_eq!(xy.apply_symmetry(AlgSymmetry::PhiPsi), y.apply_symmetry(AlgSymmetry::PhiPsi) * x.apply_symmetry(AlgSymmetry::PhiPsi));
        prop_assert_eq!(x.apply_symmetry(AlgSymmetry::Phi).apply_symmetry(AlgSymmetry::Phi), x);
    }
}
