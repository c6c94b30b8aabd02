use cubicq::expr::eval_elem;
use cubicq::freealg::{defining_relations, AlgElem};
use cubicq::hecke::{
    fiber_check, k_basis, triple_embed, triple_rank_mod_p, verify_ternary_relations, HeckeElem, Permutation,
    TripleElem,
};
use cubicq::ring::{named, random_points_mod, LaurentPoly, DEFAULT_PRIME};

fn xy() -> (LaurentPoly, LaurentPoly) {
    (named::a(), named::b())
}

fn h(word: &[i32], n: usize) -> HeckeElem {
    let (x, y) = xy();
    HeckeElem::eval_word(word, n, x, y).unwrap()
}

fn basis(images: &[u8]) -> HeckeElem {
    let (x, y) = xy();
    HeckeElem::basis(Permutation::from_images(images.to_vec()).unwrap(), x, y)
}

#[test]
fn word_evaluation_examples() {
    let (x, y) = xy();
    let expected = basis(&[1, 0]).scale(&(&x + &y)).sub(&basis(&[0, 1]).scale(&(&x * &y)));
    assert_eq!(h(&[1, 1], 2), expected);
    assert_eq!(h(&[1, -1], 2), basis(&[0, 1]));
    assert_eq!(h(&[1, 2, 1], 3), h(&[2, 1, 2], 3));
    assert_eq!(h(&[1, 2, 1], 3), basis(&[2, 1, 0]));
}

#[test]
fn generators_satisfy_the_quadratic_relation() {
    let (x, y) = xy();
    for i in 1..4 {
        let s = h(&[i], 4);
        let one = HeckeElem::one(4, x.clone(), y.clone());
        let prod = s.sub(&one.scale(&x)).mul(&s.sub(&one.scale(&y)));
        assert!(prod.is_zero());
    }
}

#[test]
fn multiplication_matches_word_concatenation() {
    let p = h(&[1, -2, 3, 1], 4);
    let q = h(&[2, 2, -1, 3], 4);
    assert_eq!(p.mul(&q), h(&[1, -2, 3, 1, 2, 2, -1, 3], 4));
}

#[test]
fn reduced_words_have_the_coxeter_length() {
    for w in Permutation::all(5) {
        let r = w.reduced_word();
        assert_eq!(r.len(), w.length());
        assert_eq!(h(&r, 5), HeckeElem::basis(w, named::a(), named::b()));
    }
}

#[test]
fn ternary_element_dies_in_every_quadratic_quotient() {
    let t = triple_embed(&cubicq::hecke::ternary_element(3)).unwrap();
    assert!(t.is_zero());
    let t = triple_embed(&eval_elem("[1] - a", 3).unwrap()).unwrap();
    assert!(!t.is_zero());
    assert!(t.components[0].q_value(&named::a()).is_zero());
}

#[test]
fn second_relation_in_the_bc_component() {
    let (_, r2) = defining_relations();
    let t = triple_embed(&r2).unwrap();
    let (a, b, c) = (named::a(), named::b(), named::c());
    let factor = &(&(&a - &c) * &(&a - &b)) * &(&a.pow(2) + &(&b * &c));
    let s1 = HeckeElem::eval_word(&[1], 3, b.clone(), c.clone()).unwrap();
    let s2 = HeckeElem::eval_word(&[2], 3, b, c).unwrap();
    let expected = s1.sub(&s2).scale(&factor);
    assert_eq!(t.components[2], expected);
    assert!(t.components[0].is_zero() && t.components[1].is_zero());
}

#[test]
fn fiber_conditions() {
    for w in [vec![1, 2, -1], vec![2, 2, 1, -2, -1], vec![]] {
        let t = triple_embed(&AlgElem::word(&w, 3)).unwrap();
        assert!(fiber_check(&t));
    }
    let (a, b, c) = (named::a(), named::b(), named::c());
    let e = |x: &LaurentPoly, y: &LaurentPoly| HeckeElem::one(3, x.clone(), y.clone());
    let bad = TripleElem { components: [e(&a, &b), e(&a, &c), e(&b, &c).scale(&LaurentPoly::constant(2))] };
    assert!(!fiber_check(&bad));
    let zero = TripleElem {
        components: [
            HeckeElem::zero(3, a.clone(), b.clone()),
            HeckeElem::zero(3, a.clone(), c.clone()),
            HeckeElem::zero(3, b.clone(), c.clone()),
        ],
    };
    assert!(fiber_check(&zero));
}

#[test]
fn basis_cardinalities() {
    assert_eq!(k_basis(1).unwrap().len(), 1);
    let b2: Vec<Vec<i32>> = k_basis(2).unwrap().iter().map(|w| w.letters().to_vec()).collect();
    assert_eq!(b2, vec![vec![], vec![1], vec![-1]]);
    for n in 2..=6usize {
        let fact: usize = (1..=n).product();
        assert_eq!(k_basis(n).unwrap().len(), 3 * (fact - 1), "n = {n}");
    }
    assert!(k_basis(0).is_err() && k_basis(7).is_err());
}

#[test]
fn basis_images_span_the_fiber_subspace() {
    for pt in random_points_mod(7, 2, DEFAULT_PRIME) {
        for n in 2..=5 {
            let r = triple_rank_mod_p(n, pt, DEFAULT_PRIME).unwrap();
            assert_eq!(r.fiber_constraint_rank, 3);
            assert!(r.is_full(), "{r:?}");
        }
    }
}

#[test]
fn ternary_relations_vanish() {
    let checks = verify_ternary_relations().unwrap();
    assert_eq!(checks.len(), 8 * 3);
    for c in &checks {
        assert!(c.vanishes, "{c:?}");
    }
}
