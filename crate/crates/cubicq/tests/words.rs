use cubicq::words::{
    braid_equal_bfs, free_reduce, handle_identity, handle_reduction_template, BfsLimits, BraidVerdict, HandleSide,
    SignedWord, WordError, WordSymmetry,
};
use proptest::prelude::*;

fn w(letters: &[i32]) -> SignedWord {
    SignedWord::new(letters.to_vec(), 5).unwrap()
}

fn w3(letters: &[i32]) -> SignedWord {
    SignedWord::new(letters.to_vec(), 3).unwrap()
}

#[test]
fn free_reduction_examples() {
    assert_eq!(free_reduce(&w(&[1, -1])).letters(), &[] as &[i32]);
    assert_eq!(free_reduce(&w(&[2, 1, -1, 2])).letters(), &[2, 2]);
    assert_eq!(free_reduce(&w(&[1, 2, -2, -1, 3])).letters(), &[3]);
}

#[test]
fn symmetry_examples() {
    assert_eq!(w(&[1, -2]).apply_symmetry(WordSymmetry::Mirror).unwrap().letters(), &[-1, 2]);
    assert_eq!(w(&[1, 2]).apply_symmetry(WordSymmetry::InverseRev).unwrap().letters(), &[-2, -1]);
    assert_eq!(w(&[1, 2, 1]).apply_symmetry(WordSymmetry::Shift(1)).unwrap().letters(), &[2, 3, 2]);
    assert!(matches!(
        w3(&[1, 2]).apply_symmetry(WordSymmetry::Shift(1)),
        Err(WordError::OutOfRange { .. })
    ));
}

#[test]
fn parsing_formats() {
    assert_eq!(SignedWord::parse("1 2 -1", Some(3)).unwrap().letters(), &[1, 2, -1]);
    assert_eq!(SignedWord::parse("1,2,-1", Some(3)).unwrap().letters(), &[1, 2, -1]);
    assert_eq!(SignedWord::parse("1 2 1'", Some(3)).unwrap().letters(), &[1, 2, -1]);
    assert!(SignedWord::parse("[]", Some(3)).unwrap().is_empty());
    assert!(matches!(SignedWord::parse("1 x", Some(3)), Err(WordError::Parse { pos: 2, .. })));
    assert_eq!(SignedWord::parse("3", Some(3)).unwrap_err(), WordError::OutOfRange { letter: 3, strands: 3 });
}

#[test]
fn oracle_examples() {
    let lim = BfsLimits::default();
    assert_eq!(braid_equal_bfs(&w3(&[1, 2, 1]), &w3(&[2, 1, 2]), lim).unwrap(), BraidVerdict::Equal);
    assert_eq!(braid_equal_bfs(&w3(&[-2, 1, 2]), &w3(&[1, 2, -1]), lim).unwrap(), BraidVerdict::Equal);
    for depth in [0, 5, 50] {
        let l = BfsLimits { depth, ..lim };
        assert_eq!(braid_equal_bfs(&w3(&[1]), &w3(&[2]), l).unwrap(), BraidVerdict::Unknown);
    }
    // Same permutation and writhe yet distinct braids: the oracle must not claim equality.
    let l = BfsLimits { depth: 30, node_budget: 20_000 };
    assert_eq!(braid_equal_bfs(&w3(&[1, 1, 1]), &w3(&[1, 2, 2]), l).unwrap(), BraidVerdict::Unknown);
}

#[test]
fn handle_identity_words() {
    let (l, r) = handle_identity(2, HandleSide::A).unwrap();
    assert_eq!((l.letters(), r.letters()), (&[-2, 1, 2][..], &[1, 2, -1][..]));
    let (l, r) = handle_identity(3, HandleSide::A).unwrap();
    assert_eq!(l.letters(), &[-3, -2, 1, -2, 3]);
    assert_eq!(r.letters(), &[2, 1, -3, 2, -3, -1, -2]);
    let (l, r) = handle_identity(2, HandleSide::B).unwrap();
    assert_eq!((l.letters(), r.letters()), (&[2, -1, -2][..], &[-1, -2, 1][..]));
    assert_eq!(handle_identity(1, HandleSide::A).unwrap_err(), WordError::TooFewStrands);
}

#[test]
fn handle_identities_hold_in_the_braid_group() {
    for n in 2..=4 {
        for side in [HandleSide::A, HandleSide::B] {
            let (l, r) = handle_identity(n, side).unwrap();
            let v = braid_equal_bfs(&l, &r, BfsLimits::default()).unwrap();
            assert_eq!(v, BraidVerdict::Equal, "n = {n}, side {side:?}");
        }
    }
}

#[test]
fn handle_reduction_template_instances() {
    let cases: Vec<(usize, Vec<Vec<i32>>)> =
        vec![(3, vec![vec![1]]), (3, vec![vec![1], vec![1, 1]]), (4, vec![vec![1, 2], vec![-1]])];
    for (n, parts) in cases {
        let (h, r) = handle_reduction_template(n, &parts).unwrap();
        let v = braid_equal_bfs(&h, &r, BfsLimits::default()).unwrap();
        assert_eq!(v, BraidVerdict::Equal, "n = {n}, parts {parts:?}");
    }
}

fn arb_word() -> impl Strategy<Value = SignedWord> {
    prop::collection::vec(prop_oneof![-4i32..=-1, 1i32..=4], 0..12)
        .prop_map(|l| SignedWord::new(l, 5).unwrap())
}

proptest! {
    #[test]
    fn symmetries_are_commuting_involutions(x in arb_word()) {
        let m = x.apply_symmetry(WordSymmetry::Mirror).unwrap();
        let i = x.apply_symmetry(WordSymmetry::InverseRev).unwrap();
        prop_assert_eq!(m.apply_symmetry(WordSymmetry::Mirror).unwrap(), x.clone());
        prop_assert_eq!(i.apply_symmetry(WordSymmetry::InverseRev).unwrap(), x.clone());
        prop_assert_eq!(m.apply_symmetry(WordSymmetry::InverseRev).unwrap(), i.apply_symmetry(WordSymmetry::Mirror).unwrap());
    }

    #[test]
    fn free_reduction_is_idempotent(x in arb_word()) {
        let r = free_reduce(&x);
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn oracle_is_sound(x in arb_word(), y in arb_word()) {
        let lim = BfsLimits { depth: 8, node_budget: 2_000 };
        if braid_equal_bfs(&x, &y, lim).unwrap() == BraidVerdict::Equal {
            prop_assert_eq!(x.permutation(), y.permutation());
            prop_assert_eq!(x.writhe(), y.writhe());
        }
    }
}
