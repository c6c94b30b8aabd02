use cubicq::q3struct::{filtration_layers, verify_filtration};
use cubicq::rewrite::{listed_basis, SystemKind};

#[test]
fn layers_have_ranks_3_9_7_1() {
    let ranks: Vec<usize> = filtration_layers().iter().map(|l| l.words.len()).collect();
    assert_eq!(ranks, [3, 9, 7, 1]);
    let mut all: Vec<Vec<i32>> = filtration_layers().into_iter().flat_map(|l| l.words).collect();
    let mut basis = listed_basis(SystemKind::Signed2);
    all.sort();
    basis.sort();
    assert_eq!(all, basis);
}

#[test]
fn filtration_checks_hold() {
    let r = verify_filtration().unwrap();
    for c in &r.checks {
        assert!(c.holds, "{c:?}");
    }
    assert!(r.checks.iter().any(|c| c.name.starts_with("s_1 . top") && c.detail == "coefficient a"));
}
