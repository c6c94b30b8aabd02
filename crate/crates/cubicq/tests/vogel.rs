use std::collections::BTreeMap;

use cubicq::hecke::Permutation;
use cubicq::ring::Matrix;
use cubicq::vogel::*;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn qi(p: i64) -> Q {
    q(p, 1)
}

fn e6() -> (Q, Q) {
    (qi(3), qi(-1))
}

/// Composition by connected components on the glued graph of `3n` points.
fn compose_oracle(d1: &BrauerDiagram, d2: &BrauerDiagram) -> (Vec<usize>, u32) {
    let n = d1.n();
    // Nodes: 0..n top of d1, n..2n the glued middle row, 2n..3n bottom of d2.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
    let mut edge = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for p in 0..2 * n {
        let q = d1.partner(p);
        if p < q {
            edge(p, q);
        }
        let q2 = d2.partner(p);
        if p < q2 {
            edge(p + n, q2 + n);
        }
    }
    let mut seen = vec![false; 3 * n];
    let mut partner = vec![usize::MAX; 2 * n];
    let mut loops = 0;
    for start in 0..3 * n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(x) = stack.pop() {
            comp.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let outer: Vec<usize> = comp
            .iter()
            .filter(|&&x| x < n || x >= 2 * n)
            .map(|&x| if x < n { x } else { x - n })
            .collect();
        match outer.as_slice() {
            [] => loops += 1,
            [a, b] => {
                partner[*a] = *b;
                partner[*b] = *a;
            }
            _ => panic!("component with {} outer points", outer.len()),
        }
    }
    (partner, loops)
}

#[test]
fn brauer_examples() {
    let m = q(7, 2);
    let p13 = BrauerDiagram::cup_cap(3, 0, 2);
    let (d, scalar) = brauer_mul(&p13, &p13, &m);
    assert_eq!(d, p13);
    assert_eq!(scalar, m);

    let d = BrauerDiagram::random(4, &mut ChaCha8Rng::seed_from_u64(3));
    assert_eq!(brauer_mul(&BrauerDiagram::identity(4), &d, &m), (d.clone(), Q::one()));
    assert_eq!(brauer_mul(&d, &BrauerDiagram::identity(4), &m), (d, Q::one()));

    let p12 = BrauerDiagram::cup_cap(3, 0, 1);
    let s12 = BrauerDiagram::transposition(3, 0, 1);
    assert_eq!(brauer_mul(&s12, &p12, &m), (p12.clone(), Q::one()));
    assert_eq!(brauer_mul(&p12, &s12, &m), (p12.clone(), Q::one()));
    assert_eq!(p12.to_string(), "{1-2, 3-3', 1'-2'}");
}

#[test]
fn brauer_diagram_validation() {
    assert!(BrauerDiagram::from_partners(vec![1, 0, 3, 2]).is_some());
    assert!(BrauerDiagram::from_partners(vec![1, 0, 2, 3]).is_none());
    assert!(BrauerDiagram::from_partners(vec![1, 2, 0, 3]).is_none());
    assert!(BrauerDiagram::from_partners(vec![1, 0, 3]).is_none());
}

#[test]
fn brauer_composition_matches_component_oracle_and_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=6 {
        for _ in 0..60 {
            let d1 = BrauerDiagram::random(n, &mut rng);
            let d2 = BrauerDiagram::random(n, &mut rng);
            let d3 = BrauerDiagram::random(n, &mut rng);
            let (d12, l12) = d1.compose(&d2);
            let (partner, loops) = compose_oracle(&d1, &d2);
            assert_eq!(d12, BrauerDiagram::from_partners(partner).unwrap());
            assert_eq!(l12, loops);
            let (left, l_left) = d12.compose(&d3);
            let (d23, l23) = d2.compose(&d3);
            let (right, l_right) = d1.compose(&d23);
            assert_eq!(left, right);
            assert_eq!(l12 + l_left, l23 + l_right);
        }
    }
}

#[test]
fn permutation_diagrams_compose_like_permutations() {
    let perms = Permutation::all(4);
    for a in &perms {
        for b in &perms {
            let composite: Vec<u8> = (0..4).map(|k| a.images()[b.images()[k] as usize]).collect();
            let ab = Permutation::from_images(composite).unwrap();
            let (d, loops) = BrauerDiagram::permutation(a).compose(&BrauerDiagram::permutation(b));
            assert_eq!(d, BrauerDiagram::permutation(&ab));
            assert_eq!(loops, 0);
        }
    }
}

#[test]
fn three_dim_model_at_e6() {
    let (a, b) = e6();
    let rep = VogelRep::three_dim(&a, &b);
    assert_eq!(rep.t12.get(1, 1), &q(4, 3));
    assert_eq!(rep.t12.get(1, 2), &q(35, 9));
    let report = verify_vogel_relations(&rep, &a, &b);
    assert!(report.all_hold(), "{:#?}", report.checks);
    assert!(spectrum_check(&rep, &a, &b, [1, 1, 1]).holds);
}

#[test]
fn six_dim_model() {
    for (a, b) in [e6(), (q(5, 2), q(-7, 3))] {
        let rep = VogelRep::six_dim(&a, &b);
        let report = verify_vogel_relations(&rep, &a, &b);
        assert!(report.all_hold(), "{:#?}", report.checks);
        assert!(spectrum_check(&rep, &a, &b, [3, 2, 1]).holds);

        let swapped = VogelRep::six_dim(&b, &a);
        assert!(verify_vogel_relations(&swapped, &a, &b).all_hold());
        assert!(spectrum_check(&swapped, &a, &b, [3, 1, 2]).holds);

        // The correction term has rank one and trace beta - alpha.
        let s1 = &rep.generators[0];
        let id = Matrix::identity(6, &Q::one());
        let p12 = rep.t12.try_sub(&s1.try_add(&id).unwrap().scale(&(&a / qi(2)))).unwrap();
        assert_eq!(p12.rank().unwrap(), 1);
        let trace = (0..6).fold(Q::zero(), |acc, i| acc + p12.get(i, i));
        assert_eq!(trace, &b - &a);
    }
}

#[test]
fn six_dim_model_needs_the_zero_row_on_top() {
    // Reading the five printed rows as the first five rows breaks the relations.
    let (a, b) = e6();
    let rep = VogelRep::six_dim(&a, &b);
    let s1 = &rep.generators[0];
    let id = Matrix::identity(6, &Q::one());
    let base = s1.try_add(&id).unwrap().scale(&(&a / qi(2)));
    let mut p12_rows: Vec<Vec<Q>> = (0..6)
        .map(|i| (0..6).map(|j| rep.t12.get(i, j) - base.get(i, j)).collect())
        .collect();
    let zero_row = p12_rows.remove(0);
    p12_rows.push(zero_row);
    let wrong = VogelRep {
        t12: base.try_add(&Matrix::from_rows(p12_rows).unwrap()).unwrap(),
        ..rep
    };
    assert!(!verify_vogel_relations(&wrong, &a, &b).all_hold());
}

#[test]
fn eight_dim_model() {
    for (a, b) in [e6(), (qi(10), qi(-2)), (q(9, 4), q(-5, 3))] {
        let rep = VogelRep::eight_dim(&a, &b);
        let report = verify_vogel_relations(&rep, &a, &b);
        assert!(report.all_hold(), "{:#?}", report.checks);
        assert!(spectrum_check(&rep, &a, &b, [4, 2, 2]).holds);
    }
}

#[test]
fn eight_dim_model_fails_off_the_parameter_curve() {
    let (a, b) = e6();
    let rep = VogelRep::eight_dim(&a, &b);
    let report = verify_vogel_relations(&rep, &a, &qi(-2));
    assert!(report.checks.iter().take(6).all(|c| c.holds));
    assert!(!report.all_hold());
}

#[test]
fn morphism_examples() {
    let (a, b) = e6();
    let half = |x: &Q| x / qi(2);
    let m = qi(5);
    assert!(morphism_factor_check(MorphismKind::Phi, &half(&a), &half(&a), &m, &a, &b));
    assert!(!morphism_factor_check(MorphismKind::Phi, &half(&a), &half(&b), &m, &a, &b));
    let mx = qi(4) - qi(2) * (Q::one() + &b / &a);
    assert!(morphism_factor_check(MorphismKind::Psi, &half(&a), &half(&a), &mx, &a, &b));
    assert!(!morphism_factor_check(MorphismKind::Psi, &half(&a), &half(&a), &(mx + Q::one()), &a, &b));
}

#[test]
fn morphism_criteria_agree_with_prediction_on_a_grid() {
    // Oracle: phi factors iff u = v in {alpha/2, beta/2}; psi additionally needs u(m-4) = -(alpha+beta).
    let (a, b) = (q(5, 2), q(-4, 3));
    let roots = [&a / qi(2), &b / qi(2)];
    let values = [&a / qi(2), &b / qi(2), qi(1), q(-2, 5)];
    for u in &values {
        for v in &values {
            for m in [qi(5), qi(4) - (&a + &b) / u] {
                let good_u = u == v && roots.contains(u);
                assert_eq!(morphism_factor_check(MorphismKind::Phi, u, v, &m, &a, &b), good_u);
                let psi = good_u && u * (&m - qi(4)) == -(&a + &b);
                assert_eq!(morphism_factor_check(MorphismKind::Psi, u, v, &m, &a, &b), psi, "u={u} v={v} m={m}");
            }
        }
    }
}

#[test]
fn two_strand_structure() {
    let (a, b) = e6();
    let report = verify_v2(&a, &b).unwrap();
    assert!(report.all_hold());
    assert_eq!(v2_vandermonde(&a, &b), &a * &b * (&b - &a));
    assert_eq!(v2_vandermonde(&a, &b), qi(12));
    assert!(verify_v2(&a, &a).is_err());
    assert!(verify_v2(&Q::zero(), &b).is_err());
}

#[test]
fn three_strand_span() {
    let (a, b) = e6();
    let report = b3_span_check(&a, &b).unwrap();
    assert_eq!(report.rank, 20);
    assert_eq!(report.model_dims, vec![1, 1, 1, 2, 2, 3]);
    assert_eq!(report.model_dims.iter().map(|d| d * d).sum::<usize>(), 20);
    assert!(report.all_hold(), "{:#?}", report.checks);
    assert_eq!(b3_words().len(), 20);
}

#[test]
fn three_strand_span_rejects_degenerate_points() {
    assert!(matches!(b3_span_check(&qi(2), &qi(-2)), Err(VogelError::NonGeneric(_))));
    assert!(matches!(b3_span_check(&qi(2), &qi(2)), Err(VogelError::NonGeneric(_))));
    // alpha beta / 2 = d^2 with d = (alpha + beta)/3: alpha = 1, beta = 2 gives 1 = 1.
    assert!(matches!(b3_span_check(&qi(1), &qi(2)), Err(VogelError::NonGeneric(_))));
}

#[test]
fn transposition_model() {
    let (a, b) = e6();
    let lambda = &a / qi(2);
    let m = (&a + &b) / &lambda - qi(3);
    let report = verify_perm_rep(4, &lambda, &m, &Q::one()).unwrap();
    assert_eq!(report.dim, 6);
    assert_eq!(report.multiplicities, vec![1, 3, 2]);
    assert!(report.all_hold(), "{:#?}", report.checks);

    let five = verify_perm_rep(5, &lambda, &m, &Q::one()).unwrap();
    assert_eq!(five.multiplicities, vec![1, 6, 3]);
    assert!(five.all_hold());

    let broken = verify_perm_rep(4, &lambda, &m, &Q::zero()).unwrap();
    assert!(!broken.get(ABSORPTION).unwrap().holds);
    assert!(broken.get("[t_ij, t_ik + t_kj] = 0").unwrap().holds);
    assert!(broken.get("[t_ij, t_rs] = 0 for disjoint pairs").unwrap().holds);
    assert!(verify_perm_rep(2, &lambda, &m, &Q::one()).is_err());
}

#[test]
fn parameter_points_are_seeded_and_generic() {
    let p = parameter_points(7, 2);
    assert_eq!(p.len(), 3);
    assert_eq!(p[0].values, e6());
    assert_eq!(p, parameter_points(7, 2));
    assert!(p.iter().all(|x| suite_generic(&x.values.0, &x.values.1)));
}

#[test]
fn suite_holds_at_default_and_random_points() {
    let report = vogel_suite(&parameter_points(1, 2)).unwrap();
    assert_eq!(report.models.len(), 27);
    assert!(report.all_hold(), "{}", serde_json::to_string_pretty(&report).unwrap());
    let mut seen = BTreeMap::new();
    for m in &report.models {
        *seen.entry(m.dim).or_insert(0) += 1;
    }
    assert_eq!(seen[&8], 3);
}
