//! The filtration of the cubic quotient on three strands as a bimodule over the subalgebra
//! generated by `s_1`, and the two decompositions of the algebra it yields.

use serde::Serialize;

use crate::expr::eval_elem;
use crate::freealg::AlgElem;
use crate::h3reps::{express_in_ring, Ambient, H3Error};
use crate::report::{check, IdentityCheck};
use crate::ring::{named, LaurentPoly};
use crate::rewrite::{build_system, coordinates, listed_basis, SystemKind};

/// One layer of the filtration, given by the basis words that span it modulo the layers below.
#[derive(Debug, Clone, Serialize)]
pub struct FiltrationLayer {
    pub name: &'static str,
    pub words: Vec<Vec<i32>>,
    pub expected_rank: usize,
}

/// The four layers `M_2`, `M_+`, `M'_1 / M_+` and the top quotient, in increasing order.
pub fn filtration_layers() -> Vec<FiltrationLayer> {
    let layer = |name, words: &[&[i32]]| FiltrationLayer {
        name,
        words: words.iter().map(|w| w.to_vec()).collect(),
        expected_rank: words.len(),
    };
    vec![
        layer("M_2", &[&[], &[1], &[-1]]),
        layer(
            "M_+",
            &[&[2], &[1, 2], &[-1, 2], &[2, -1], &[2, 1], &[1, 2, 1], &[1, 2, -1], &[-1, 2, 1], &[-1, 2, -1]],
        ),
        layer("M'_1/M_+", &[&[-2], &[1, -2], &[-1, -2], &[-2, -1], &[-2, 1], &[1, -2, 1], &[1, -2, -1]]),
        layer("Q_3/M_1", &[&[2, -1, 2]]),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationReport {
    pub layers: Vec<FiltrationLayer>,
    pub checks: Vec<IdentityCheck>,
}

impl FiltrationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Layer index of each word of the second signed basis.
fn layer_of(basis: &[Vec<i32>], layers: &[FiltrationLayer]) -> Vec<usize> {
    basis.iter().map(|w| layers.iter().position(|l| l.words.contains(w)).unwrap_or(usize::MAX)).collect()
}

/// Verifies the filtration, the action on the top layer, the two kernel elements and both
/// decompositions of the algebra.
pub fn verify_filtration() -> Result<FiltrationReport, H3Error> {
    let system = build_system(SystemKind::Signed2).map_err(|e| H3Error::Rewrite(e.to_string()))?;
    let basis = listed_basis(SystemKind::Signed2);
    let layers = filtration_layers();
    let level = layer_of(&basis, &layers);
    let coords = |x: &AlgElem| -> Result<Vec<LaurentPoly>, H3Error> {
        let nf = system.normal_form(x).map_err(|e| H3Error::Rewrite(e.to_string()))?;
        coordinates(&nf, &basis).map_err(|_| H3Error::Rewrite("normal form left the basis".into()))
    };
    // Highest layer carrying a nonzero coordinate.
    let depth = |v: &[LaurentPoly]| v.iter().zip(&level).filter(|(c, _)| !c.is_zero()).map(|(_, &l)| l).max();
    let w = |l: &[i32]| AlgElem::word(l, 3);
    let mut checks = Vec::new();

    let total: usize = layers.iter().map(|l| l.words.len()).sum();
    let partitioned = total == basis.len() && level.iter().all(|&l| l != usize::MAX);
    let ranks = layers.iter().map(|l| l.expected_rank.to_string()).collect::<Vec<_>>().join(" + ");
    checks.push(check("layers partition the basis", partitioned, ranks));

    // Each partial sum of layers is stable under multiplication by s_1^{±1} on both sides.
    for (k, layer) in layers.iter().enumerate().take(3) {
        let mut stable = true;
        for word in layers[..=k].iter().flat_map(|l| &l.words) {
            for s in [1, -1] {
                for x in [&w(&[s]) * &w(word), &w(word) * &w(&[s])] {
                    stable &= depth(&coords(&x)?).is_none_or(|d| d <= k);
                }
            }
        }
        checks.push(check(&format!("layers up to {} are a sub-bimodule", layer.name), stable, ""));
    }

    let top = &layers[3].words[0];
    let top_idx = basis.iter().position(|b| b == top).expect("top word is a basis word");
    let a = named::a();
    for (name, x, want) in [
        ("s_1 . top = a top mod M_1", &w(&[1]) * &w(top), a.clone()),
        ("top . s_1 = a top mod M_1", &w(top) * &w(&[1]), a.clone()),
        ("s_1^-1 . top = a^-1 top mod M_1", &w(&[-1]) * &w(top), a.pow(-1)),
        ("top . s_1^-1 = a^-1 top mod M_1", &w(top) * &w(&[-1]), a.pow(-1)),
    ] {
        let got = coords(&x)?[top_idx].clone();
        checks.push(check(name, got == want, format!("coefficient {got}")));
    }

    let kernel = [
        "[-1 -2 1] - [1 -2 -1] + a*[-2 -1] - a^-1*[-2 1] - a*[-1 -2] + a^-1*[1 -2]",
        "[-1 -2 -1] + (b+c)*w^-1*[1 -2 -1] + (w*a)^-1*[1 -2 1] - v*w^-1*[-2 -1] - w^-1*[-2 1] \
         - a^-1*[-1 -2] - u*(w*a)^-1*[1 -2] + (a^2+v)*(w*a)^-1*[-2]",
    ];
    for (i, src) in kernel.iter().enumerate() {
        let x = eval_elem(src, 3).map_err(|e| H3Error::Rewrite(e.to_string()))?;
        let d = depth(&coords(&x)?);
        checks.push(check(
            &format!("kernel element {} lies in M_2 + M_+", i + 1),
            d.is_none_or(|d| d <= 1),
            format!("highest layer {d:?}"),
        ));
    }

    // Both decompositions: the words x s_2^k y with x, y in {1, s_1, s_1^-1} plus one extra word
    // span the algebra over R.
    let lower: Vec<Vec<i32>> = layers[..3].iter().flat_map(|l| l.words.clone()).collect();
    let target = listed_basis(SystemKind::Signed1);
    for extra in [vec![2, -1, 2], vec![-2, 1, -2]] {
        let mut span = lower.clone();
        span.push(extra.clone());
        let shaped = lower.iter().all(|word| is_sandwich(word));
        let mut spans = true;
        for word in &target {
            spans &= express_in_ring(&w(word), &span, Ambient::Q3).is_ok();
        }
        checks.push(check(
            &format!("Q_2 + Q_2 s_2 Q_2 + Q_2 s_2^-1 Q_2 + R {extra:?} is everything"),
            shaped && spans,
            format!("{} words", span.len()),
        ));
    }
    Ok(FiltrationReport { layers, checks })
}

/// Whether a word has the form `x s_2^k y` with `x, y ∈ {1, s_1, s_1^-1}` and `k ∈ {0, 1, -1}`.
fn is_sandwich(word: &[i32]) -> bool {
    let middle: Vec<usize> = (0..word.len()).filter(|&i| word[i].abs() == 2).collect();
    match middle.as_slice() {
        [] => word.len() <= 1,
        &[m] => m <= 1 && word.len() - m - 1 <= 1,
        _ => false,
    }
}
