//! Quadratic Hecke algebras in the `T_w` basis and the tripled quadratic Hecke algebra.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::expr::eval_elem;
use crate::freealg::AlgElem;
use crate::ring::{named, rank_mod_p, Coeff, Fp, LaurentPoly};
use crate::words::SignedWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("strand count {0} outside the supported range")]
    OutOfRange(usize),
    #[error("letter {letter} does not act on {n} strands")]
    Letter { letter: i32, n: usize },
    #[error("the product of the parameters is not invertible")]
    Parameters,
}

/// Permutation of `{0, …, n-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `w s_i` for the simple transposition of positions `i-1, i` (1-based `i`).
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// A reduced word, obtained by bubble-sorting right descents.
    pub fn reduced_word(&self) -> Vec<i32> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            word.push(i as i32);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

/// Element of `H_n(x, y)` in the `T_w` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeElem<T: Coeff = LaurentPoly> {
    n: usize,
    x: T,
    y: T,
    terms: BTreeMap<Permutation, T>,
}

impl<T: Coeff> HeckeElem<T> {
    pub fn zero(n: usize, x: T, y: T) -> Self {
        HeckeElem { n, x, y, terms: BTreeMap::new() }
    }

    pub fn basis(w: Permutation, x: T, y: T) -> Self {
        let one = x.one_like();
        let mut e = Self::zero(w.n(), x, y);
        e.terms.insert(w, one);
        e
    }

    pub fn one(n: usize, x: T, y: T) -> Self {
        Self::basis(Permutation::identity(n), x, y)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> (&T, &T) {
        (&self.x, &self.y)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> T {
        self.terms.get(w).cloned().unwrap_or_else(|| self.x.zero_like())
    }

    fn add_term(&mut self, w: Permutation, c: T) {
        if c.is_zero() {
            return;
        }
        let zero = c.zero_like();
        let e = self.terms.entry(w.clone()).or_insert(zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.x.one_like().neg()))
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.n, self.x.clone(), self.y.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    /// Right multiplication by `T_{s_i}`.
    pub fn mul_generator(&self, i: usize) -> Self {
        let sum = self.x.add(&self.y);
        let prod = self.x.mul(&self.y);
        let mut out = Self::zero(self.n, self.x.clone(), self.y.clone());
        for (w, c) in &self.terms {
            let ws = w.times_simple(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c.mul(&sum));
                out.add_term(ws, c.mul(&prod).neg());
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// Right multiplication by `T_{s_i}^{-1} = ((x+y) - T_{s_i}) / (xy)`.
    pub fn mul_generator_inverse(&self, i: usize) -> Result<Self, HeckeError> {
        let inv = self.x.one_like().exact_div(&self.x.mul(&self.y)).ok_or(HeckeError::Parameters)?;
        let shifted = self.scale(&self.x.add(&self.y)).sub(&self.mul_generator(i));
        Ok(shifted.scale(&inv))
    }

    /// Image of a signed braid word.
    pub fn eval_word(letters: &[i32], n: usize, x: T, y: T) -> Result<Self, HeckeError> {
        let mut acc = Self::one(n, x, y);
        for &l in letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= n {
                return Err(HeckeError::Letter { letter: l, n });
            }
            acc = if l > 0 { acc.mul_generator(i) } else { acc.mul_generator_inverse(i)? };
        }
        Ok(acc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.x.clone(), self.y.clone());
        for (v, c) in &other.terms {
            let mut part = self.scale(c);
            for i in v.reduced_word() {
                part = part.mul_generator(i as usize);
            }
            out = out.add(&part);
        }
        out
    }

    /// The character `s_i ↦ value`, sending `T_w` to `value^{l(w)}`.
    pub fn q_value(&self, value: &T) -> T {
        let mut total = value.zero_like();
        for (w, c) in &self.terms {
            let mut p = c.clone();
            for _ in 0..w.length() {
                p = p.mul(value);
            }
            total = total.add(&p);
        }
        total
    }

    /// Coefficients on the permutations in `order`.
    pub fn dense(&self, order: &[Permutation]) -> Vec<T> {
        order.iter().map(|w| self.coeff(w)).collect()
    }
}

/// Image in `H_n(a,b) ⊕ H_n(a,c) ⊕ H_n(b,c)`, stored as `(z_c, z_b, z_a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleElem<T: Coeff = LaurentPoly> {
    pub components: [HeckeElem<T>; 3],
}

impl<T: Coeff> TripleElem<T> {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(HeckeElem::is_zero)
    }

    fn abc(&self) -> (T, T, T) {
        let (a, b) = self.components[0].params();
        let (_, c) = self.components[1].params();
        (a.clone(), b.clone(), c.clone())
    }
}

/// Evaluates a signed word in the three quadratic Hecke algebras at the given parameters.
pub fn triple_eval_word<T: Coeff>(letters: &[i32], n: usize, abc: &[T; 3]) -> Result<TripleElem<T>, HeckeError> {
    let [a, b, c] = abc;
    Ok(TripleElem {
        components: [
            HeckeElem::eval_word(letters, n, a.clone(), b.clone())?,
            HeckeElem::eval_word(letters, n, a.clone(), c.clone())?,
            HeckeElem::eval_word(letters, n, b.clone(), c.clone())?,
        ],
    })
}

/// Componentwise evaluation with coefficients mapped through `conv`.
pub fn triple_embed_with<T: Coeff>(
    x: &AlgElem,
    abc: &[T; 3],
    conv: impl Fn(&LaurentPoly) -> T,
) -> Result<TripleElem<T>, HeckeError> {
    let n = x.strands();
    let [a, b, c] = abc;
    let mut comps = [
        HeckeElem::zero(n, a.clone(), b.clone()),
        HeckeElem::zero(n, a.clone(), c.clone()),
        HeckeElem::zero(n, b.clone(), c.clone()),
    ];
    for (w, coeff) in x.terms() {
        let t = triple_eval_word(w, n, abc)?;
        let s = conv(coeff);
        for (acc, part) in comps.iter_mut().zip(t.components) {
            *acc = acc.add(&part.scale(&s));
        }
    }
    Ok(TripleElem { components: comps })
}

/// Symbolic image over the Laurent ring.
pub fn triple_embed(x: &AlgElem) -> Result<TripleElem, HeckeError> {
    triple_embed_with(x, &[named::a(), named::b(), named::c()], |c| c.clone())
}

/// The matching conditions `q_α(z_α') = q_α(z_α'')` characterizing the image.
pub fn fiber_check<T: Coeff>(t: &TripleElem<T>) -> bool {
    let (a, b, c) = t.abc();
    let [zc, zb, za] = &t.components;
    zb.q_value(&a) == zc.q_value(&a) && za.q_value(&b) == zc.q_value(&b) && za.q_value(&c) == zb.q_value(&c)
}

/// The recursive basis word list of the tripled algebra on `n` strands.
pub fn k_basis(n: usize) -> Result<Vec<SignedWord>, HeckeError> {
    if !(1..=6).contains(&n) {
        return Err(HeckeError::OutOfRange(n));
    }
    let words = k_basis_letters(n);
    let strands = n.max(2);
    Ok(words.into_iter().map(|w| SignedWord::new(w, strands).expect("letters below n")).collect())
}

fn k_basis_letters(n: usize) -> Vec<Vec<i32>> {
    match n {
        1 => vec![vec![]],
        2 => vec![vec![], vec![1], vec![-1]],
        _ => {
            let m = (n - 1) as i32;
            let prev = k_basis_letters(n - 1);
            let mut out = Vec::new();
            for k in 0..=m {
                let tail: Vec<i32> = (0..k).map(|j| m - j).collect();
                for b in &prev {
                    out.push([b.as_slice(), &tail].concat());
                }
            }
            for k in 1..=m {
                let mut tail: Vec<i32> = (0..k - 1).map(|j| m - j).collect();
                tail.push(-(m - k + 1));
                for b in k_basis_letters(2) {
                    out.push([b.as_slice(), &tail].concat());
                }
            }
            out
        }
    }
}

/// Rank data of the tripled algebra at a point of `Z/p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleRankReport {
    pub n: usize,
    pub basis_size: usize,
    pub basis_rank: usize,
    pub ambient_dim: usize,
    pub fiber_constraint_rank: usize,
    pub point: [u64; 3],
    pub prime: u64,
}

impl TripleRankReport {
    /// Basis independent, and its span is the whole fiber subspace.
    pub fn is_full(&self) -> bool {
        self.basis_rank == self.basis_size && self.basis_rank == self.ambient_dim - self.fiber_constraint_rank
    }
}

/// Ranks of the basis images and of the matching conditions, modulo `p` at `point`.
pub fn triple_rank_mod_p(n: usize, point: [u64; 3], p: u64) -> Result<TripleRankReport, HeckeError> {
    let basis = k_basis(n)?;
    let strands = n.max(2);
    let perms = Permutation::all(strands);
    let abc = point.map(|v| Fp::new(v, p));
    let mut rows = Vec::with_capacity(basis.len());
    for w in &basis {
        let t = triple_eval_word(w.letters(), strands, &abc)?;
        rows.push(t.components.iter().flat_map(|c| c.dense(&perms)).map(|f| f.value).collect::<Vec<u64>>());
    }
    let basis_rank = rank_mod_p(&rows, p);
    // Each matching condition is a linear functional on the triple sum.
    let nf = perms.len();
    let q = |v: u64, w: &Permutation| Fp::new(v, p).pow(w.length() as u64).value;
    let mut constraints = vec![vec![0u64; 3 * nf]; 3];
    for (j, w) in perms.iter().enumerate() {
        let (a, b, c) = (point[0], point[1], point[2]);
        // q_a(z_b) - q_a(z_c), q_b(z_a) - q_b(z_c), q_c(z_a) - q_c(z_b)
        constraints[0][nf + j] = q(a, w);
        constraints[0][j] = (p - q(a, w)) % p;
        constraints[1][2 * nf + j] = q(b, w);
        constraints[1][j] = (p - q(b, w)) % p;
        constraints[2][2 * nf + j] = q(c, w);
        constraints[2][nf + j] = (p - q(c, w)) % p;
    }
    Ok(TripleRankReport {
        n,
        basis_size: basis.len(),
        basis_rank,
        ambient_dim: 3 * nf,
        fiber_constraint_rank: rank_mod_p(&constraints, p),
        point,
        prime: p,
    })
}

/// Outcome of one ternary relation in one quadratic Hecke algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TernaryCheck {
    pub n: usize,
    pub index: usize,
    pub algebra: &'static str,
    pub vanishes: bool,
}

/// The ternary relations as `lhs - rhs`, on 3 and 4 strands.
pub fn ternary_relations() -> Vec<(usize, usize, AlgElem)> {
    let rel = |src: &str, n: usize| eval_elem(src, n).expect("well-formed relation");
    vec![
        (3, 1, rel("([1] - a)*([1] - b)*([1] - c)", 3)),
        (3, 1, rel("([2] - a)*([2] - b)*([2] - c)", 3)),
        (3, 2, rel("[2 2 1] - ([2 1 1] - [1 1 2] + [1 2 2])", 3)),
        (3, 3, rel("[2 1 1 2] - (-w*[1] + v*[1 2] + [1 2 1 1] - u*[1 2 2] + [1 1 2 2])", 3)),
        (4, 1, rel("[2 3 3] - (-[1 1 3] + [1 1 2] + [2 2 3] - [1 2 2] + [1 3 3])", 4)),
        (4, 2, rel("[2 2 3 1] - ([2 1 1 3] - [1 1 2 3] + [1 2 2 3])", 4)),
        (
            4,
            3,
            rel(
                "[2 2 3 3] - (-w*[1] + v*[1 3] - u*[1 1 3] + w*[2] - v*[2 3] + u*[1 1 2] - [1 1 2 3] \
                 + u*[2 2 3] - u*[1 2 2] + [1 2 2 3] + [1 1 3 3])",
                4,
            ),
        ),
        (
            4,
            4,
            rel(
                "[2 2 3 3] - (-w*[1] + v*[1 3] - u*[1 1 3] + w*[2] - v*[2 3] + u*[1 1 2] + u*[2 2 3] \
                 - u*[1 2 2] + [1 1 3 3] + [2 2 1 3] - [2 1 1 3])",
                4,
            ),
        ),
    ]
}

/// Evaluates every ternary relation in `H_n(a,b)`, `H_n(a,c)` and `H_n(b,c)`.
pub fn verify_ternary_relations() -> Result<Vec<TernaryCheck>, HeckeError> {
    let names = ["H(a,b)", "H(a,c)", "H(b,c)"];
    let mut out = Vec::new();
    for (n, index, r) in ternary_relations() {
        let t = triple_embed(&r)?;
        for (algebra, comp) in names.iter().zip(&t.components) {
            out.push(TernaryCheck { n, index, algebra, vanishes: comp.is_zero() });
        }
    }
    Ok(out)
}

/// The commutator element `[s_2^2, s_1] - [s_2, s_1^2]` on the given strand count.
pub fn ternary_element(strands: usize) -> AlgElem {
    eval_elem("[2 2 1] - [1 2 2] - [2 1 1] + [1 1 2]", strands).expect("well-formed element")
}
