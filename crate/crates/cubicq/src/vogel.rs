//! Vogel's algebra on `n` strands: Brauer-diagram calculus, explicit matrix models for
//! `n = 2, 3, 4`, the factorization criteria for the two families of candidate morphisms, and
//! the spanning verification on three strands.
//!
//! Parameters are exact rationals; relations are checked as exact identities at the chosen
//! points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::hecke::Permutation;
use crate::report::{check, IdentityCheck};
use crate::ring::Matrix;

pub type Q = BigRational;
pub type QMatrix = Matrix<Q>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VogelError {
    #[error("parameters are not generic: {0}")]
    NonGeneric(String),
    #[error("strand count {0} outside the supported range")]
    Strands(usize),
}

/// Rational `p/q`.
pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

fn qi(p: i64) -> Q {
    Q::from_integer(BigInt::from(p))
}

fn rmat(rows: Vec<Vec<Q>>) -> QMatrix {
    Matrix::from_rows(rows).expect("rectangular rows")
}

fn imat(rows: &[&[i64]]) -> QMatrix {
    rmat(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
}

fn block_diag(blocks: &[QMatrix]) -> QMatrix {
    let dim = blocks.iter().map(|b| b.rows()).sum();
    let mut out = Matrix::filled(dim, dim, &Q::zero());
    let mut at = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(at + i, at + j, b.get(i, j).clone());
            }
        }
        at += b.rows();
    }
    out
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// The unordered pairs of `{0, …, n-1}`, lexicographically.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

// ---------------------------------------------------------------------------------------------
// Algebras in which the relations are checked.

/// The operations needed to test the defining relations inside an algebra.
pub trait RelationAlgebra: Clone + PartialEq {
    fn mul(&self, other: &Self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, s: &Q) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl RelationAlgebra for QMatrix {
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("square matrices of equal size")
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("square matrices of equal size")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("square matrices of equal size")
    }
    fn scale(&self, s: &Q) -> Self {
        Matrix::scale(self, s)
    }
    fn one(&self) -> Self {
        Matrix::identity(self.rows(), &Q::one())
    }
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
}

/// Images of the transpositions and of the `t_ij` in some algebra, indexed by ordered pairs.
pub struct Images<A> {
    pub n: usize,
    pub transposition: BTreeMap<(usize, usize), A>,
    pub t: BTreeMap<(usize, usize), A>,
}

impl<A: RelationAlgebra> Images<A> {
    fn s(&self, i: usize, j: usize) -> &A {
        &self.transposition[&ordered(i, j)]
    }
    fn t(&self, i: usize, j: usize) -> &A {
        &self.t[&ordered(i, j)]
    }

    /// The relations of the infinitesimal braid algebra extended by the symmetric group.
    pub fn braid_checks(&self) -> Vec<IdentityCheck> {
        let n = self.n;
        let mut checks = Vec::new();
        let mut failures = Vec::new();
        for (i, j) in pairs(n) {
            for k in (0..n).filter(|&k| k != i && k != j) {
                let tij = self.t(i, j);
                let sum = self.t(i, k).add(self.t(k, j));
                if !tij.mul(&sum).sub(&sum.mul(tij)).is_zero() {
                    failures.push(format!("({},{};{})", i + 1, j + 1, k + 1));
                }
            }
        }
        checks.push(check("[t_ij, t_ik + t_kj] = 0", failures.is_empty(), failures.join(" ")));

        let mut failures = Vec::new();
        for (i, j) in pairs(n) {
            for (r, s) in pairs(n).into_iter().filter(|&(r, s)| r != i && r != j && s != i && s != j) {
                let (x, y) = (self.t(i, j), self.t(r, s));
                if !x.mul(y).sub(&y.mul(x)).is_zero() {
                    failures.push(format!("({},{})({},{})", i + 1, j + 1, r + 1, s + 1));
                }
            }
        }
        checks.push(check("[t_ij, t_rs] = 0 for disjoint pairs", failures.is_empty(), failures.join(" ")));

        let mut failures = Vec::new();
        for k in 0..n - 1 {
            let g = self.s(k, k + 1);
            let swap = |p: usize| if p == k { k + 1 } else if p == k + 1 { k } else { p };
            for (i, j) in pairs(n) {
                let conj = g.mul(self.t(i, j)).mul(g);
                if conj != *self.t(swap(i), swap(j)) {
                    failures.push(format!("s{} t({},{})", k + 1, i + 1, j + 1));
                }
            }
        }
        checks.push(check("w t_ij w^-1 = t_w(i)w(j)", failures.is_empty(), failures.join(" ")));
        checks
    }

    /// The relations specific to Vogel's algebra, plus the cubic consequence.
    pub fn vogel_checks(&self, alpha: &Q, beta: &Q) -> Vec<IdentityCheck> {
        let mut absorb_right = Vec::new();
        let mut absorb_left = Vec::new();
        let mut quadratic = Vec::new();
        let mut cubic = Vec::new();
        let half_ab = alpha * beta / qi(2);
        for (i, j) in pairs(self.n) {
            let (t, s) = (self.t(i, j), self.s(i, j));
            let label = format!("({},{})", i + 1, j + 1);
            if t.mul(s) != *t {
                absorb_right.push(label.clone());
            }
            if s.mul(t) != *t {
                absorb_left.push(label.clone());
            }
            let one = t.one();
            let quad = t.mul(t).sub(&t.scale(&(alpha + beta))).add(&one.add(s).scale(&half_ab));
            if !quad.is_zero() {
                quadratic.push(label.clone());
            }
            let cub = t.mul(&t.sub(&one.scale(alpha))).mul(&t.sub(&one.scale(beta)));
            if !cub.is_zero() {
                cubic.push(label);
            }
        }
        vec![
            check("t_ij (i,j) = t_ij", absorb_right.is_empty(), absorb_right.join(" ")),
            check("(i,j) t_ij = t_ij", absorb_left.is_empty(), absorb_left.join(" ")),
            check(
                "t_ij^2 - (alpha+beta) t_ij + (alpha beta/2)(1 + (i,j)) = 0",
                quadratic.is_empty(),
                quadratic.join(" "),
            ),
            check("t_ij (t_ij - alpha)(t_ij - beta) = 0", cubic.is_empty(), cubic.join(" ")),
        ]
    }
}

// ---------------------------------------------------------------------------------------------
// Brauer diagrams.

/// Perfect matching on `2n` points: `0..n` is the top row and `n..2n` the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    /// Builds a diagram from the partner of each point, rejecting anything but a perfect matching.
    pub fn from_partners(partner: Vec<usize>) -> Option<Self> {
        let len = partner.len();
        if !len.is_multiple_of(2) {
            return None;
        }
        let valid = partner.iter().enumerate().all(|(p, &q)| q < len && q != p && partner[q] == p);
        valid.then_some(BrauerDiagram { n: len / 2, partner })
    }

    pub fn identity(n: usize) -> Self {
        Self::permutation(&Permutation::identity(n))
    }

    /// The diagram of a permutation: bottom point `k` is joined to top point `σ(k)`.
    pub fn permutation(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let mut partner = vec![0; 2 * n];
        for (k, &img) in sigma.images().iter().enumerate() {
            partner[img as usize] = n + k;
            partner[n + k] = img as usize;
        }
        BrauerDiagram { n, partner }
    }

    /// The transposition `(i, j)` of 0-based strands.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i, j);
        Self::permutation(&Permutation::from_images(images).expect("a transposition"))
    }

    /// The diagram joining `i` with `j` and `n+i` with `n+j`, all other strands vertical.
    pub fn cup_cap(n: usize, i: usize, j: usize) -> Self {
        let mut d = Self::identity(n);
        d.partner[i] = j;
        d.partner[j] = i;
        d.partner[n + i] = n + j;
        d.partner[n + j] = n + i;
        d
    }

    /// A uniformly random perfect matching on `2n` points.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut points: Vec<usize> = (0..2 * n).collect();
        for i in (1..points.len()).rev() {
            points.swap(i, rng.gen_range(0..=i));
        }
        let mut partner = vec![0; 2 * n];
        for pair in points.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        BrauerDiagram { n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// Stacks `self` above `other`, returning the composite and the number of closed loops.
    pub fn compose(&self, other: &Self) -> (Self, u32) {
        assert_eq!(self.n, other.n, "diagrams on different numbers of strands");
        let n = self.n;
        let layers = [&self.partner, &other.partner];
        let mut visited = vec![false; n];
        // Follows a strand from an outer point until it leaves through another outer point.
        let walk = |mut layer: usize, mut point: usize, visited: &mut Vec<bool>| loop {
            let q = layers[layer][point];
            match layer {
                0 if q >= n => {
                    visited[q - n] = true;
                    layer = 1;
                    point = q - n;
                }
                1 if q < n => {
                    visited[q] = true;
                    layer = 0;
                    point = q + n;
                }
                _ => return q,
            }
        };
        let mut partner = vec![0; 2 * n];
        for p in 0..n {
            partner[p] = walk(0, p, &mut visited);
        }
        for p in n..2 * n {
            partner[p] = walk(1, p, &mut visited);
        }
        let mut loops = 0;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            loops += 1;
            let (mut layer, mut point) = (0, start + n);
            loop {
                let q = layers[layer][point];
                let middle = if layer == 0 { q - n } else { q };
                visited[middle] = true;
                if middle == start {
                    break;
                }
                (layer, point) = if layer == 0 { (1, middle) } else { (0, middle + n) };
            }
        }
        (BrauerDiagram { n, partner }, loops)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |p: usize| if p < self.n { format!("{}", p + 1) } else { format!("{}'", p - self.n + 1) };
        let pairs: Vec<String> = (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| format!("{}-{}", name(p), name(self.partner[p])))
            .collect();
        write!(f, "{{{}}}", pairs.join(", "))
    }
}

/// Product of two diagrams in the Brauer algebra with loop value `m`.
pub fn brauer_mul(d1: &BrauerDiagram, d2: &BrauerDiagram, m: &Q) -> (BrauerDiagram, Q) {
    let (d, loops) = d1.compose(d2);
    (d, num_traits::pow(m.clone(), loops as usize))
}

/// Element of the Brauer algebra `Br_n(m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BrauerElem {
    n: usize,
    m: Q,
    terms: BTreeMap<BrauerDiagram, Q>,
}

impl BrauerElem {
    pub fn zero(n: usize, m: Q) -> Self {
        BrauerElem { n, m, terms: BTreeMap::new() }
    }

    pub fn diagram(d: BrauerDiagram, m: Q) -> Self {
        let mut e = Self::zero(d.n(), m);
        e.terms.insert(d, Q::one());
        e
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Q {
        self.terms.get(d).cloned().unwrap_or_else(Q::zero)
    }

    fn insert(&mut self, d: BrauerDiagram, c: Q) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl RelationAlgebra for BrauerElem {
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.m.clone());
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, scalar) = brauer_mul(d1, d2, &self.m);
                out.insert(d, c1 * c2 * scalar);
            }
        }
        out
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.insert(d.clone(), c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }
    fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.n, self.m.clone());
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(d, c)| (d.clone(), c * s)).collect();
        }
        out
    }
    fn one(&self) -> Self {
        Self::diagram(BrauerDiagram::identity(self.n), self.m.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The two candidate families of morphisms from Vogel's algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MorphismKind {
    /// `t_ij ↦ u + v (i j)` into the group algebra of the symmetric group.
    Phi,
    /// `t_ij ↦ u + v ((i j) - p_ij)` into the Brauer algebra.
    Psi,
}

/// Whether the candidate images of the `t_ij` on `n` strands satisfy every defining relation.
pub fn morphism_factors(kind: MorphismKind, n: usize, u: &Q, v: &Q, m: &Q, alpha: &Q, beta: &Q) -> bool {
    let mut images = Images { n, transposition: BTreeMap::new(), t: BTreeMap::new() };
    for (i, j) in pairs(n) {
        let s = BrauerElem::diagram(BrauerDiagram::transposition(n, i, j), m.clone());
        let mut target = s.clone();
        if kind == MorphismKind::Psi {
            target = target.sub(&BrauerElem::diagram(BrauerDiagram::cup_cap(n, i, j), m.clone()));
        }
        let t = s.one().scale(u).add(&target.scale(v));
        images.transposition.insert((i, j), s);
        images.t.insert((i, j), t);
    }
    images.braid_checks().iter().chain(&images.vogel_checks(alpha, beta)).all(|c| c.holds)
}

/// [`morphism_factors`] on three strands.
pub fn morphism_factor_check(kind: MorphismKind, u: &Q, v: &Q, m: &Q, alpha: &Q, beta: &Q) -> bool {
    morphism_factors(kind, 3, u, v, m, alpha, beta)
}

// ---------------------------------------------------------------------------------------------
// Matrix models.

/// A matrix representation given by the images of the Coxeter generators and of `t_12`.
#[derive(Debug, Clone)]
pub struct VogelRep {
    pub name: String,
    pub n: usize,
    /// Images of `(1,2), (2,3), …, (n-1,n)`.
    pub generators: Vec<QMatrix>,
    pub t12: QMatrix,
}

impl VogelRep {
    pub fn dim(&self) -> usize {
        self.t12.rows()
    }

    fn identity(&self) -> QMatrix {
        Matrix::identity(self.dim(), &Q::one())
    }

    /// Image of a permutation through one of its reduced words.
    pub fn permutation_matrix(&self, w: &Permutation) -> QMatrix {
        w.reduced_word().iter().fold(self.identity(), |acc, &i| acc.mul(&self.generators[i as usize - 1]))
    }

    /// Every `w t_12 w^-1` with `w({1,2}) = {i,j}`, grouped by the pair.
    fn conjugates(&self) -> BTreeMap<(usize, usize), Vec<(QMatrix, QMatrix)>> {
        let mut out: BTreeMap<_, Vec<_>> = BTreeMap::new();
        let s12 = &self.generators[0];
        for w in Permutation::all(self.n) {
            let img = w.images();
            let m = self.permutation_matrix(&w);
            let inv = self.permutation_matrix(&inverse(&w));
            let t = m.mul(&self.t12).mul(&inv);
            let s = m.mul(s12).mul(&inv);
            out.entry(ordered(img[0] as usize, img[1] as usize)).or_default().push((s, t));
        }
        out
    }

    /// The images of all transpositions and all `t_ij`, with the check that they do not depend
    /// on the conjugating permutation.
    pub fn images(&self) -> (Images<QMatrix>, IdentityCheck) {
        let mut images = Images { n: self.n, transposition: BTreeMap::new(), t: BTreeMap::new() };
        let mut failures = Vec::new();
        for ((i, j), list) in self.conjugates() {
            let (s, t) = list[0].clone();
            if list.iter().any(|(_, other)| *other != t) {
                failures.push(format!("({},{})", i + 1, j + 1));
            }
            images.transposition.insert((i, j), s);
            images.t.insert((i, j), t);
        }
        let c = check("t_ij = w t_12 w^-1 is independent of w", failures.is_empty(), failures.join(" "));
        (images, c)
    }

    /// Involutivity and the braid relations of the Coxeter generators.
    pub fn coxeter_checks(&self) -> Vec<IdentityCheck> {
        let g = &self.generators;
        let id = self.identity();
        let involutions = g.iter().all(|s| s.mul(s) == id);
        let mut braid = true;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                braid &= if j == i + 1 {
                    g[i].mul(&g[j]).mul(&g[i]) == g[j].mul(&g[i]).mul(&g[j])
                } else {
                    g[i].mul(&g[j]) == g[j].mul(&g[i])
                };
            }
        }
        vec![
            check("generators are involutions", involutions, ""),
            check("generators satisfy the braid relations", braid, ""),
        ]
    }

    /// Dimension of the kernel of `t_12 - μ` for each listed eigenvalue.
    pub fn eigen_multiplicities(&self, values: &[Q]) -> Vec<usize> {
        values
            .iter()
            .map(|mu| self.dim() - self.t12.minus_scalar(mu).rank().expect("rational matrices have a rank"))
            .collect()
    }

    /// Scalars in the one-dimensional representation of the symmetric group on `n` strands.
    pub fn one_dim(n: usize, sign: bool, t: Q) -> Self {
        let s = if sign { -Q::one() } else { Q::one() };
        VogelRep {
            name: format!("1-dim ({}, t = {})", if sign { "sign" } else { "trivial" }, t),
            n,
            generators: vec![rmat(vec![vec![s]]); n - 1],
            t12: rmat(vec![vec![t]]),
        }
    }

    /// The reflection representation of the symmetric group on three strands with
    /// `t_12 = (γ/2)(1 + (1,2))`.
    pub fn standard_s3(gamma: &Q) -> Self {
        let s1 = imat(&[&[-1, 1], &[0, 1]]);
        let s2 = imat(&[&[1, 0], &[1, -1]]);
        let t12 = s1.add(&s1.one()).scale(&(gamma / qi(2)));
        VogelRep { name: format!("2-dim (t eigenvalue {gamma})"), n: 3, generators: vec![s1, s2], t12 }
    }

    /// The three-dimensional irreducible on three strands, with `d = (α+β)/3`,
    /// `b = 2d^2 - αβ` and `c = 1`.
    pub fn three_dim(alpha: &Q, beta: &Q) -> Self {
        let d = (alpha + beta) / qi(3);
        let b = &d * &d * qi(2) - alpha * beta;
        let z = Q::zero();
        let s1 = imat(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let s2 = imat(&[&[1, 1, 0], &[3, -1, 0], &[0, 0, 2]]).scale(&q(1, 2));
        let t12 = rmat(vec![
            vec![z.clone(), z.clone(), z.clone()],
            vec![z.clone(), &d * qi(2), b],
            vec![z, Q::one(), d],
        ]);
        VogelRep { name: "3-dim".into(), n: 3, generators: vec![s1, s2], t12 }
    }

    /// The six-dimensional irreducible on four strands, `t_12 = (α/2)(s_1 + 1) + p_12` with a
    /// rank-one `p_12`.
    pub fn six_dim(alpha: &Q, beta: &Q) -> Self {
        let (a, b) = (alpha, beta);
        let z = Q::zero;
        let two_a_minus_b = a * qi(2) - b;
        let row = |x: Q, y: Q| vec![z(), z(), x, y, z(), z()];
        let p12 = rmat(vec![
            vec![z(); 6],
            row(&two_a_minus_b / qi(4), -(b * &two_a_minus_b) / qi(16)),
            row(-&two_a_minus_b / qi(2), b * &two_a_minus_b / qi(8)),
            row(qi(-2), b / qi(2)),
            row(qi(1), -b / qi(4)),
            vec![z(); 6],
        ]);
        let generators: Vec<QMatrix> =
            coxeter_a3().into_iter().map(|m| block_diag(&[m.clone(), m.scale(&-Q::one())])).collect();
        let t12 = generators[0].add(&generators[0].one()).scale(&(a / qi(2))).add(&p12);
        VogelRep { name: format!("6-dim (alpha = {a}, beta = {b})"), n: 4, generators, t12 }
    }

    /// The eight-dimensional irreducible on four strands, with `α+β = 8c` and `αβ = 12c^2 - 4a`.
    pub fn eight_dim(alpha: &Q, beta: &Q) -> Self {
        let c = (alpha + beta) / qi(8);
        let a = (&c * &c * qi(12) - alpha * beta) / qi(4);
        let z = Q::zero;
        let k = |x: i64| &c * qi(x);
        let t12 = rmat(vec![
            vec![z(); 8],
            vec![k(2), k(4), k(1), z(), &c * &c * qi(2) + &a * qi(2), a.clone(), z(), z()],
            vec![z(), z(), k(2), z(), z(), -&a * qi(2), z(), z()],
            vec![z(); 8],
            vec![qi(1), qi(2), qi(1), z(), k(4), z(), z(), z()],
            vec![z(), z(), qi(-2), z(), z(), k(6), z(), z()],
            vec![z(), z(), qi(1), z(), z(), k(-3), z(), z()],
            vec![z(); 8],
        ]);
        let generators = coxeter_a3()
            .into_iter()
            .zip(coxeter_22())
            .map(|(m, b)| block_diag(&[m.clone(), b, m.scale(&-Q::one())]))
            .collect();
        VogelRep { name: "8-dim".into(), n: 4, generators, t12 }
    }

    /// The model on the span of the transpositions of `n` strands.
    pub fn transpositions(n: usize, lambda: &Q, m: &Q, x: &Q) -> Self {
        let basis = pairs(n);
        let index = |p: (usize, usize)| basis.iter().position(|&b| b == p).expect("a pair");
        let dim = basis.len();
        let conj = |(i, j): (usize, usize), (k, l): (usize, usize)| {
            let swap = |p: usize| if p == i { j } else if p == j { i } else { p };
            ordered(swap(k), swap(l))
        };
        let generators = (0..n - 1)
            .map(|k| {
                let mut g = Matrix::filled(dim, dim, &Q::zero());
                for (col, &u) in basis.iter().enumerate() {
                    g.set(index(conj((k, k + 1), u)), col, Q::one());
                }
                g
            })
            .collect();
        VogelRep { name: format!("transposition model (n = {n})"), n, generators, t12: transposition_t(n, (0, 1), lambda, m, x) }
    }
}

/// `t_s` on the span of the transpositions, straight from its defining formulas.
fn transposition_t(n: usize, s: (usize, usize), lambda: &Q, m: &Q, x: &Q) -> QMatrix {
    let basis = pairs(n);
    let index = |p: (usize, usize)| basis.iter().position(|&b| b == p).expect("a pair");
    let dim = basis.len();
    let mut t = Matrix::filled(dim, dim, &Q::zero());
    let (i, j) = s;
    let swap = |p: usize| if p == i { j } else if p == j { i } else { p };
    for (col, &u) in basis.iter().enumerate() {
        let add = |t: &mut QMatrix, row: usize, c: Q| {
            let v = t.get(row, col) + c;
            t.set(row, col, v);
        };
        if u == s {
            add(&mut t, col, lambda * (m + x));
            continue;
        }
        add(&mut t, col, x * lambda);
        add(&mut t, index(ordered(swap(u.0), swap(u.1))), lambda.clone());
        let disjoint = u.0 != i && u.0 != j && u.1 != i && u.1 != j;
        if !disjoint {
            add(&mut t, index(s), -lambda.clone());
        }
    }
    t
}

fn inverse(w: &Permutation) -> Permutation {
    let mut inv = vec![0u8; w.n()];
    for (k, &img) in w.images().iter().enumerate() {
        inv[img as usize] = k as u8;
    }
    Permutation::from_images(inv).expect("inverse of a permutation")
}

/// The reflection representation of type `A_3` in the basis used for the four-strand models.
fn coxeter_a3() -> Vec<QMatrix> {
    vec![
        imat(&[&[-1, 0, 0], &[1, 1, 0], &[0, 0, 1]]),
        imat(&[&[1, 1, 0], &[0, -1, 0], &[0, 1, 1]]),
        imat(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, -1]]),
    ]
}

/// The two-dimensional irreducible of the symmetric group on four strands.
fn coxeter_22() -> Vec<QMatrix> {
    let b1 = imat(&[&[-1, 0], &[0, 1]]);
    vec![b1.clone(), imat(&[&[1, 3], &[1, -1]]).scale(&q(1, 2)), b1]
}

// ---------------------------------------------------------------------------------------------
// Reports.

#[derive(Debug, Clone, Serialize)]
pub struct VogelReport {
    pub model: String,
    pub n: usize,
    pub dim: usize,
    pub alpha: String,
    pub beta: String,
    pub checks: Vec<IdentityCheck>,
}

impl VogelReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks every defining relation of Vogel's algebra on a matrix model.
pub fn verify_vogel_relations(rep: &VogelRep, alpha: &Q, beta: &Q) -> VogelReport {
    let mut checks = rep.coxeter_checks();
    let (images, independent) = rep.images();
    checks.push(independent);
    checks.extend(images.braid_checks());
    checks.extend(images.vogel_checks(alpha, beta));
    VogelReport {
        model: rep.name.clone(),
        n: rep.n,
        dim: rep.dim(),
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        checks,
    }
}

/// Kernel dimensions of `t_12 - μ` for `μ = 0, α, β`, checked against the expected counts and
/// against diagonalizability.
pub fn spectrum_check(rep: &VogelRep, alpha: &Q, beta: &Q, expected: [usize; 3]) -> IdentityCheck {
    let got = rep.eigen_multiplicities(&[Q::zero(), alpha.clone(), beta.clone()]);
    let total: usize = got.iter().sum();
    check(
        "spectrum of t_12 (multiplicities of 0, alpha, beta)",
        got == expected && total == rep.dim(),
        format!("{got:?}"),
    )
}

/// The structure of the two-strand algebra as the product of three copies of the field.
#[derive(Debug, Clone, Serialize)]
pub struct V2Report {
    pub vandermonde: String,
    pub checks: Vec<IdentityCheck>,
}

impl V2Report {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Determinant of the Vandermonde matrix on `0, α, β`, the images of `1, t, t^2`.
pub fn v2_vandermonde(alpha: &Q, beta: &Q) -> Q {
    let rows = [Q::zero(), alpha.clone(), beta.clone()]
        .iter()
        .map(|x| vec![Q::one(), x.clone(), x * x])
        .collect();
    rmat(rows).determinant().expect("rational matrices have a determinant")
}

pub fn verify_v2(alpha: &Q, beta: &Q) -> Result<V2Report, VogelError> {
    if alpha.is_zero() || beta.is_zero() || alpha == beta {
        return Err(VogelError::NonGeneric("alpha and beta must be distinct and nonzero".into()));
    }
    let t = [Q::zero(), alpha.clone(), beta.clone()];
    let s = [-Q::one(), Q::one(), Q::one()];
    let half_ab = alpha * beta / qi(2);
    let all = |f: &dyn Fn(&Q, &Q) -> bool| t.iter().zip(&s).all(|(t, s)| f(t, s));
    let det = v2_vandermonde(alpha, beta);
    let checks = vec![
        check("(1,2)^2 = 1", all(&|_, s| (s * s).is_one()), ""),
        check("t (1,2) = (1,2) t = t", all(&|t, s| &(t * s) == t), ""),
        check(
            "t^2 - (alpha+beta) t + (alpha beta/2)(1 + (1,2)) = 0",
            all(&|t, s| (t * t - (alpha + beta) * t + &half_ab * (Q::one() + s)).is_zero()),
            "",
        ),
        check("t (t - alpha)(t - beta) = 0", all(&|t, _| (t * (t - alpha) * (t - beta)).is_zero()), ""),
        check("1, t, t^2 are independent", !det.is_zero(), format!("Vandermonde determinant {det}")),
    ];
    Ok(V2Report { vandermonde: det.to_string(), checks })
}

/// Rejects parameter points where the three-strand irreducibles degenerate.
pub fn check_generic(alpha: &Q, beta: &Q) -> Result<(), VogelError> {
    let d = (alpha + beta) / qi(3);
    let conditions = [
        (alpha.is_zero(), "alpha = 0"),
        (beta.is_zero(), "beta = 0"),
        (alpha == beta, "alpha = beta"),
        ((alpha + beta).is_zero(), "alpha + beta = 0"),
        (alpha * beta / qi(2) == &d * &d, "alpha beta / 2 = ((alpha + beta)/3)^2"),
    ];
    match conditions.iter().find(|(bad, _)| *bad) {
        Some((_, why)) => Err(VogelError::NonGeneric((*why).into())),
        None => Ok(()),
    }
}

/// The six irreducible models on three strands, of total dimension `3·1 + 2·4 + 9 = 20`.
pub fn three_strand_irreducibles(alpha: &Q, beta: &Q) -> Vec<VogelRep> {
    vec![
        VogelRep::one_dim(3, true, Q::zero()),
        VogelRep::one_dim(3, false, alpha.clone()),
        VogelRep::one_dim(3, false, beta.clone()),
        VogelRep::standard_s3(alpha),
        VogelRep::standard_s3(beta),
        VogelRep::three_dim(alpha, beta),
    ]
}

/// A letter of the spanning set on three strands: `x_i = t_jk` or `z_i = (j,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum B3Letter {
    X(usize),
    Z(usize),
}

impl fmt::Display for B3Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            B3Letter::X(i) => write!(f, "x{i}"),
            B3Letter::Z(i) => write!(f, "z{i}"),
        }
    }
}

/// The twenty words spanning the three-strand algebra.
pub fn b3_words() -> Vec<Vec<B3Letter>> {
    use B3Letter::{X, Z};
    vec![
        vec![],
        vec![X(1)],
        vec![X(2)],
        vec![X(3)],
        vec![Z(1)],
        vec![Z(2)],
        vec![Z(3)],
        vec![X(1), X(2)],
        vec![X(1), X(3)],
        vec![X(1), Z(2)],
        vec![X(1), Z(3)],
        vec![X(2), X(1)],
        vec![X(2), X(3)],
        vec![X(2), Z(1)],
        vec![X(2), Z(3)],
        vec![X(3), Z(1)],
        vec![X(3), Z(2)],
        vec![Z(1), Z(2)],
        vec![Z(1), Z(3)],
        vec![X(1), X(2), X(3)],
    ]
}

/// Flattened images of words in the direct sum of the given models.
struct DirectSum {
    blocks: Vec<Images<QMatrix>>,
}

impl DirectSum {
    fn letter(&self, block: usize, l: B3Letter) -> &QMatrix {
        // x_i = t_jk and z_i = (j,k) with {i,j,k} = {1,2,3}.
        let pair = |i: usize| match i {
            1 => (1, 2),
            2 => (0, 2),
            _ => (0, 1),
        };
        match l {
            B3Letter::X(i) => &self.blocks[block].t[&pair(i)],
            B3Letter::Z(i) => &self.blocks[block].transposition[&pair(i)],
        }
    }

    fn eval(&self, word: &[B3Letter]) -> Vec<QMatrix> {
        (0..self.blocks.len())
            .map(|b| {
                let dim = self.blocks[b].t[&(0, 1)].rows();
                word.iter().fold(Matrix::identity(dim, &Q::one()), |acc, &l| acc.mul(self.letter(b, l)))
            })
            .collect()
    }

    fn flatten(images: &[QMatrix]) -> Vec<Q> {
        images.iter().flat_map(|m| m.entries().to_vec()).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct B3Report {
    pub alpha: String,
    pub beta: String,
    pub model_dims: Vec<usize>,
    pub rank: usize,
    pub checks: Vec<IdentityCheck>,
}

impl B3Report {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates the twenty spanning words in the sum of the six irreducibles and checks that they
/// are independent, closed under multiplication by the `x_i`, and satisfy two derived identities.
pub fn b3_span_check(alpha: &Q, beta: &Q) -> Result<B3Report, VogelError> {
    check_generic(alpha, beta)?;
    let reps = three_strand_irreducibles(alpha, beta);
    let mut checks = Vec::new();
    let mut blocks = Vec::new();
    for rep in &reps {
        let report = verify_vogel_relations(rep, alpha, beta);
        checks.push(check(&format!("{} satisfies the relations", rep.name), report.all_hold(), ""));
        blocks.push(rep.images().0);
    }
    let sum = DirectSum { blocks };
    let words = b3_words();
    let rows: Vec<Vec<Q>> = words.iter().map(|w| DirectSum::flatten(&sum.eval(w))).collect();
    let span = rmat(rows.clone());
    let rank = span.rank().expect("rational matrices have a rank");
    let total: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
    checks.push(check("the twenty words have independent images", rank == 20 && total == 20, format!("rank {rank}")));

    let mut escaped = Vec::new();
    for w in &words {
        for i in 1..=3 {
            for (side, prod) in [("right", [w.as_slice(), &[B3Letter::X(i)]].concat()), ("left", [&[B3Letter::X(i)], w.as_slice()].concat())] {
                let mut extended = rows.clone();
                extended.push(DirectSum::flatten(&sum.eval(&prod)));
                if rmat(extended).rank().expect("rational matrices have a rank") != rank {
                    escaped.push(format!("{side} x{i} on {}", word_name(w)));
                }
            }
        }
    }
    checks.push(check("the span is closed under multiplication by x_i", escaped.is_empty(), escaped.join(", ")));

    use B3Letter::{X, Z};
    let e = |w: &[B3Letter]| sum.eval(w);
    let x1x2x1 = e(&[X(1), X(2), X(1)]);
    checks.push(check("x1 x2 x1 = x1 x3 x1", x1x2x1 == e(&[X(1), X(3), X(1)]), ""));
    let lhs: Vec<QMatrix> = e(&[X(1), X(2), Z(3)]).iter().zip(e(&[X(2), X(1), Z(3)])).map(|(p, q)| p.sub(&q)).collect();
    let rhs: Vec<QMatrix> = e(&[X(3), X(2)]).iter().zip(e(&[X(1), X(3)])).map(|(p, q)| p.sub(&q)).collect();
    checks.push(check("[x1, x2] z3 = x3 x2 - x1 x3", lhs == rhs, ""));

    Ok(B3Report {
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        model_dims: reps.iter().map(|r| r.dim()).collect(),
        rank,
        checks,
    })
}

fn word_name(w: &[B3Letter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PermRepReport {
    pub n: usize,
    pub dim: usize,
    pub multiplicities: Vec<usize>,
    pub checks: Vec<IdentityCheck>,
}

impl PermRepReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Name of the check that `(i,j) t_ij = t_ij` in the transposition model.
pub const ABSORPTION: &str = "(i,j) t_ij = t_ij";

/// The transposition model: the infinitesimal braid relations for any `x`, absorption, the
/// spectrum of `t_12`, and the relations of Vogel's algebra for `α = 2λ`, `β = λ(m+1)`.
pub fn verify_perm_rep(n: usize, lambda: &Q, m: &Q, x: &Q) -> Result<PermRepReport, VogelError> {
    if n < 3 {
        return Err(VogelError::Strands(n));
    }
    let rep = VogelRep::transpositions(n, lambda, m, x);
    let mut checks = rep.coxeter_checks();
    let mut images = Images { n, transposition: BTreeMap::new(), t: BTreeMap::new() };
    for ((i, j), list) in rep.conjugates() {
        images.transposition.insert((i, j), list[0].0.clone());
        images.t.insert((i, j), transposition_t(n, (i, j), lambda, m, x));
    }
    checks.extend(images.braid_checks());

    let alpha = lambda * qi(2);
    let beta = lambda * (m + Q::one());
    let vogel = images.vogel_checks(&alpha, &beta);
    let values = [lambda * (m + x), lambda * (x + Q::one()), lambda * (x - Q::one())];
    let multiplicities = rep.eigen_multiplicities(&values);
    let expected = vec![1, (n - 1) * (n - 2) / 2, n - 2];
    checks.push(check(
        "eigenspaces of t_12 for lambda(m+x), lambda(x+1), lambda(x-1)",
        multiplicities == expected && multiplicities.iter().sum::<usize>() == rep.dim(),
        format!("{multiplicities:?}"),
    ));
    checks.extend(vogel);
    Ok(PermRepReport { n, dim: rep.dim(), multiplicities, checks })
}

// ---------------------------------------------------------------------------------------------
// Suite.

/// A parameter point of the suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamPoint {
    pub alpha: String,
    pub beta: String,
    #[serde(skip)]
    pub values: (Q, Q),
}

impl ParamPoint {
    pub fn new(alpha: Q, beta: Q) -> Self {
        ParamPoint { alpha: alpha.to_string(), beta: beta.to_string(), values: (alpha, beta) }
    }
}

/// Whether a point is generic for every model of the suite.
pub fn suite_generic(alpha: &Q, beta: &Q) -> bool {
    let c = (alpha + beta) / qi(8);
    let a = (&c * &c * qi(12) - alpha * beta) / qi(4);
    check_generic(alpha, beta).is_ok() && !a.is_zero()
}

/// The default point `α = 3, β = -1` followed by `extra` seeded random generic points.
pub fn parameter_points(seed: u64, extra: usize) -> Vec<ParamPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![ParamPoint::new(qi(3), qi(-1))];
    while points.len() < extra + 1 {
        let mut draw = || q(rng.gen_range(-30..=30), rng.gen_range(1..=9));
        let (alpha, beta) = (draw(), draw());
        if suite_generic(&alpha, &beta) && !points.iter().any(|p| p.values == (alpha.clone(), beta.clone())) {
            points.push(ParamPoint::new(alpha, beta));
        }
    }
    points
}

#[derive(Debug, Clone, Serialize)]
pub struct VogelSuiteReport {
    pub points: Vec<ParamPoint>,
    pub models: Vec<VogelReport>,
    pub v2: Vec<V2Report>,
    pub b3: Vec<B3Report>,
    pub transposition_models: Vec<PermRepReport>,
    pub morphisms: Vec<IdentityCheck>,
}

impl VogelSuiteReport {
    pub fn all_hold(&self) -> bool {
        self.models.iter().all(VogelReport::all_hold)
            && self.v2.iter().all(V2Report::all_hold)
            && self.b3.iter().all(B3Report::all_hold)
            && self.transposition_models.iter().all(PermRepReport::all_hold)
            && self.morphisms.iter().all(|c| c.holds)
    }
}

/// Runs every model, the structure checks and the factorization criteria at each point.
pub fn vogel_suite(points: &[ParamPoint]) -> Result<VogelSuiteReport, VogelError> {
    let mut report = VogelSuiteReport {
        points: points.to_vec(),
        models: Vec::new(),
        v2: Vec::new(),
        b3: Vec::new(),
        transposition_models: Vec::new(),
        morphisms: Vec::new(),
    };
    for point in points {
        let (alpha, beta) = (&point.values.0, &point.values.1);
        if !suite_generic(alpha, beta) {
            return Err(VogelError::NonGeneric(format!("alpha = {alpha}, beta = {beta}")));
        }
        for rep in three_strand_irreducibles(alpha, beta) {
            report.models.push(verify_vogel_relations(&rep, alpha, beta));
        }
        for (rep, expected) in [
            (VogelRep::six_dim(alpha, beta), [3, 2, 1]),
            (VogelRep::six_dim(beta, alpha), [3, 1, 2]),
            (VogelRep::eight_dim(alpha, beta), [4, 2, 2]),
        ] {
            let mut r = verify_vogel_relations(&rep, alpha, beta);
            r.checks.push(spectrum_check(&rep, alpha, beta, expected));
            report.models.push(r);
        }
        report.v2.push(verify_v2(alpha, beta)?);
        report.b3.push(b3_span_check(alpha, beta)?);
        for lambda in [alpha / qi(2), beta / qi(2)] {
            let m = (alpha + beta) / &lambda - qi(3);
            report.transposition_models.push(verify_perm_rep(4, &lambda, &m, &Q::one())?);
        }
        report.morphisms.extend(morphism_criteria(alpha, beta));
    }
    Ok(report)
}

/// The factorization criteria for both families, each compared with its predicted answer.
pub fn morphism_criteria(alpha: &Q, beta: &Q) -> Vec<IdentityCheck> {
    let half = |x: &Q| x / qi(2);
    let (ua, ub) = (half(alpha), half(beta));
    let loop_value = |u: &Q| qi(4) - (alpha + beta) / u;
    let generic_m = qi(5);
    let cases: Vec<(String, MorphismKind, Q, Q, Q, bool)> = vec![
        ("phi, u = v = alpha/2".into(), MorphismKind::Phi, ua.clone(), ua.clone(), generic_m.clone(), true),
        ("phi, u = v = beta/2".into(), MorphismKind::Phi, ub.clone(), ub.clone(), generic_m.clone(), true),
        ("phi, u = alpha/2, v = beta/2".into(), MorphismKind::Phi, ua.clone(), ub.clone(), generic_m.clone(), false),
        ("phi, u = v = alpha".into(), MorphismKind::Phi, alpha.clone(), alpha.clone(), generic_m.clone(), false),
        ("psi, u = v = alpha/2, u(m-4) = -(alpha+beta)".into(), MorphismKind::Psi, ua.clone(), ua.clone(), loop_value(&ua), true),
        ("psi, u = v = beta/2, u(m-4) = -(alpha+beta)".into(), MorphismKind::Psi, ub.clone(), ub.clone(), loop_value(&ub), true),
        ("psi, u = v = alpha/2, other m".into(), MorphismKind::Psi, ua.clone(), ua.clone(), loop_value(&ua) + Q::one(), false),
        ("psi, u = alpha/2, v = beta/2".into(), MorphismKind::Psi, ua.clone(), ub.clone(), loop_value(&ua), false),
    ];
    cases
        .into_iter()
        .map(|(name, kind, u, v, m, predicted)| {
            let got = morphism_factor_check(kind, &u, &v, &m, alpha, beta);
            check(&format!("{name} factors: {predicted}"), got == predicted, format!("computed {got}"))
        })
        .collect()
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Option<Q> {
    s.trim().parse::<Q>().ok()
}
