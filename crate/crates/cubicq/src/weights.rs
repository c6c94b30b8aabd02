//! Weight calculus for `sl_n` acting on tensor powers of the second exterior power: Casimir
//! values, the eigenvalues of the split Casimir on the tensor square, the Jucys-Murphy type
//! spectra along Bratteli paths, and the irreducibility criteria for small bricks.
//!
//! Every quantity is a rational function of the rank parameter `n`, kept as a pair of integer
//! polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::report::{check, IdentityCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("cannot parse weight {0:?}")]
    ParseWeight(String),
    #[error("cannot parse polynomial {0:?}")]
    ParsePoly(String),
    #[error("{0} is not a component of the tensor square")]
    NotInSquare(String),
    #[error("{0} -> {1} is not an edge of the Bratteli diagram")]
    NotAnEdge(String, String),
}

// ---------------------------------------------------------------------------------------------
// Polynomials and rational functions in n.

/// Integer polynomial in `n`, coefficients from the constant term up, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyN(Vec<BigInt>);

impl PolyN {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyN(coeffs);
        p.trim();
        p
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `k n + c`.
    pub fn linear(k: i64, c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c), BigInt::from(k)])
    }

    pub fn n() -> Self {
        Self::linear(1, 0)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.0.len().max(o.0.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        PolyN(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyN::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.0.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Lowest power of `n` with a nonzero coefficient.
    fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn shift_down(&self, k: usize) -> Self {
        PolyN(self.0[k.min(self.0.len())..].to_vec())
    }

    /// Integer roots, found among the divisors of the lowest nonzero coefficient.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let v = self.valuation();
        let mut roots = if v > 0 { vec![BigInt::zero()] } else { Vec::new() };
        let reduced = self.shift_down(v);
        let c0 = reduced.0[0].abs();
        let mut d = BigInt::one();
        while &d * &d <= c0 {
            if (&c0 % &d).is_zero() {
                for cand in [d.clone(), &c0 / &d] {
                    for x in [cand.clone(), -cand] {
                        if reduced.eval(&x).is_zero() && !roots.contains(&x) {
                            roots.push(x);
                        }
                    }
                }
            }
            d += 1;
        }
        roots.sort();
        roots
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "n")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for PolyN {
    type Err = WeightError;

    /// Parses expressions such as `-2(n+2)`, `4(2n-1)`, `-(7n+4)` or `n^2 - 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
        let mut parser = PolyParser { src: &cleaned, pos: 0 };
        let p = parser.expr().ok_or_else(|| WeightError::ParsePoly(s.into()))?;
        if parser.pos != cleaned.len() {
            return Err(WeightError::ParsePoly(s.into()));
        }
        Ok(p)
    }
}

struct PolyParser<'a> {
    src: &'a [char],
    pos: usize,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Option<PolyN> {
        let mut acc = self.signed_term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Some(acc)
    }

    fn signed_term(&mut self) -> Option<PolyN> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Some(self.term()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Option<PolyN> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some('(' | 'n' | '0'..='9')) {
            acc = acc.mul(&self.factor()?);
        }
        Some(acc)
    }

    fn factor(&mut self) -> Option<PolyN> {
        let base = match self.peek()? {
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                (self.peek() == Some(')')).then(|| self.pos += 1)?;
                e
            }
            'n' => {
                self.pos += 1;
                PolyN::n()
            }
            c if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.src[start..self.pos].iter().collect();
                PolyN::from_coeffs(vec![digits.parse().ok()?])
            }
            _ => return None,
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: usize = self.src[start..self.pos].iter().collect::<String>().parse().ok()?;
            return Some((0..e).fold(PolyN::constant(1), |acc, _| acc.mul(&base)));
        }
        Some(base)
    }
}

/// Rational function `num / den` in `n`.
#[derive(Debug, Clone)]
pub struct RatN {
    num: PolyN,
    den: PolyN,
}

impl RatN {
    pub fn new(num: PolyN, den: PolyN) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatN { num, den }.normalized()
    }

    pub fn poly(p: PolyN) -> Self {
        RatN { num: p, den: PolyN::constant(1) }
    }

    pub fn constant(c: i64) -> Self {
        Self::poly(PolyN::constant(c))
    }

    pub fn num(&self) -> &PolyN {
        &self.num
    }

    pub fn den(&self) -> &PolyN {
        &self.den
    }

    /// Removes common powers of `n` and integer content; makes the leading denominator
    /// coefficient positive.
    fn normalized(self) -> Self {
        let RatN { mut num, mut den } = self;
        if num.is_zero() {
            return RatN { num, den: PolyN::constant(1) };
        }
        let v = num.valuation().min(den.valuation());
        num = num.shift_down(v);
        den = den.shift_down(v);
        let mut g = num.content().gcd(&den.content());
        if den.0.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        if !g.is_one() {
            num = PolyN::from_coeffs(num.0.iter().map(|c| c / &g).collect());
            den = PolyN::from_coeffs(den.0.iter().map(|c| c / &g).collect());
        }
        RatN { num, den }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatN { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, num: i64, den: i64) -> Self {
        Self::new(self.num.scale(&BigInt::from(num)), self.den.scale(&BigInt::from(den)))
    }

    /// Multiplication by `n`, the normalization used in the printed spectra.
    pub fn times_n(&self) -> Self {
        Self::new(self.num.mul(&PolyN::n()), self.den.clone())
    }

    /// Division by `n`.
    pub fn over_n(&self) -> Self {
        Self::new(self.num.clone(), self.den.mul(&PolyN::n()))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at an integer `n`, `None` at a pole.
    pub fn eval(&self, n: i64) -> Option<BigRational> {
        let n = BigInt::from(n);
        let d = self.den.eval(&n);
        (!d.is_zero()).then(|| BigRational::new(self.num.eval(&n), d))
    }

    /// Whether `self` and `o` take different finite values at every integer `n ≥ n0`.
    pub fn differs_from_for_all(&self, o: &Self, n0: i64) -> bool {
        let diff = self.num.mul(&o.den).sub(&o.num.mul(&self.den));
        let threshold = BigInt::from(n0);
        let poles = self.den.mul(&o.den);
        !diff.is_zero()
            && diff.integer_roots().iter().all(|r| *r < threshold)
            && poles.integer_roots().iter().all(|r| *r < threshold)
    }
}

impl PartialEq for RatN {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for RatN {}

impl fmt::Display for RatN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyN::constant(1) {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &PolyN| {
            let s = p.to_string();
            if p.0.iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Serialize for RatN {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---------------------------------------------------------------------------------------------
// Weights.

/// Dominant weight `Σ m_i ϖ_i`, stored as the multiplicities of the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(BTreeMap<usize, u32>);

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    /// The fundamental weight `ϖ_i`.
    pub fn fundamental(i: usize) -> Self {
        Weight::from_pairs(&[(i, 1)])
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut w = Weight::zero();
        for &(i, m) in pairs {
            if m > 0 {
                *w.0.entry(i).or_insert(0) += m;
            }
        }
        w
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    /// Largest fundamental index involved, which must stay below `n`.
    pub fn max_index(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(i, m)| if *m == 1 { format!("w{i}") } else { format!("{m}w{i}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    /// Parses `0`, `w2`, `2w2+w4` or the same with `ϖ` in place of `w`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || WeightError::ParseWeight(s.into());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('ϖ', "w");
        if cleaned == "0" {
            return Ok(Weight::zero());
        }
        let mut pairs = Vec::new();
        for part in cleaned.split('+') {
            let (mult, index) = part.split_once('w').ok_or_else(err)?;
            let m: u32 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| err())? };
            let i: usize = index.parse().map_err(|_| err())?;
            if i == 0 {
                return Err(err());
            }
            pairs.push((i, m));
        }
        Ok(Weight::from_pairs(&pairs))
    }
}

fn w(s: &str) -> Weight {
    s.parse().expect("weight literal")
}

/// `(ϖ_i, ϖ_j) = min(i,j) - ij/n`.
pub fn pairing(i: usize, j: usize) -> RatN {
    let (i, j) = (i as i64, j as i64);
    RatN::new(PolyN::linear(i.min(j), -i * j), PolyN::n())
}

/// `(ϖ_i, 2ρ) = i(n - i)`.
pub fn rho_pairing(i: usize) -> RatN {
    let i = i as i64;
    RatN::poly(PolyN::linear(i, -i * i))
}

/// The Casimir value `(λ, λ + 2ρ)`.
pub fn casimir(lambda: &Weight) -> RatN {
    let mut total = RatN::constant(0);
    for (i, mi) in lambda.multiplicities() {
        for (j, mj) in lambda.multiplicities() {
            total = total.add(&pairing(i, j).scale((mi * mj) as i64, 1));
        }
        total = total.add(&rho_pairing(i).scale(mi as i64, 1));
    }
    total
}

/// The components of the tensor square of `V(ϖ_2)`.
pub fn tensor_square_components() -> Vec<Weight> {
    vec![w("2w2"), w("w1+w3"), w("w4")]
}

/// Eigenvalue of the split Casimir on the component `V(λ)` of the tensor square,
/// `(C(λ) - 2 C(ϖ_2)) / 2`.
pub fn tau_eigenvalue(lambda: &Weight) -> Result<RatN, WeightError> {
    if !tensor_square_components().contains(lambda) {
        return Err(WeightError::NotInSquare(lambda.to_string()));
    }
    Ok(casimir(lambda).sub(&casimir(&Weight::fundamental(2)).scale(2, 1)).scale(1, 2))
}

// ---------------------------------------------------------------------------------------------
// Tensor product data.

/// Bratteli diagram edges `μ -> μ'` with `V(μ')` a component of `V(μ) ⊗ V(ϖ_2)`, from the
/// first tensor power up to the fourth.
pub fn bratteli_edges() -> Vec<(Weight, Vec<Weight>)> {
    let table: &[(&str, &[&str])] = &[
        ("w2", &["2w2", "w1+w3", "w4"]),
        ("2w2", &["3w2", "w1+w2+w3", "w2+w4"]),
        ("w1+w3", &["w1+w2+w3", "w2+w4", "w1+w5", "2w3", "2w1+w4"]),
        ("w4", &["w2+w4", "w1+w5", "w6"]),
        ("3w2", &["4w2", "w1+2w2+w3", "2w2+w4"]),
        (
            "w1+w2+w3",
            &["w1+2w2+w3", "2w1+2w3", "2w1+w2+w4", "w2+2w3", "2w2+w4", "w1+w3+w4", "w1+w2+w5"],
        ),
        ("w2+w4", &["2w2+w4", "w1+w3+w4", "w1+w2+w5", "2w4", "w3+w5", "w2+w6"]),
        ("w1+w5", &["w1+w2+w5", "w3+w5", "2w1+w6", "w2+w6", "w1+w7"]),
        ("w6", &["w2+w6", "w1+w7", "w8"]),
        ("2w3", &["w2+2w3", "w1+w3+w4", "w3+w5"]),
        ("2w1+w4", &["2w1+w2+w4", "w1+w3+w4", "3w1+w5", "w1+w2+w5", "2w1+w6"]),
    ];
    table.iter().map(|(src, dst)| (w(src), dst.iter().map(|d| w(d)).collect())).collect()
}

/// Decompositions of `V(λ) ⊗ V(μ)` for `λ, μ` in the tensor square, with multiplicities.
pub fn square_products() -> Vec<((Weight, Weight), Vec<(Weight, u32)>)> {
    let table: &[(&str, &str, &[(&str, u32)])] = &[
        ("2w2", "2w2", &[("4w2", 1), ("w1+2w2+w3", 1), ("2w1+2w3", 1), ("2w2+w4", 1), ("w1+w3+w4", 1), ("2w4", 1)]),
        (
            "2w2",
            "w1+w3",
            &[
                ("w1+2w2+w3", 1),
                ("2w1+w2+w4", 1),
                ("w2+2w3", 1),
                ("2w2+w4", 1),
                ("w1+w3+w4", 1),
                ("w1+w2+w5", 1),
                ("w3+w5", 1),
            ],
        ),
        ("2w2", "w4", &[("2w2+w4", 1), ("w1+w2+w5", 1), ("w2+w6", 1)]),
        (
            "w1+w3",
            "w1+w3",
            &[
                ("2w1+2w3", 1),
                ("2w1+w2+w4", 1),
                ("w2+2w3", 1),
                ("2w2+w4", 1),
                ("w1+w3+w4", 2),
                ("3w1+w5", 1),
                ("w1+w2+w5", 2),
                ("2w4", 1),
                ("w3+w5", 1),
                ("2w1+w6", 1),
                ("w2+w6", 1),
            ],
        ),
        (
            "w1+w3",
            "w4",
            &[("w1+w3+w4", 1), ("w1+w2+w5", 1), ("w3+w5", 1), ("2w1+w6", 1), ("w2+w6", 1), ("w1+w7", 1)],
        ),
        ("w4", "w4", &[("2w4", 1), ("w3+w5", 1), ("w2+w6", 1), ("w1+w7", 1), ("w8", 1)]),
    ];
    table
        .iter()
        .map(|(l, m, parts)| ((w(l), w(m)), parts.iter().map(|(p, k)| (w(p), *k)).collect()))
        .collect()
}

fn is_edge(from: &Weight, to: &Weight) -> bool {
    bratteli_edges().iter().any(|(src, dst)| src == from && dst.contains(to))
}

/// Multiplicity of `V(top)` in `V(λ) ⊗ V(μ)` for `λ, μ` in the tensor square.
fn square_multiplicity(lambda: &Weight, mu: &Weight, top: &Weight) -> u32 {
    square_products()
        .into_iter()
        .find(|((l, m), _)| (l == lambda && m == mu) || (l == mu && m == lambda))
        .and_then(|(_, parts)| parts.into_iter().find(|(p, _)| p == top).map(|(_, k)| k))
        .unwrap_or(0)
}

/// Eigenvalue of `W_r = Y_{r+1} - Y_r` along the path `μ_{r-1} -> μ_r -> μ_{r+1}`, where
/// `Y_r = (C(μ_r) - C(μ_{r-1}) - C(ϖ_2)) / 2`.
pub fn path_w_spectrum(path: &[Weight; 3]) -> Result<RatN, WeightError> {
    for pair in path.windows(2) {
        if !is_edge(&pair[0], &pair[1]) {
            return Err(WeightError::NotAnEdge(pair[0].to_string(), pair[1].to_string()));
        }
    }
    let [prev, mid, next] = path;
    Ok(casimir(next).sub(&casimir(mid).scale(2, 1)).add(&casimir(prev)).scale(1, 2))
}

// ---------------------------------------------------------------------------------------------
// Bricks.

/// Irreducibility criterion for a brick on which `W` and `u` act diagonally.
///
/// In dimension two: `s` is a reflection, `u` has two distinct eigenvalues and the spectra of
/// `u` and `W` differ. In higher dimension: `s` is a reflection and the eigenvalues are pairwise
/// distinct with disjoint spectra.
pub fn brick_irreducibility(dim: usize, sp_u: &[RatN], sp_w: &[RatN], s_is_reflection: bool) -> bool {
    let distinct = |v: &[RatN]| v.iter().enumerate().all(|(i, x)| v[i + 1..].iter().all(|y| x != y));
    let as_set = |v: &[RatN]| {
        let mut out: Vec<RatN> = Vec::new();
        for x in v {
            if !out.contains(x) {
                out.push(x.clone());
            }
        }
        out
    };
    match dim {
        0 | 1 => false,
        2 => {
            let (u, w) = (as_set(sp_u), as_set(sp_w));
            let same = u.len() == w.len() && u.iter().all(|x| w.contains(x));
            s_is_reflection && u.len() == 2 && !same
        }
        _ => {
            let all: Vec<RatN> = sp_u.iter().chain(sp_w).cloned().collect();
            s_is_reflection && sp_u.len() == dim && sp_w.len() == dim && distinct(&all)
        }
    }
}

/// The same criterion with every inequality required at each integer `n ≥ n0`.
pub fn brick_irreducible_for_all(dim: usize, sp_u: &[RatN], sp_w: &[RatN], n0: i64) -> bool {
    let differ = |x: &RatN, y: &RatN| x.differs_from_for_all(y, n0);
    let reflection = reflection_for_all(sp_u, n0);
    match dim {
        0 | 1 => false,
        2 => {
            // Two distinct eigenvalues of u, and some eigenvalue of u is never an eigenvalue of W.
            let u_distinct = sp_u.len() == 2 && differ(&sp_u[0], &sp_u[1]);
            let u_escapes = sp_u.iter().any(|x| sp_w.iter().all(|y| differ(x, y)));
            reflection && u_distinct && u_escapes
        }
        _ => {
            let all: Vec<&RatN> = sp_u.iter().chain(sp_w).collect();
            let pairwise = all.iter().enumerate().all(|(i, x)| all[i + 1..].iter().all(|y| differ(x, y)));
            reflection && sp_u.len() == dim && sp_w.len() == dim && pairwise
        }
    }
}

/// The eigenvalue of `u = t_{34}` on vectors where the transposition acts by `-1`.
pub fn antisymmetric_value() -> RatN {
    RatN::new(PolyN::constant(-4), PolyN::n())
}

/// `s` acts as a reflection when exactly one eigenvalue of `u` equals `-4/n`.
pub fn acts_as_reflection(sp_u: &[RatN]) -> bool {
    let minus = antisymmetric_value();
    sp_u.len() >= 2 && sp_u.iter().filter(|x| **x == minus).count() == 1
}

fn reflection_for_all(sp_u: &[RatN], n0: i64) -> bool {
    let minus = antisymmetric_value();
    let hits = sp_u.iter().filter(|x| **x == minus).count();
    sp_u.len() >= 2 && hits == 1 && sp_u.iter().filter(|x| **x != minus).all(|x| x.differs_from_for_all(&minus, n0))
}

/// A brick as printed: base in the second tensor power, vertices in the third, top weight in
/// the fourth, and the spectra multiplied by `n`.
#[derive(Debug, Clone, Serialize)]
pub struct PrintedBrick {
    pub source: String,
    pub base: Weight,
    pub vertices: Vec<Weight>,
    pub top: Weight,
    pub printed_u: Vec<RatN>,
    pub printed_w: Vec<RatN>,
}

fn brick(source: &str, base: &str, vertices: &[&str], top: &str, u: &[&str], wsp: &[&str]) -> PrintedBrick {
    let poly = |s: &&str| RatN::poly(s.parse::<PolyN>().expect("polynomial literal"));
    PrintedBrick {
        source: source.into(),
        base: w(base),
        vertices: vertices.iter().map(|v| w(v)).collect(),
        top: w(top),
        printed_u: u.iter().map(poly).collect(),
        printed_w: wsp.iter().map(poly).collect(),
    }
}

/// The bricks used in the irreducibility arguments for the fourth tensor power. An empty
/// printed `u` spectrum means it was not printed.
pub fn printed_bricks() -> Vec<PrintedBrick> {
    vec![
        brick("2-dim bricks, column 1", "w1+w3", &["w1+w2+w3", "2w1+w4"], "2w1+w2+w4", &["-4", "2(n-2)"], &["-2(n+2)", "4(n-1)"]),
        brick("2-dim bricks, column 2", "w1+w3", &["w1+w2+w3", "2w3"], "w2+2w3", &["-4", "2(n-2)"], &["-2(n+2)", "4(n-1)"]),
        brick("2-dim bricks, column 3", "w1+w3", &["2w1+w4", "w1+w5"], "2w1+w6", &["-4", "-4(n+1)"], &["-4(2n+1)", "4(n-1)"]),
        brick("2-dim bricks, column 4", "w4", &["w1+w5", "w6"], "w1+w7", &["-4", "-4(n+1)"], &["-4(2n+1)", "4(n-1)"]),
        brick("2-dim bricks, column 5", "2w2", &["3w2", "w1+w2+w3"], "w1+2w2+w3", &["-4", "2(n-2)"], &["-4(n+1)", "2(n-2)"]),
        brick(
            "3-dim bricks, column 1",
            "2w2",
            &["3w2", "w1+w2+w3", "w2+w4"],
            "2w2+w4",
            &[],
            &["-4(2n+1)", "-2(n+2)", "4(2n-1)"],
        ),
        brick(
            "3-dim bricks, column 2",
            "w1+w3",
            &["2w3", "w2+w4", "w1+w5"],
            "w3+w5",
            &[],
            &["-2(3n+2)", "-2(n+2)", "2(3n-2)"],
        ),
        brick(
            "3-dim bricks, column 3",
            "w4",
            &["w2+w4", "w1+w5", "w6"],
            "w2+w6",
            &[],
            &["-2(5n+2)", "-2(n+2)", "2(5n-2)"],
        ),
        brick("w1+w2+w5 brick at 2w2", "2w2", &["w1+w2+w3", "w2+w4"], "w1+w2+w5", &["-4", "-4(n+1)"], &["-(7n+4)", "3n-4"]),
        brick("w1+w2+w5 brick at w4", "w4", &["w2+w4", "w1+w5"], "w1+w2+w5", &["-4", "2(n-2)"], &["-(3n+4)", "5n-4"]),
        brick("w1+w3+w4 brick at 2w2", "2w2", &["w1+w2+w3", "w2+w4"], "w1+w3+w4", &["-4", "2(n-2)"], &["-4(n+1)", "2(3n-2)"]),
    ]
}

/// A brick recomputed from the tensor product data.
#[derive(Debug, Clone, Serialize)]
pub struct BrickReport {
    pub source: String,
    pub top: Weight,
    pub vertices: Vec<Weight>,
    /// Eigenvalues of `n·u` from the decomposition of `V(base) ⊗ V(ν)`.
    pub u_spectrum: Vec<RatN>,
    /// Eigenvalues of `n·W` along each path.
    pub w_spectrum: Vec<RatN>,
    pub irreducible_generic: bool,
    pub irreducible_from_7: bool,
    pub checks: Vec<IdentityCheck>,
}

fn same_multiset(a: &[RatN], b: &[RatN]) -> bool {
    let mut rest = b.to_vec();
    a.len() == b.len()
        && a.iter().all(|x| match rest.iter().position(|y| y == x) {
            Some(i) => {
                rest.remove(i);
                true
            }
            None => false,
        })
}

fn show(v: &[RatN]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// First index `n` from which the irreducibility verdicts are required.
pub const SMALLEST_RANK: i64 = 7;

/// Recomputes a brick: its vertices from the Bratteli diagram, the spectrum of `u` from the
/// products of tensor-square components, and the spectrum of `W` from the Casimir values.
pub fn analyze_brick(b: &PrintedBrick) -> Result<BrickReport, WeightError> {
    let vertices: Vec<Weight> = bratteli_edges()
        .into_iter()
        .filter(|(src, _)| is_edge(&b.base, src) && is_edge(src, &b.top))
        .map(|(src, _)| src)
        .collect();
    let mut u = Vec::new();
    for nu in tensor_square_components() {
        for _ in 0..square_multiplicity(&b.base, &nu, &b.top) {
            u.push(tau_eigenvalue(&nu)?);
        }
    }
    let wsp = vertices
        .iter()
        .map(|v| path_w_spectrum(&[b.base.clone(), v.clone(), b.top.clone()]))
        .collect::<Result<Vec<_>, _>>()?;
    let dim = vertices.len();
    let generic = brick_irreducibility(dim, &u, &wsp, acts_as_reflection(&u));
    let from_7 = brick_irreducible_for_all(dim, &u, &wsp, SMALLEST_RANK);
    let u_scaled: Vec<RatN> = u.iter().map(RatN::times_n).collect();
    let w_scaled: Vec<RatN> = wsp.iter().map(RatN::times_n).collect();

    let mut printed_vertices = b.vertices.clone();
    printed_vertices.sort();
    let mut sorted = vertices.clone();
    sorted.sort();
    let mut checks = vec![
        check(
            &format!("{}: vertices", b.source),
            sorted == printed_vertices,
            sorted.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
        ),
        check(&format!("{}: brick dimension equals the u multiplicity", b.source), u.len() == dim, format!("{}", u.len())),
    ];
    if !b.printed_u.is_empty() {
        checks.push(check(
            &format!("{}: Sp(n u) = {}", b.source, show(&b.printed_u)),
            same_multiset(&u_scaled, &b.printed_u),
            format!("computed {}", show(&u_scaled)),
        ));
    }
    checks.push(check(
        &format!("{}: Sp(n W) = {}", b.source, show(&b.printed_w)),
        same_multiset(&w_scaled, &b.printed_w),
        format!("computed {}", show(&w_scaled)),
    ));
    checks.push(check(&format!("{}: irreducible for n >= {SMALLEST_RANK}", b.source), generic && from_7, ""));
    Ok(BrickReport {
        source: b.source.clone(),
        top: b.top.clone(),
        vertices,
        u_spectrum: u_scaled,
        w_spectrum: w_scaled,
        irreducible_generic: generic,
        irreducible_from_7: from_7,
        checks,
    })
}

// ---------------------------------------------------------------------------------------------
// The relation among the eigenvalues of the braid generator.

/// Exponents of `a = -exp(e_a h)`, `b = exp(e_b h)`, `c = exp(e_c h)`, the three τ values.
pub fn eigenvalue_exponents() -> [RatN; 3] {
    [tau_eigenvalue(&w("w1+w3")), tau_eigenvalue(&w("2w2")), tau_eigenvalue(&w("w4"))].map(|x| x.expect("component"))
}

pub fn exp_identity_checks() -> Vec<IdentityCheck> {
    let [ea, eb, ec] = eigenvalue_exponents();
    let lhs = ea.scale(3, 1);
    let rhs = eb.scale(2, 1).add(&ec);
    // Signs: a^3 carries (-1)^3 and b^2 c carries +1, so a^3 = -b^2 c.
    let sign_a3 = (-1i32).pow(3);
    let sign_b2c = 1;
    let at_9 = |x: &RatN| x.eval(9).expect("no pole at 9");
    vec![
        check("3 e_a = 2 e_b + e_c", lhs == rhs, format!("{lhs} = {rhs}")),
        check("sign of a^3 is opposite to b^2 c", sign_a3 == -sign_b2c, ""),
        check("exponents agree at n = 9", at_9(&lhs) == at_9(&rhs), format!("{}", at_9(&lhs))),
    ]
}

/// `a^3 + b^2 c = 0` for the eigenvalues of the braid generator on the tensor square.
pub fn check_exp_identity() -> bool {
    exp_identity_checks().iter().all(|c| c.holds)
}

// ---------------------------------------------------------------------------------------------
// Suite.

#[derive(Debug, Clone, Serialize)]
pub struct WeightsReport {
    pub tau: Vec<(Weight, RatN)>,
    pub bricks: Vec<BrickReport>,
    pub checks: Vec<IdentityCheck>,
}

impl WeightsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

/// The printed τ values on the tensor square.
pub fn printed_tau() -> Vec<(Weight, RatN)> {
    let over_n = |s: &str| RatN::poly(s.parse::<PolyN>().expect("polynomial literal")).over_n();
    vec![(w("w1+w3"), over_n("-4")), (w("2w2"), over_n("2(n-2)")), (w("w4"), over_n("-4(n+1)"))]
}

pub fn verify_weights() -> Result<WeightsReport, WeightError> {
    let mut checks = Vec::new();
    let mut tau = Vec::new();
    for (lambda, printed) in printed_tau() {
        let got = tau_eigenvalue(&lambda)?;
        checks.push(check(&format!("tau on V({lambda}) = {printed}"), got == printed, format!("computed {got}")));
        tau.push((lambda, got));
    }
    let mut bricks = Vec::new();
    for b in printed_bricks() {
        let report = analyze_brick(&b)?;
        checks.extend(report.checks.iter().cloned());
        bricks.push(report);
    }
    checks.extend(exp_identity_checks());
    Ok(WeightsReport { tau, bricks, checks })
}
