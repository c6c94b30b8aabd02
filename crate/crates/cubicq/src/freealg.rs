//! Finite linear combinations of freely reduced signed words with Laurent coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{named, LaurentPoly, RingError};
use crate::words::{free_reduce_letters, SignedWord, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed element: {0}")]
    Format(String),
}

/// Element of the free algebra on the Artin generators and their inverses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgElem {
    strands: usize,
    terms: BTreeMap<Vec<i32>, LaurentPoly>,
}

/// Automorphisms and anti-automorphisms induced by the braid group symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgSymmetry {
    /// Letterwise inversion with `a, b, c` inverted, a Z-algebra automorphism.
    Phi,
    /// Word inversion with `a, b, c` inverted, a Z-algebra anti-automorphism.
    Psi,
    /// Word reversal with coefficients kept, an R-algebra anti-automorphism.
    PhiPsi,
}

impl AlgElem {
    pub fn zero(strands: usize) -> Self {
        AlgElem { strands, terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        Self::term(LaurentPoly::one(), &[], strands)
    }

    /// `coeff · word`, the word being freely reduced first.
    pub fn term(coeff: LaurentPoly, letters: &[i32], strands: usize) -> Self {
        let mut x = Self::zero(strands);
        x.add_term(free_reduce_letters(letters), coeff);
        x
    }

    pub fn word(letters: &[i32], strands: usize) -> Self {
        Self::term(LaurentPoly::one(), letters, strands)
    }

    pub fn from_word(w: &SignedWord) -> Self {
        Self::word(w.letters(), w.strands())
    }

    pub fn scalar(c: LaurentPoly, strands: usize) -> Self {
        Self::term(c, &[], strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn with_strands(mut self, strands: usize) -> Self {
        self.strands = strands;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, letters: &[i32]) -> LaurentPoly {
        self.terms.get(letters).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, letters: Vec<i32>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(letters) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::constant(-1))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Product in the free algebra: concatenate, then freely reduce.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check(other)?;
        let mut out = Self::zero(self.strands);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(free_reduce_letters(&w), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn apply_symmetry(&self, kind: AlgSymmetry) -> Self {
        let mut out = Self::zero(self.strands);
        for (w, c) in &self.terms {
            let (word, coeff): (Vec<i32>, LaurentPoly) = match kind {
                AlgSymmetry::Phi => (w.iter().map(|l| -l).collect(), c.invert_vars()),
                AlgSymmetry::Psi => (w.iter().rev().map(|l| -l).collect(), c.invert_vars()),
                AlgSymmetry::PhiPsi => (w.iter().rev().copied().collect(), c.clone()),
            };
            out.add_term(word, coeff);
        }
        out
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Serializable form with printed coefficients.
    pub fn to_json(&self) -> ElemJson {
        ElemJson {
            strands: Some(self.strands),
            terms: self.terms.iter().map(|(w, c)| TermJson { coeff: c.to_string(), word: w.clone() }).collect(),
        }
    }

    pub fn from_json(j: &ElemJson) -> Result<Self, AlgError> {
        let max_letter = j.terms.iter().flat_map(|t| t.word.iter()).map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        let strands = j.strands.unwrap_or((max_letter + 1).max(3));
        let mut x = Self::zero(strands);
        for t in &j.terms {
            let w = SignedWord::new(t.word.clone(), strands)?;
            x.add_term(free_reduce_letters(w.letters()), LaurentPoly::parse(&t.coeff)?);
        }
        Ok(x)
    }

    pub fn parse_json(s: &str) -> Result<Self, AlgError> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| AlgError::Format(e.to_string()))?;
        let j: ElemJson = if v.is_array() {
            ElemJson { strands: None, terms: serde_json::from_value(v).map_err(|e| AlgError::Format(e.to_string()))? }
        } else {
            serde_json::from_value(v).map_err(|e| AlgError::Format(e.to_string()))?
        };
        Self::from_json(&j)
    }

    fn check(&self, other: &Self) -> Result<(), AlgError> {
        if self.strands == other.strands {
            Ok(())
        } else {
            Err(AlgError::StrandMismatch(self.strands, other.strands))
        }
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(|l| l.to_string()).collect();
                format!("({c})*[{}]", word.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElem/{}({self})", self.strands)
    }
}

macro_rules! alg_binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl std::ops::$tr<&AlgElem> for &AlgElem {
            type Output = AlgElem;
            fn $method(self, rhs: &AlgElem) -> AlgElem {
                self.$call(rhs).expect("strand mismatch")
            }
        }
        impl std::ops::$tr<AlgElem> for AlgElem {
            type Output = AlgElem;
            fn $method(self, rhs: AlgElem) -> AlgElem {
                self.$call(&rhs).expect("strand mismatch")
            }
        }
    };
}

alg_binop!(Add, add, try_add);
alg_binop!(Sub, sub, try_sub);
alg_binop!(Mul, mul, try_mul);

/// JSON element format: a strand count and a list of coefficient/word pairs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ElemJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<i32>,
}

fn t(c: LaurentPoly, w: &[i32]) -> AlgElem {
    AlgElem::term(c, w, 3)
}

/// The two defining relations as `lhs - rhs`, on three strands.
pub fn defining_relations() -> (AlgElem, AlgElem) {
    let a = named::a();
    let one = LaurentPoly::one();
    let ai = a.pow(-1);
    let a2 = a.pow(2);
    let a3 = a.pow(3);
    let a4 = a.pow(4);
    let rhs1 = [
        t(one.clone(), &[1, 2, -1]),
        t(-&ai, &[1, 2]),
        t(a.clone(), &[1, -2]),
        t(a.clone(), &[-1, 2]),
        t(-&a3, &[-1, -2]),
        t(ai.clone(), &[2, 1]),
        t(-&a, &[2, -1]),
        t(-&a, &[-2, 1]),
        t(a3.clone(), &[-2, -1]),
        t(a2.clone(), &[-1, -2, 1]),
        t(-&a2, &[1, -2, -1]),
    ];
    let r1 = rhs1.iter().fold(t(one.clone(), &[-1, 2, 1]), |acc, x| &acc - x);
    let rhs2 = [
        t(one.clone(), &[1, 1, 2, 1, 1]),
        t(a.clone(), &[2, 1, 1, 2]),
        t(-&a, &[1, 2, 2, 1]),
        t(a2.clone(), &[2, 2, 1]),
        t(-&a2, &[2, 1, 1]),
        t(a2.clone(), &[1, 2, 2]),
        t(-&a2, &[1, 1, 2]),
        t(-&a3, &[2, 2]),
        t(a3.clone(), &[1, 1]),
        t(a4.clone(), &[2]),
        t(-&a4, &[1]),
    ];
    let r2 = rhs2.iter().fold(t(one, &[1, 2, 1, 1, 2]), |acc, x| &acc - x);
    (r1, r2)
}

/// `(s_i - a)(s_i - b)(s_i - c)` on the given strand count.
pub fn cubic_relation(i: i32, strands: usize) -> AlgElem {
    let s = AlgElem::word(&[i], strands);
    let shift = |x: LaurentPoly| &s - &AlgElem::scalar(x, strands);
    shift(named::a()) * shift(named::b()) * shift(named::c())
}
