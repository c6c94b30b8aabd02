use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::RingError;

/// Exponent vector, one signed entry per variable.
pub type Exps = SmallVec<[i32; 4]>;

/// Ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

static ABC: LazyLock<VarSet> = LazyLock::new(|| VarSet::new(&["a", "b", "c"]));

impl VarSet {
    pub fn new(names: &[&str]) -> Self {
        VarSet(names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into())
    }

    /// The default variable set `a, b, c`.
    pub fn abc() -> Self {
        ABC.clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Element of the Laurent polynomial ring over the integers in the variables of a [`VarSet`].
///
/// Terms are kept in a map ordered lexicographically on exponent vectors; no stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero_in(vars: &VarSet) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Self::zero_in(&VarSet::abc())
    }

    pub fn constant_in(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero_in(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(smallvec::smallvec![0; vars.len()], c);
        }
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::constant_in(&VarSet::abc(), c)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `coeff * prod vars[i]^exps[i]`.
    pub fn monomial_in(vars: &VarSet, coeff: impl Into<BigInt>, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length must match the variable set");
        let mut p = Self::zero_in(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(Exps::from_slice(exps), c);
        }
        p
    }

    pub fn monomial(coeff: impl Into<BigInt>, exps: [i32; 3]) -> Self {
        Self::monomial_in(&VarSet::abc(), coeff, &exps)
    }

    /// The variable `name` of the default ring.
    pub fn var(name: &str) -> Self {
        Self::var_in(&VarSet::abc(), name).expect("unknown variable")
    }

    pub fn var_in(vars: &VarSet, name: &str) -> Option<Self> {
        let i = vars.index_of(name)?;
        let mut e: Exps = smallvec::smallvec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero_in(vars);
        p.terms.insert(e, BigInt::one());
        Some(p)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// Returns the integer if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when the polynomial is `±` a monomial, i.e. a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Inverse of a unit, `None` otherwise.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv: Exps = e.iter().map(|x| -x).collect();
        let mut p = Self::zero_in(&self.vars);
        p.terms.insert(inv, c.clone());
        Some(p)
    }

    pub fn pow(&self, k: i32) -> Self {
        if k < 0 {
            let inv = self.unit_inverse().expect("negative power of a non-unit");
            return inv.pow(-k);
        }
        let mut acc = Self::constant_in(&self.vars, 1);
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Leading term under lexicographic order on exponent vectors.
    pub fn leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Per-variable minimum and maximum exponents, `None` for zero.
    pub fn exponent_bounds(&self) -> Option<(Exps, Exps)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for i in 0..e.len() {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        Some((lo, hi))
    }

    fn check_vars(&self, other: &Self) -> Result<(), RingError> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(RingError::VarsetMismatch)
        }
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_vars(other)?;
        let mut acc: HashMap<Exps, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2.iter()).map(|(x, y)| x + y).collect();
                debug_assert!(e.iter().all(|x| x.abs() < 1 << 20), "exponent overflow");
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Exact quotient `self / q` inside the Laurent ring, `None` when `q` does not divide `self`.
    ///
    /// Division by leading terms in lexicographic order. Quotient exponents are confined to the
    /// box `[min(p) - min(q), max(p) - max(q)]`, which any true quotient respects, so a leading
    /// monomial leaving the box proves non-divisibility.
    pub fn divide_exact(&self, q: &Self) -> Result<Option<Self>, RingError> {
        self.check_vars(q)?;
        if q.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero_in(&self.vars)));
        }
        if let Some(inv) = q.unit_inverse() {
            return Ok(Some(self * &inv));
        }
        let (plo, phi) = self.exponent_bounds().unwrap();
        let (qlo, qhi) = q.exponent_bounds().unwrap();
        let lo: Exps = plo.iter().zip(&qlo).map(|(a, b)| a - b).collect();
        let hi: Exps = phi.iter().zip(&qhi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Ok(None);
        }
        let (qe, qc) = q.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero_in(&self.vars);
        while let Some((re, rc)) = rem.leading() {
            let (d, r) = rc.div_rem(&qc);
            if !r.is_zero() {
                return Ok(None);
            }
            let te: Exps = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            if te.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Ok(None);
            }
            let step = Self { vars: self.vars.clone(), terms: [(te.clone(), d.clone())].into_iter().collect() };
            rem = &rem - &(&step * q);
            quot.add_term(te, d);
        }
        Ok(Some(quot))
    }

    /// Evaluates at nonzero-or-safe rational values given per variable name.
    pub fn specialize(&self, values: &HashMap<String, BigRational>) -> Result<BigRational, RingError> {
        let vals: Vec<Option<&BigRational>> =
            self.vars.names().iter().map(|n| values.get(n)).collect();
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = vals[i].ok_or_else(|| RingError::Unassigned(self.vars.names()[i].clone()))?;
                if k < 0 && v.is_zero() {
                    return Err(RingError::ZeroAtNegativeExponent(self.vars.names()[i].clone()));
                }
                t *= v.pow(k);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates at a point given in variable order.
    pub fn specialize_at(&self, point: &[BigRational]) -> Result<BigRational, RingError> {
        let map = self.vars.names().iter().cloned().zip(point.iter().cloned()).collect();
        self.specialize(&map)
    }

    /// Applies a ring substitution sending each variable to a unit given in variable order.
    pub fn substitute_units(&self, images: &[LaurentPoly]) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let mut t = Self::constant_in(&self.vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    t = &t * &images[i].pow(k);
                }
            }
            out += &t;
        }
        out
    }

    /// The ring automorphism inverting every variable.
    pub fn invert_vars(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect(),
        }
    }

    /// Reduces every coefficient modulo `p` and evaluates at a point of `Z/p`.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let mut total: u128 = 0;
        for (e, c) in &self.terms {
            let cm = c.mod_floor(&BigInt::from(p));
            let mut t: u128 = u64::try_from(cm).unwrap() as u128;
            for (i, &k) in e.iter().enumerate() {
                let base = if k >= 0 { point[i] } else { super::coeff::inv_mod(point[i], p) };
                t = t * super::coeff::pow_mod(base, k.unsigned_abs() as u64, p) as u128 % p as u128;
            }
            total = (total + t) % p as u128;
        }
        total as u64
    }

    /// Parses the printed syntax in the default ring.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        Self::parse_in(&VarSet::abc(), s)
    }

    /// Parses a sum of monomial terms such as `3*a^2*b^-1*c - 2 + b`.
    pub fn parse_in(vars: &VarSet, s: &str) -> Result<Self, RingError> {
        parse_terms(vars, s)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for (i, &x) in e.iter().enumerate() {
                let name = &self.vars.names()[i];
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

fn parse_terms(vars: &VarSet, s: &str) -> Result<LaurentPoly, RingError> {
    let bytes: Vec<char> = s.chars().collect();
    let mut pos = 0usize;
    let mut out = LaurentPoly::zero_in(vars);
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let err = |pos: usize, msg: &str| RingError::Parse { pos, msg: msg.to_string() };
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| bytes[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty input"));
    }
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        let mut sign = 1;
        if bytes[pos] == '+' || bytes[pos] == '-' {
            if bytes[pos] == '-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(err(pos, "expected '+' or '-'"));
        }
        first = false;
        let mut coeff = BigInt::from(sign);
        let mut exps: Exps = smallvec::smallvec![0; vars.len()];
        let mut factors = 0;
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Err(err(pos, "expected a factor"));
            }
            if bytes[pos].is_ascii_digit() {
                coeff *= read_int(&mut pos).unwrap();
            } else if bytes[pos].is_alphabetic() {
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_alphanumeric() || bytes[pos] == '_') {
                    pos += 1;
                }
                let name: String = bytes[start..pos].iter().collect();
                let i = vars.index_of(&name).ok_or_else(|| err(start, &format!("unknown variable '{name}'")))?;
                skip_ws(&mut pos);
                let mut k: i32 = 1;
                if pos < bytes.len() && bytes[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let mut neg = false;
                    if pos < bytes.len() && bytes[pos] == '-' {
                        neg = true;
                        pos += 1;
                    }
                    let n = read_int(&mut pos).ok_or_else(|| err(pos, "expected an exponent"))?;
                    k = i32::try_from(n).map_err(|_| err(pos, "exponent too large"))?;
                    if neg {
                        k = -k;
                    }
                }
                exps[i] += k;
            } else {
                return Err(err(pos, "expected a number or a variable"));
            }
            factors += 1;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == '*' {
                pos += 1;
            } else {
                break;
            }
        }
        debug_assert!(factors > 0);
        out.add_term(exps, coeff);
    }
    Ok(out)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| x.try_add(y).expect("varset mismatch"));
forward_binop!(Sub, sub, |x, y| x.try_add(&-y).expect("varset mismatch"));
forward_binop!(Mul, mul, |x, y| x.try_mul(y).expect("varset mismatch"));

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert!(self.vars.same(&rhs.vars), "varset mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert!(self.vars.same(&rhs.vars), "varset mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Named elements of the default ring.
pub mod named {
    use super::LaurentPoly;

    pub fn a() -> LaurentPoly {
        LaurentPoly::var("a")
    }
    pub fn b() -> LaurentPoly {
        LaurentPoly::var("b")
    }
    pub fn c() -> LaurentPoly {
        LaurentPoly::var("c")
    }
    /// `a + b + c`
    pub fn u() -> LaurentPoly {
        a() + b() + c()
    }
    /// `ab + ac + bc`
    pub fn v() -> LaurentPoly {
        a() * b() + a() * c() + b() * c()
    }
    /// `abc`
    pub fn w() -> LaurentPoly {
        LaurentPoly::monomial(1, [1, 1, 1])
    }
    /// `(a - b)(a - c)(a^2 + bc)`, the divisor of the membership test.
    pub fn delta() -> LaurentPoly {
        (a() - b()) * (a() - c()) * (a().pow(2) + b() * c())
    }
}
