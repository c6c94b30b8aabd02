use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;

/// Commutative integral domain with exact division, the scalar interface of the matrix code.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Returns `q` with `other * q = self` when it exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Cost hint used to prefer small pivots.
    fn size_hint(&self) -> usize {
        1
    }
}

impl Coeff for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero_in(self.vars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::constant_in(self.vars(), 1)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.divide_exact(other).ok().flatten()
    }
    fn size_hint(&self) -> usize {
        self.num_terms()
    }
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Default prime for modular rank computations, `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// Element of the prime field `Z/p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub value: u64,
    pub modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp { value: value % modulus, modulus }
    }

    pub fn from_bigint(x: &BigInt, modulus: u64) -> Self {
        use num_integer::Integer;
        let r = x.mod_floor(&BigInt::from(modulus));
        Fp { value: u64::try_from(r).unwrap(), modulus }
    }

    pub fn pow(&self, e: u64) -> Self {
        Fp { value: pow_mod(self.value, e, self.modulus), modulus: self.modulus }
    }

    pub fn inverse(&self) -> Option<Self> {
        (self.value != 0).then(|| Fp { value: inv_mod(self.value, self.modulus), modulus: self.modulus })
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

pub(crate) fn mul_mod(x: u64, y: u64, p: u64) -> u64 {
    ((x as u128 * y as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime via Fermat's little theorem.
pub(crate) fn inv_mod(x: u64, p: u64) -> u64 {
    assert!(!x.is_multiple_of(p), "inverse of zero modulo {p}");
    pow_mod(x, p - 2, p)
}

impl Coeff for Fp {
    fn zero_like(&self) -> Self {
        Fp { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp { value: ((self.value as u128 + other.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Fp { value: mul_mod(self.value, other.value, self.modulus), modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.mul(&inv))
    }
}
