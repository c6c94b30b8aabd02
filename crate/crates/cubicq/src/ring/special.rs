//! Specialization points for numerical certificates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{named, LaurentPoly};

/// `abc (a-b)(a-c)(b-c)(ab+c^2)(ac+b^2)(bc+a^2)`; points where it vanishes are rejected.
pub fn genericity_guard() -> LaurentPoly {
    let (a, b, c) = (named::a(), named::b(), named::c());
    let factors = [
        &a * &b * c.clone(),
        &a - &b,
        &a - &c,
        &b - &c,
        &a * &b + c.pow(2),
        &a * &c + b.pow(2),
        &b * &c + a.pow(2),
    ];
    factors.iter().fold(LaurentPoly::one(), |acc, f| &acc * f)
}

/// True when the integer point passes the guard.
pub fn is_generic(point: [i64; 3]) -> bool {
    let (a, b, c) = (point[0] as i128, point[1] as i128, point[2] as i128);
    a * b * c != 0
        && a != b
        && a != c
        && b != c
        && a * b + c * c != 0
        && a * c + b * b != 0
        && b * c + a * a != 0
}

/// True when the point passes the guard modulo `p`.
pub fn is_generic_mod(point: [u64; 3], p: u64) -> bool {
    genericity_guard().eval_mod(&point, p) != 0
}

/// Deterministic pseudo-random integer points passing the guard.
pub fn random_points(seed: u64, count: usize, bound: i64) -> Vec<[i64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = [rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)];
        if is_generic(p) {
            out.push(p);
        }
    }
    out
}

/// Deterministic pseudo-random points of `Z/p` passing the guard.
pub fn random_points_mod(seed: u64, count: usize, p: u64) -> Vec<[u64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let pt = [rng.gen_range(1..p), rng.gen_range(1..p), rng.gen_range(1..p)];
        if is_generic_mod(pt, p) {
            out.push(pt);
        }
    }
    out
}

/// Reduces a signed integer point into `Z/p`.
pub fn point_mod(point: [i64; 3], p: u64) -> [u64; 3] {
    point.map(|x| x.rem_euclid(p as i64) as u64)
}
