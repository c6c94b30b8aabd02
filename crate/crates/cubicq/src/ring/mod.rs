//! Exact arithmetic over `Z[a^±1, b^±1, c^±1]`, its fraction field and matrices over both.

mod bareiss;
mod coeff;
mod laurent;
mod matrix;
mod modp;
mod special;
mod unitpivot;

use thiserror::Error;

pub use bareiss::{RatFn, RatFnEntry};
pub use coeff::{Coeff, Fp, DEFAULT_PRIME};
pub use laurent::{named, Exps, LaurentPoly, VarSet};
pub use matrix::{Matrix, RingMatrix};
pub use modp::{echelon_mod_p, rank_mod_p, solve_left_mod_p};
pub use unitpivot::{det_unit_pivot, solve_unit_pivot, UnitEchelon};
pub use special::{genericity_guard, is_generic, is_generic_mod, point_mod, random_points, random_points_mod};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("polynomials live over different variable sets")]
    VarsetMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} is unassigned")]
    Unassigned(String),
    #[error("variable {0} is specialized to zero but appears with a negative exponent")]
    ZeroAtNegativeExponent(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("rank deficient at column {0}")]
    RankDeficient(usize),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("non-exact division during elimination")]
    InexactDivision,
    #[error("solution entry is not a Laurent polynomial")]
    NotInRing,
}

/// Convenience constructor for rationals from small integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Solves `m · X = b` over the fraction field, the `mat_solve_bareiss` operation.
pub fn mat_solve_bareiss(m: &RingMatrix, b: &RingMatrix) -> Result<Matrix<RatFnEntry<LaurentPoly>>, RingError> {
    m.solve_bareiss(b)
}

/// Exact quotient, the `lp_divide_exact` operation.
pub fn lp_divide_exact(p: &LaurentPoly, q: &LaurentPoly) -> Result<Option<LaurentPoly>, RingError> {
    p.divide_exact(q)
}
