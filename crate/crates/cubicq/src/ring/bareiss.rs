use std::fmt;

use super::coeff::Coeff;
use super::matrix::Matrix;
use super::{LaurentPoly, RingError};

/// Element of the fraction field, an unreduced pair compared by cross-multiplication.
#[derive(Clone)]
pub struct RatFn<T> {
    pub num: T,
    pub den: T,
}

impl<T: Coeff> RatFn<T> {
    pub fn new(num: T, den: T) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn from_ring(x: T) -> Self {
        let den = x.one_like();
        RatFn { num: x, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The ring element `num / den` when the division is exact.
    pub fn to_ring(&self) -> Option<T> {
        self.num.exact_div(&self.den)
    }

    /// Replaces the pair by `(num/den, 1)` when the division is exact.
    pub fn simplify(self) -> Self {
        match self.to_ring() {
            Some(q) => Self::from_ring(q),
            None => self,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFn { num: self.num.add(&o.num), den: self.den.clone() };
        }
        RatFn { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFn { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| RatFn { num: self.den.clone(), den: self.num.clone() })
    }
}

impl<T: Coeff> PartialEq for RatFn<T> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for RatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<T: Coeff> fmt::Debug for RatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({:?} / {:?})", self.num, self.den)
    }
}

/// Outcome of fraction-free elimination: the echelon form and the pivot columns.
struct Echelon<T> {
    a: Vec<Vec<T>>,
    pivots: Vec<usize>,
    sign_flips: usize,
}

/// Fraction-free elimination on the first `ncols` columns; later columns ride along.
///
/// Every division is exact by Sylvester's identity, so entries stay in the ring.
fn eliminate<T: Coeff>(mut a: Vec<Vec<T>>, ncols: usize, stop_on_gap: bool) -> Result<Echelon<T>, RingError> {
    let m = a.len();
    let width = a.first().map_or(0, |r| r.len());
    let one = match a.iter().flatten().next() {
        Some(x) => x.one_like(),
        None => return Ok(Echelon { a, pivots: vec![], sign_flips: 0 }),
    };
    let mut prev = one;
    let mut pivots = Vec::new();
    let mut sign_flips = 0;
    let mut r = 0;
    for k in 0..ncols {
        if r == m {
            break;
        }
        let best = (r..m).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].size_hint());
        let Some(p) = best else {
            if stop_on_gap {
                return Err(RingError::RankDeficient(k));
            }
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign_flips += 1;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                for j in k + 1..width {
                    if !row[j].is_zero() {
                        row[j] = row[j].mul(&pivot_row[k]).exact_div(&prev).ok_or(RingError::InexactDivision)?;
                    }
                }
                continue;
            }
            for j in k + 1..width {
                let t = pivot_row[k].mul(&row[j]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = if t.is_zero() { t } else { t.exact_div(&prev).ok_or(RingError::InexactDivision)? };
            }
            row[k] = row[k].zero_like();
        }
        prev = a[r][k].clone();
        pivots.push(k);
        r += 1;
    }
    Ok(Echelon { a, pivots, sign_flips })
}

impl<T: Coeff> Matrix<T> {
    fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows()).map(|i| self.row(i).to_vec()).collect()
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> Result<T, RingError> {
        if self.rows() != self.cols() {
            return Err(RingError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows();
        match eliminate(self.to_rows(), n, true) {
            Ok(e) => {
                let d = e.a[n - 1][n - 1].clone();
                Ok(if e.sign_flips % 2 == 1 { d.neg() } else { d })
            }
            Err(RingError::RankDeficient(_)) => Ok(self.get(0, 0).zero_like()),
            Err(e) => Err(e),
        }
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> Result<usize, RingError> {
        Ok(eliminate(self.to_rows(), self.cols(), false)?.pivots.len())
    }

    /// Solves `self · X = rhs` over the fraction field with fraction-free Bareiss elimination.
    ///
    /// `self` must have full column rank; surplus equations must be consistent.
    pub fn solve_bareiss(&self, rhs: &Matrix<T>) -> Result<Matrix<RatFnEntry<T>>, RingError> {
        if rhs.rows() != self.rows() {
            return Err(RingError::Shape("right-hand side row count differs".into()));
        }
        let n = self.cols();
        let k = rhs.cols();
        let aug = self.hconcat(rhs)?;
        let e = eliminate(aug.to_rows(), n, true)?;
        let a = e.a;
        for row in a.iter().skip(n) {
            if row[n..].iter().any(|x| !x.is_zero()) {
                return Err(RingError::Inconsistent);
            }
        }
        let det = a[n - 1][n - 1].clone();
        let mut out: Vec<Vec<RatFnEntry<T>>> = vec![Vec::with_capacity(k); n];
        for col in 0..k {
            let mut y: Vec<T> = vec![det.zero_like(); n];
            for i in (0..n).rev() {
                let mut acc = det.mul(&a[i][n + col]);
                for j in i + 1..n {
                    if !a[i][j].is_zero() && !y[j].is_zero() {
                        acc = acc.sub(&a[i][j].mul(&y[j]));
                    }
                }
                y[i] = if acc.is_zero() { acc } else { acc.exact_div(&a[i][i]).ok_or(RingError::InexactDivision)? };
            }
            for (i, yi) in y.into_iter().enumerate() {
                out[i].push(RatFnEntry(RatFn::new(yi, det.clone())));
            }
        }
        Matrix::from_rows(out)
    }

    /// Inverse over the ring, `None` when the determinant is not a unit.
    pub fn inverse_in_ring(&self) -> Result<Option<Matrix<T>>, RingError> {
        let n = self.rows();
        let id = Matrix::identity(n, &self.get(0, 0).one_like());
        let sol = self.solve_bareiss(&id)?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut r = Vec::with_capacity(n);
            for j in 0..n {
                match sol.get(i, j).0.to_ring() {
                    Some(x) => r.push(x),
                    None => return Ok(None),
                }
            }
            rows.push(r);
        }
        Ok(Some(Matrix::from_rows(rows)?))
    }
}

/// Fraction-field entry wrapper so solutions can live in a [`Matrix`].
#[derive(Clone, PartialEq, Debug)]
pub struct RatFnEntry<T: Coeff>(pub RatFn<T>);

impl<T: Coeff> Coeff for RatFnEntry<T> {
    fn zero_like(&self) -> Self {
        RatFnEntry(RatFn::from_ring(self.0.num.zero_like()))
    }
    fn one_like(&self) -> Self {
        RatFnEntry(RatFn::from_ring(self.0.num.one_like()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        RatFnEntry(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        RatFnEntry(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        RatFnEntry(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        RatFnEntry(self.0.neg())
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        o.0.inv().map(|i| RatFnEntry(self.0.mul(&i)))
    }
}

impl Matrix<RatFnEntry<LaurentPoly>> {
    /// Certifies that every entry lies in the Laurent ring and returns the ring matrix.
    pub fn certify_in_ring(&self) -> Result<Matrix<LaurentPoly>, RingError> {
        self.try_map(|x| x.0.to_ring().ok_or(RingError::NotInRing))
    }
}
