//! Elimination over the Laurent ring that pivots on units whenever possible and falls back to
//! fraction-free elimination only on the block where no unit pivot exists.

use super::bareiss::RatFn;
use super::matrix::Matrix;
use super::{LaurentPoly, RingError};

/// Solves `m · x = rhs` over the fraction field.
pub fn solve_unit_pivot(m: &Matrix<LaurentPoly>, rhs: &[LaurentPoly]) -> Result<Vec<RatFn<LaurentPoly>>, RingError> {
    let (nr, nc) = (m.rows(), m.cols());
    if rhs.len() != nr {
        return Err(RingError::Shape("right-hand side length differs".into()));
    }
    let mut rows: Vec<Vec<LaurentPoly>> = (0..nr)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut used = vec![false; nr];
    let mut pivot_of: Vec<Option<usize>> = vec![None; nc];
    loop {
        // Pick the unit entry with the sparsest row among unused rows and unpivoted columns.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            if used[i] {
                continue;
            }
            let weight: usize = row.iter().map(LaurentPoly::num_terms).sum();
            for j in 0..nc {
                if pivot_of[j].is_none() && row[j].is_unit() && best.is_none_or(|(_, _, w)| weight < w) {
                    best = Some((i, j, weight));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        let inv = rows[pi][pj].unit_inverse().expect("unit");
        for x in rows[pi].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = rows[pi].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pi || row[pj].is_zero() {
                continue;
            }
            let f = row[pj].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        used[pi] = true;
        pivot_of[pj] = Some(pi);
    }
    let rest: Vec<usize> = (0..nc).filter(|&j| pivot_of[j].is_none()).collect();
    let free_rows: Vec<usize> = (0..nr).filter(|&i| !used[i]).collect();
    let mut sol: Vec<Option<RatFn<LaurentPoly>>> = vec![None; nc];
    if rest.is_empty() {
        if free_rows.iter().any(|&i| !rows[i][nc].is_zero()) {
            return Err(RingError::Inconsistent);
        }
    } else {
        if free_rows.len() < rest.len() {
            return Err(RingError::RankDeficient(rest[0]));
        }
        let sub = Matrix::from_fn(free_rows.len(), rest.len(), |i, j| rows[free_rows[i]][rest[j]].clone());
        let b = Matrix::from_fn(free_rows.len(), 1, |i, _| rows[free_rows[i]][nc].clone());
        let s = sub.solve_bareiss(&b)?;
        for (k, &j) in rest.iter().enumerate() {
            sol[j] = Some(s.get(k, 0).0.clone().simplify());
        }
    }
    for j in 0..nc {
        if let Some(pi) = pivot_of[j] {
            let mut acc = RatFn::from_ring(rows[pi][nc].clone());
            for &d in &rest {
                if !rows[pi][d].is_zero() {
                    let term = RatFn::from_ring(rows[pi][d].clone()).mul(sol[d].as_ref().unwrap());
                    acc = acc.sub(&term);
                }
            }
            sol[j] = Some(acc.simplify());
        }
    }
    Ok(sol.into_iter().map(|x| x.expect("every column solved")).collect())
}

/// Row echelon form of a list of vectors over the Laurent ring using only unit pivots, so the
/// reduction never leaves the ring.
#[derive(Debug, Clone)]
pub struct UnitEchelon {
    /// Pivot rows, normalized to 1 at their pivot and zero at every other pivot column.
    pub rows: Vec<Vec<LaurentPoly>>,
    pub pivots: Vec<usize>,
    /// Input vectors that admitted no unit pivot, reduced against the pivot rows.
    pub leftover: Vec<Vec<LaurentPoly>>,
}

impl UnitEchelon {
    pub fn new(vectors: Vec<Vec<LaurentPoly>>) -> Self {
        let mut ech = UnitEchelon { rows: Vec::new(), pivots: Vec::new(), leftover: Vec::new() };
        let mut pending: Vec<Vec<LaurentPoly>> = vectors;
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in pending.iter().enumerate() {
                let weight: usize = row.iter().map(LaurentPoly::num_terms).sum();
                for (j, x) in row.iter().enumerate() {
                    if x.is_unit() && best.is_none_or(|(_, _, w)| weight < w) {
                        best = Some((i, j, weight));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            let mut prow = pending.swap_remove(pi);
            let inv = prow[pj].unit_inverse().expect("unit");
            for x in prow.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for row in ech.rows.iter_mut().chain(pending.iter_mut()) {
                eliminate(row, &prow, pj);
            }
            pending.retain(|r| r.iter().any(|x| !x.is_zero()));
            ech.rows.push(prow);
            ech.pivots.push(pj);
        }
        ech.leftover = pending;
        ech
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Subtracts the pivot rows so the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let mut out = v.to_vec();
        for (row, &pj) in self.rows.iter().zip(&self.pivots) {
            eliminate(&mut out, row, pj);
        }
        out
    }
}

fn eliminate(row: &mut [LaurentPoly], prow: &[LaurentPoly], pj: usize) {
    if row[pj].is_zero() {
        return;
    }
    let f = row[pj].clone();
    for (x, p) in row.iter_mut().zip(prow) {
        if !p.is_zero() {
            *x = &*x - &(&f * p);
        }
    }
}

/// Determinant by cofactor expansion along unit pivots, finishing with fraction-free elimination
/// on whatever block admits no unit pivot.
pub fn det_unit_pivot(m: &Matrix<LaurentPoly>) -> Result<LaurentPoly, RingError> {
    if m.rows() != m.cols() {
        return Err(RingError::Shape("determinant of a non-square matrix".into()));
    }
    let mut rows: Vec<Vec<LaurentPoly>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut live_rows: Vec<usize> = (0..m.rows()).collect();
    let mut live_cols: Vec<usize> = (0..m.cols()).collect();
    let mut det = LaurentPoly::one();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, &i) in live_rows.iter().enumerate() {
            let weight: usize = live_cols.iter().map(|&j| rows[i][j].num_terms()).sum();
            for (ci, &j) in live_cols.iter().enumerate() {
                if rows[i][j].is_unit() && best.is_none_or(|(_, _, w)| weight < w) {
                    best = Some((ri, ci, weight));
                }
            }
        }
        let Some((ri, ci, _)) = best else { break };
        let (pi, pj) = (live_rows[ri], live_cols[ci]);
        let inv = rows[pi][pj].unit_inverse().expect("unit");
        det = &det * &rows[pi][pj];
        if (ri + ci) % 2 == 1 {
            det = -&det;
        }
        let prow = rows[pi].clone();
        for &i in &live_rows {
            if i == pi || rows[i][pj].is_zero() {
                continue;
            }
            let f = &rows[i][pj] * &inv;
            for &j in &live_cols {
                if !prow[j].is_zero() {
                    rows[i][j] = &rows[i][j] - &(&f * &prow[j]);
                }
            }
        }
        live_rows.remove(ri);
        live_cols.remove(ci);
    }
    if live_rows.is_empty() {
        return Ok(det);
    }
    let rest = Matrix::from_fn(live_rows.len(), live_cols.len(), |i, j| rows[live_rows[i]][live_cols[j]].clone());
    Ok(&det * &rest.determinant()?)
}
