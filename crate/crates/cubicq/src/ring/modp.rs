//! Dense linear algebra over `Z/p` for rank certificates at specialized points.

use super::coeff::{inv_mod, mul_mod};

/// Row echelon form in place; returns the pivot columns.
pub fn echelon_mod_p(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m = rows.to_vec();
    echelon_mod_p(&mut m, p).len()
}

/// Solves `x · rows = target` when `target` lies in the row space.
pub fn solve_left_mod_p(rows: &[Vec<u64>], target: &[u64], p: u64) -> Option<Vec<u64>> {
    // Eliminate on the transpose augmented with the target as last column.
    let n = rows.len();
    let m = target.len();
    let mut aug: Vec<Vec<u64>> = (0..m).map(|j| {
        let mut r: Vec<u64> = rows.iter().map(|row| row[j] % p).collect();
        r.push(target[j] % p);
        r
    }).collect();
    let pivots = echelon_mod_p(&mut aug, p);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![0u64; n];
    for (i, &c) in pivots.iter().enumerate().rev() {
        let mut s = aug[i][n];
        for j in c + 1..n {
            s = (s + p - mul_mod(aug[i][j], x[j], p)) % p;
        }
        x[c] = s;
    }
    Some(x)
}
