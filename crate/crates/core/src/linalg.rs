//! Exact rational helpers.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Solves `sum_k x_k * cols[k] = target` exactly. The columns must be
/// linearly independent; returns `None` when the system is inconsistent.
pub fn solve(cols: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let rows = target.len();
    let n = cols.len();
    // augmented matrix, row-major
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Q> = cols.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let p = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let inv = Q::one() / m[pivot_row][col];
        for x in m[pivot_row].iter_mut() {
            *x *= inv;
        }
        let prow = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= *p * f;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| m[r][n]).collect())
}
