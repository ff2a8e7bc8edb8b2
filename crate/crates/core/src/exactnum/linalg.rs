//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::Rational;

/// Solves a consistent linear system given as augmented rows
/// `[a_0 .. a_{n-1} | b]` with `n = unknowns`. Returns `None` when the
/// system is inconsistent or underdetermined.
pub fn solve_consistent(rows: &mut [Vec<Rational>], unknowns: usize) -> Option<Vec<Rational>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return None;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = &*x - &factor * p;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[unknowns].is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| rows[r][unknowns].clone()).collect())
}
