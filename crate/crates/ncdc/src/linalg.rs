//! Exact Gaussian elimination over the rationals.
//!
//! Small dense systems only: mirror re-orientation, bounded faithfulness
//! kernels and span membership all stay within a few hundred unknowns.

use num_traits::Zero;

use crate::algebra::{AlgElement, Scalar};

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row.
pub fn rref(matrix: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, pivot_row);
        let inv = matrix[row][col].recip();
        for c in col..cols {
            let v = &matrix[row][c] * &inv;
            matrix[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in col..cols {
                    let v = &matrix[r][c] - &factor * &matrix[row][c];
                    matrix[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right kernel of `matrix`, one vector per free column.
pub fn nullspace(mut matrix: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    for row in &matrix {
        debug_assert_eq!(row.len(), cols);
    }
    let pivots = rref(&mut matrix);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().copied().peekable();
    let free_cols: Vec<usize> = (0..cols)
        .filter(|&c| {
            if pivot_iter.peek() == Some(&c) {
                pivot_iter.next();
                false
            } else {
                true
            }
        })
        .collect();
    for &free in &free_cols {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = num_traits::One::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -matrix[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `matrix · x = rhs` where the unknowns are algebra elements and
/// the matrix is rational. Returns `None` when the matrix is singular.
pub fn solve_symbolic(
    mut matrix: Vec<Vec<Scalar>>,
    mut rhs: Vec<AlgElement>,
) -> Option<Vec<AlgElement>> {
    let n = matrix.len();
    for row in &matrix {
        if row.len() != n {
            return None;
        }
    }
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let inv = matrix[col][col].recip();
        for c in col..n {
            let v = &matrix[col][c] * &inv;
            matrix[col][c] = v;
        }
        rhs[col] = rhs[col].scale(&inv);
        for r in 0..n {
            if r != col && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in col..n {
                    let v = &matrix[r][c] - &factor * &matrix[col][c];
                    matrix[r][c] = v;
                }
                rhs[r] = rhs[r].sub(&rhs[col].scale(&factor));
            }
        }
    }
    Some(rhs)
}

/// Express `target` as a combination of the matrix columns, if possible.
/// `matrix` is row-major with `cols` columns.
pub fn solve_membership(
    matrix: &[Vec<Scalar>],
    cols: usize,
    target: &[Scalar],
) -> Option<Vec<Scalar>> {
    // Augment with the target column and reduce; consistency holds when
    // no pivot lands in the last column.
    let rows = matrix.len();
    debug_assert_eq!(target.len(), rows);
    let mut aug: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row = matrix[r].clone();
            debug_assert_eq!(row.len(), cols);
            row.push(target[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut solution = vec![Scalar::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        solution[pc] = aug[r][cols].clone();
    }
    Some(solution)
}
