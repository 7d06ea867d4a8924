use num_traits::One;

use super::{vector, Matrix, Rational, Vector};
use crate::error::{shape_err, Result};

/// Solution set of `A x = b`: `particular + span(nullspace_basis)`, or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Option<Vector>,
    pub nullspace_basis: Vec<Vector>,
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }
}

/// Exact Gauss-Jordan elimination. Free variables are set to zero in the
/// particular solution; the nullspace basis has one vector per free column
/// (that column set to 1, the other free columns to 0).
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> Result<AffineSolutionSet> {
    if a.rows() != b.len() {
        return shape_err(format!(
            "right-hand side of length {} for a system with {} equations",
            b.len(),
            a.rows()
        ));
    }
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug = Matrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let pivots = aug.row_reduce();

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace_basis = free
        .iter()
        .map(|&f| {
            let mut n = vector::zeros(cols);
            n[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                if p < cols {
                    n[p] = -aug[(r, f)].clone();
                }
            }
            n
        })
        .collect();

    if pivots.last() == Some(&cols) {
        return Ok(AffineSolutionSet { particular: None, nullspace_basis });
    }
    let mut particular = vector::zeros(cols);
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug[(r, cols)].clone();
    }
    Ok(AffineSolutionSet { particular: Some(particular), nullspace_basis })
}
