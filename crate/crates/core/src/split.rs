use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Vector};

/// An ordered basis of an ambient space whose first `n` vectors span one
/// summand and whose remaining vectors span a complement.
#[derive(Debug, Clone)]
pub(crate) struct Split {
    pub n: usize,
    pub basis: Matrix,
    pub inverse: Matrix,
}

impl Split {
    pub fn new(dim: usize, first: &[Vector], second: &[Vector]) -> Result<Self> {
        if first.len() + second.len() != dim {
            return Err(Error::Decomposition(format!(
                "{} + {} vectors cannot form a basis of a {dim}-dimensional space",
                first.len(),
                second.len()
            )));
        }
        if let Some(bad) = first.iter().chain(second).position(|v| v.len() != dim) {
            return Err(Error::Shape(format!("basis vector {bad} does not have length {dim}")));
        }
        let columns: Vec<Vector> = first.iter().chain(second).cloned().collect();
        let basis = Matrix::from_columns(&columns, dim)?;
        let inverse = basis.inverse().ok_or_else(|| {
            Error::Decomposition("the two lists are not linearly independent together".into())
        })?;
        Ok(Self { n: first.len(), basis, inverse })
    }

    /// Coordinates of `y` in the split basis, as (first part, second part).
    pub fn coords(&self, y: &[Rational]) -> (Vector, Vector) {
        let mut c = self.inverse.apply_unchecked(y);
        let tail = c.split_off(self.n);
        (c, tail)
    }

    pub fn first(&self, i: usize) -> Vector {
        self.basis.column(i)
    }

    pub fn second(&self, a: usize) -> Vector {
        self.basis.column(self.n + a)
    }
}
