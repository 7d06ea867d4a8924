use num_traits::Zero;

use super::{vector, Rational, Vector};
use crate::error::{shape_err, Result};

/// Structure constants of a bilinear map `A x B -> C`:
/// `map(b_i, b'_j) = sum_k c[k][i][j] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim_out: usize,
    dim_left: usize,
    dim_right: usize,
    entries: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(dim_out: usize, dim_left: usize, dim_right: usize) -> Self {
        Self {
            dim_out,
            dim_left,
            dim_right,
            entries: vec![Rational::zero(); dim_out * dim_left * dim_right],
        }
    }

    /// Builds from nested `[k][i][j]` arrays with the given shape.
    pub fn from_nested(
        nested: Vec<Vec<Vec<Rational>>>,
        dim_out: usize,
        dim_left: usize,
        dim_right: usize,
    ) -> Result<Self> {
        if nested.len() != dim_out {
            return shape_err(format!("expected {dim_out} output slices, found {}", nested.len()));
        }
        let mut entries = Vec::with_capacity(dim_out * dim_left * dim_right);
        for (k, slice) in nested.into_iter().enumerate() {
            if slice.len() != dim_left {
                return shape_err(format!("slice {k}: expected {dim_left} rows"));
            }
            for (i, row) in slice.into_iter().enumerate() {
                if row.len() != dim_right {
                    return shape_err(format!("slice {k} row {i}: expected {dim_right} entries"));
                }
                entries.extend(row);
            }
        }
        Ok(Self { dim_out, dim_left, dim_right, entries })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim_out)
            .map(|k| {
                (0..self.dim_left)
                    .map(|i| (0..self.dim_right).map(|j| self.get(k, i, j).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.dim_out, self.dim_left, self.dim_right)
    }

    fn offset(&self, k: usize, i: usize, j: usize) -> usize {
        assert!(
            k < self.dim_out && i < self.dim_left && j < self.dim_right,
            "tensor index ({k},{i},{j}) out of bounds"
        );
        (k * self.dim_left + i) * self.dim_right + j
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.entries[self.offset(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: Rational) {
        let o = self.offset(k, i, j);
        self.entries[o] = value;
    }

    /// Writes `value` as the image of the basis pair `(i, j)`.
    pub fn set_pair(&mut self, i: usize, j: usize, value: &[Rational]) {
        assert_eq!(value.len(), self.dim_out);
        for (k, x) in value.iter().enumerate() {
            self.set(k, i, j, x.clone());
        }
    }

    /// Image of the basis pair `(i, j)`.
    pub fn pair(&self, i: usize, j: usize) -> Vector {
        (0..self.dim_out).map(|k| self.get(k, i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.entries)
    }

    pub fn scale(&self, c: &Rational) -> Tensor3 {
        Self { entries: vector::scale(c, &self.entries), ..self.clone() }
    }

    /// `out_k = sum_{i,j} c[k][i][j] u_i v_j`.
    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        if u.len() != self.dim_left || v.len() != self.dim_right {
            return shape_err(format!(
                "arguments of length ({}, {}) for a bilinear map on {}x{}",
                u.len(),
                v.len(),
                self.dim_left,
                self.dim_right
            ));
        }
        Ok(self.apply_unchecked(u, v))
    }

    pub(crate) fn apply_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vector {
        debug_assert_eq!(u.len(), self.dim_left);
        debug_assert_eq!(v.len(), self.dim_right);
        let mut out = vector::zeros(self.dim_out);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.entries[(k * self.dim_left + i) * self.dim_right + j];
                    if !c.is_zero() {
                        *o += c * &w;
                    }
                }
            }
        }
        out
    }
}

/// Evaluates a bilinear map given by structure constants.
pub fn apply_bilinear(t: &Tensor3, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    t.apply(u, v)
}
