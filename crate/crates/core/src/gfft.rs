//! The n-point Galois Field Fourier Transform over GF(q) with kernel alpha.
//!
//! Forward matrix F has entry (i, j) = alpha^(ij), inverse F^-1 has
//! alpha^(-ij); F F^-1 = I because n is odd in characteristic 2, so the
//! scalar n equals 1. Transforms are direct O(n^2) matrix products; the plan
//! caches both matrices since the recovery precomputation reuses submatrices
//! of F^-1.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{vec_mat, Matrix};

#[derive(Debug, Clone)]
pub struct GfftPlan {
    n: usize,
    f: Matrix,
    f_inv: Matrix,
}

impl GfftPlan {
    /// Builds the transform pair for the field's designated length n.
    pub fn new(field: &Field) -> GfftPlan {
        let n = field.n();
        let mut f = Matrix::zeros(n, n);
        let mut f_inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let e = (i * j) as i64;
                f[(i, j)] = field.pow_alpha(e);
                f_inv[(i, j)] = field.pow_alpha(-e);
            }
        }
        GfftPlan { n, f, f_inv }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f_matrix(&self) -> &Matrix {
        &self.f
    }

    pub fn f_inv_matrix(&self) -> &Matrix {
        &self.f_inv
    }

    /// v * F, i.e. output_j = sum_i v_i alpha^(ij).
    pub fn forward(&self, field: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(v)?;
        vec_mat(field, v, &self.f)
    }

    /// v * F^-1; inverse of [`forward`](Self::forward).
    pub fn inverse(&self, field: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(v)?;
        vec_mat(field, v, &self.f_inv)
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::DimensionError(format!(
                "transform length {} applied to vector of length {}",
                self.n,
                v.len()
            )));
        }
        Ok(())
    }
}

/// Right cyclic shift by s positions: output_i = v_(i-s mod n). Negative s
/// shifts left.
pub fn cyclic_shift(v: &[Elem], s: i64) -> Vec<Elem> {
    let n = v.len();
    if n == 0 {
        return vec![];
    }
    let s = s.rem_euclid(n as i64) as usize;
    (0..n).map(|i| v[(i + n - s) % n]).collect()
}
