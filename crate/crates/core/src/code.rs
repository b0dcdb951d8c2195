//! RS code construction: generator polynomial g(x) with zeros
//! alpha^b .. alpha^(n-k-1+b), the banded generator matrix G, the scaled
//! matrix G-bar of the equivalent narrow-sense code, both encoders, and the
//! column-scaled generalized-RS generator.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, MulCounter};
use crate::linalg::{vec_mat, Matrix};
use crate::poly;

/// Parameters and derived data of an (n, k) RS code whose zeros start at
/// alpha^b. `w_diag` is the diagonal of the scaling matrix W that maps this
/// code onto the narrow-sense code (entry i = alpha^((b-1)i)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCodeSpec {
    n: usize,
    k: usize,
    b: usize,
    g_coeffs: Vec<Elem>, // g_0 .. g_{n-k}, monic
    w_diag: Vec<Elem>,
    zeros_wrap: bool,
}

/// Expands g(x) by repeated linear-factor multiplication and fills the W
/// diagonal. `b` is normalized into [1, n] (taken mod n, with 0 mapped to n);
/// zero exponents reduce mod n, and a zero set that wraps past alpha^n is
/// accepted but flagged via [`RsCodeSpec::zeros_wrap`].
pub fn build_code(field: &Field, n: usize, k: usize, b: usize) -> Result<RsCodeSpec> {
    if n != field.n() {
        return Err(Error::InvalidCodeParameters(format!(
            "code length {n} must equal the order {} of alpha",
            field.n()
        )));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidCodeParameters(format!(
            "dimension k={k} must satisfy 1 <= k < n={n}"
        )));
    }
    let b = {
        let r = b % n;
        if r == 0 {
            n
        } else {
            r
        }
    };

    let mut g = vec![Elem::ONE];
    for i in b..(n - k + b) {
        g = poly::mul(field, &g, &[field.pow_alpha(i as i64), Elem::ONE]);
    }
    debug_assert_eq!(g.len(), n - k + 1);
    debug_assert_eq!(g[n - k], Elem::ONE);
    debug_assert!(!g[0].is_zero());

    let w_diag = (0..n)
        .map(|i| field.pow_alpha(((b - 1) * i) as i64))
        .collect();

    Ok(RsCodeSpec {
        n,
        k,
        b,
        g_coeffs: g,
        w_diag,
        zeros_wrap: b + (n - k) - 1 > n,
    })
}

impl RsCodeSpec {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn g_coeffs(&self) -> &[Elem] {
        &self.g_coeffs
    }

    pub fn w_diag(&self) -> &[Elem] {
        &self.w_diag
    }

    /// True when the zero set alpha^b .. alpha^(n-k-1+b) wraps past alpha^n.
    pub fn zeros_wrap(&self) -> bool {
        self.zeros_wrap
    }

    pub fn descriptor(&self) -> String {
        format!("rscode n={} k={} b={}", self.n, self.k, self.b)
    }

    /// The banded k x n generator matrix G: row i is the right cyclic shift
    /// of (g_0, ..., g_{n-k}, 0, ..., 0) by i positions.
    pub fn generator_matrix(&self) -> Matrix {
        banded(&self.g_coeffs, self.k, self.n)
    }

    /// The banded generator matrix of the narrow-sense code, built from
    /// gbar_i = g_i alpha^((b-1)i).
    pub fn gbar_matrix(&self, field: &Field) -> Matrix {
        banded(&self.gbar_coeffs(field), self.k, self.n)
    }

    pub fn gbar_coeffs(&self, field: &Field) -> Vec<Elem> {
        self.g_coeffs
            .iter()
            .enumerate()
            .map(|(i, &g)| field.mul(g, self.w_diag[i]))
            .collect()
    }

    /// Assembles a spec from raw parts without consistency checks; lets tests
    /// construct deliberately inconsistent specs.
    #[cfg(test)]
    pub(crate) fn test_with_parts(
        n: usize,
        k: usize,
        b: usize,
        g_coeffs: Vec<Elem>,
        w_diag: Vec<Elem>,
    ) -> RsCodeSpec {
        RsCodeSpec { n, k, b, g_coeffs, w_diag, zeros_wrap: false }
    }
}

fn banded(coeffs: &[Elem], k: usize, n: usize) -> Matrix {
    let mut m = Matrix::zeros(k, n);
    for i in 0..k {
        for (j, &c) in coeffs.iter().enumerate() {
            m[(i, i + j)] = c;
        }
    }
    m
}

/// Checks that `g_a` is a valid k x n generator matrix of the code: right
/// shape, every row divisible by g(x), and full rank. Done once when a
/// generator matrix is registered so later encodes can skip it.
pub fn validate_generator(field: &Field, spec: &RsCodeSpec, g_a: &Matrix) -> Result<()> {
    crate::linalg::solve_transform(field, g_a, &spec.generator_matrix())?;
    Ok(())
}

/// msg * G_a. The generator matrix is assumed validated at registration.
pub fn encode_generator(
    field: &Field,
    spec: &RsCodeSpec,
    g_a: &Matrix,
    msg: &[Elem],
) -> Result<Vec<Elem>> {
    if msg.len() != spec.k || g_a.rows() != spec.k || g_a.cols() != spec.n {
        return Err(Error::DimensionError(format!(
            "encode of {}-symbol message with {}x{} generator for ({}, {})",
            msg.len(),
            g_a.rows(),
            g_a.cols(),
            spec.n,
            spec.k
        )));
    }
    vec_mat(field, msg, g_a)
}

/// The evaluation map: output_i = m(alpha^i) with m(x) = sum msg_j x^j.
pub fn encode_evaluation(field: &Field, spec: &RsCodeSpec, msg: &[Elem]) -> Result<Vec<Elem>> {
    if msg.len() != spec.k {
        return Err(Error::DimensionError(format!(
            "evaluation encode of {}-symbol message, k={}",
            msg.len(),
            spec.k
        )));
    }
    Ok((0..spec.n)
        .map(|i| poly::eval(field, msg, field.pow_alpha(i as i64)))
        .collect())
}

/// Componentwise scaling by the W diagonal: output_i = v_i alpha^((b-1)i).
/// Index 0 multiplies by 1 and is copied through; the remaining n-1 products
/// are counted, so one call costs exactly n-1 counted multiplications.
pub fn narrow_sense_transform(
    field: &Field,
    spec: &RsCodeSpec,
    v: &[Elem],
    ctr: Option<&MulCounter>,
) -> Result<Vec<Elem>> {
    if v.len() != spec.n {
        return Err(Error::DimensionError(format!(
            "narrow-sense transform of length-{} vector, n={}",
            v.len(),
            spec.n
        )));
    }
    let mut out = Vec::with_capacity(spec.n);
    out.push(v[0]);
    for i in 1..spec.n {
        out.push(field.mul_ct(v[i], spec.w_diag[i], ctr));
    }
    Ok(out)
}

/// The k x n generalized-RS generator with entry (j, i) = v_i alpha^(ij);
/// all column multipliers must be nonzero.
pub fn build_grs_generator(field: &Field, n: usize, k: usize, v: &[Elem]) -> Result<Matrix> {
    if v.len() != n {
        return Err(Error::DimensionError(format!(
            "multiplier vector of length {} for n={n}",
            v.len()
        )));
    }
    if let Some(i) = v.iter().position(|x| x.is_zero()) {
        return Err(Error::ZeroMultiplier(i));
    }
    let mut m = Matrix::zeros(k, n);
    for j in 0..k {
        for i in 0..n {
            m[(j, i)] = field.mul(v[i], field.pow_alpha((i * j) as i64));
        }
    }
    Ok(m)
}
