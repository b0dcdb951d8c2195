//! Dense vectors and matrices over GF(q): product, Gauss-Jordan inverse,
//! the basis-transformation solve against a banded generator matrix, and the
//! cyclic-completion operator that extends a k x n matrix to n x n by
//! repeated right cyclic shifts.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>, // row-major
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    pub fn diag(d: &[Elem]) -> Matrix {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Upper-left r x c submatrix.
    pub fn top_left(&self, r: usize, c: usize) -> Matrix {
        assert!(r <= self.rows && c <= self.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    pub fn mul(&self, f: &Field, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionError(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, rhs[(t, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse with first-nonzero pivoting.
    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionError(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero());
            let pivot = pivot.ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let scale = f.inv(a[(col, col)])?;
            for j in 0..n {
                a[(col, j)] = f.mul(scale, a[(col, j)]);
                inv[(col, j)] = f.mul(scale, inv[(col, j)]);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)];
                for j in 0..n {
                    let av = f.mul(factor, a[(col, j)]);
                    let iv = f.mul(factor, inv[(col, j)]);
                    a[(r, j)] = f.add(a[(r, j)], av);
                    inv[(r, j)] = f.add(inv[(r, j)], iv);
                }
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Row vector times matrix.
pub fn vec_mat(f: &Field, v: &[Elem], m: &Matrix) -> Result<Vec<Elem>> {
    if v.len() != m.rows() {
        return Err(Error::DimensionError(format!(
            "vector of length {} times {}x{}",
            v.len(),
            m.rows(),
            m.cols()
        )));
    }
    let mut out = vec![Elem::ZERO; m.cols()];
    for (t, &a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for j in 0..m.cols() {
            out[j] = f.add(out[j], f.mul(a, m[(t, j)]));
        }
    }
    Ok(out)
}

/// Solves G_a = A * G for the unique k x k invertible A, where `g` is the
/// banded generator matrix (row i carries the generator coefficients shifted
/// i places, so it is in row echelon form with g_0 != 0 leading each row).
///
/// Each row of `g_a` is divided by g(x); a nonzero remainder means the row is
/// outside the code and the quotient coefficients are exactly that row of A.
pub fn solve_transform(f: &Field, g_a: &Matrix, g: &Matrix) -> Result<Matrix> {
    if g_a.rows() != g.rows() || g_a.cols() != g.cols() || g.rows() >= g.cols() {
        return Err(Error::DimensionError(format!(
            "solve_transform with g_a {}x{}, g {}x{}",
            g_a.rows(),
            g_a.cols(),
            g.rows(),
            g.cols()
        )));
    }
    let k = g.rows();
    let n = g.cols();
    let g_poly = &g.row(0)[..=n - k];
    debug_assert!(!g_poly[0].is_zero(), "banded generator must have g_0 != 0");

    let mut a_rows = Vec::with_capacity(k);
    for r in 0..k {
        let (quo, rem) = poly::divrem(f, g_a.row(r), g_poly);
        if !poly::is_zero(&rem) {
            return Err(Error::NotACodewordBasis { row: r });
        }
        let mut row = quo;
        row.resize(k, Elem::ZERO);
        a_rows.push(row);
    }
    let a = Matrix::from_rows(&a_rows);
    // G_a rank-deficient <=> A singular
    a.inverse(f)?;
    Ok(a)
}

/// Appends n-k rows to a k x n matrix, each the right cyclic shift of the
/// previous row by one position.
pub fn cyclic_complete(u: &Matrix) -> Result<Matrix> {
    let (k, n) = (u.rows(), u.cols());
    if k >= n {
        return Err(Error::DimensionError(format!(
            "cyclic completion of {k}x{n} needs k < n"
        )));
    }
    let mut rows: Vec<Vec<Elem>> = (0..k).map(|i| u.row(i).to_vec()).collect();
    for i in k..n {
        let prev = &rows[i - 1];
        let mut next = Vec::with_capacity(n);
        next.push(prev[n - 1]);
        next.extend_from_slice(&prev[..n - 1]);
        rows.push(next);
    }
    Ok(Matrix::from_rows(&rows))
}
