//! Bivariate polynomials over GF(q) for interpolation-based list decoding.
//!
//! Q(x, y) = sum_j q_j(x) y^j is stored as a vector of x-polynomials indexed
//! by y-degree. Monomials x^a y^b are ordered by ((1, k-1)-weighted degree,
//! y-degree) lexicographically; binomial coefficients reduce mod 2, so a
//! Hasse derivative term survives iff the order's bits are a subset of the
//! exponent's bits.

use crate::gf::{Elem, Field, MulCounter};
use crate::poly;

/// C(n, r) mod 2 by Lucas' theorem.
fn binom_mod2(n: usize, r: usize) -> bool {
    n & r == r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BiPoly {
    /// coeffs[j] = coefficients of y^j as a polynomial in x (ascending).
    pub coeffs: Vec<Vec<Elem>>,
}

impl BiPoly {
    pub fn y_power(j: usize) -> BiPoly {
        let mut coeffs = vec![vec![]; j + 1];
        coeffs[j] = vec![Elem::ONE];
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| poly::is_zero(c))
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !poly::is_zero(c))
    }

    /// Leading monomial (weighted degree, y-degree) under the
    /// (1, wy)-weighted order; None for the zero polynomial.
    pub fn leading_monomial(&self, wy: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (j, c) in self.coeffs.iter().enumerate() {
            if let Some(d) = poly::degree(c) {
                let key = (d + wy * j, j);
                if best.map_or(true, |b| key > b) {
                    best = Some(key);
                }
            }
        }
        best
    }

    /// Hasse derivative of order (a, b) evaluated at (x0, y0):
    /// sum over r >= a, s >= b with C(r,a) C(s,b) odd of
    /// q_{r,s} x0^(r-a) y0^(s-b).
    pub fn hasse_eval(
        &self,
        f: &Field,
        a: usize,
        b: usize,
        x0: Elem,
        y0: Elem,
        ctr: Option<&MulCounter>,
    ) -> Elem {
        let mut total = Elem::ZERO;
        for (s, xpoly) in self.coeffs.iter().enumerate() {
            if s < b || !binom_mod2(s, b) {
                continue;
            }
            // y0^(s-b), then sum_r C(r,a) q_{r,s} x0^(r-a) by ascending powers
            let ypow = f.pow(y0, (s - b) as u64);
            let mut xsum = Elem::ZERO;
            let mut xpow = Elem::ONE;
            for (r, &c) in xpoly.iter().enumerate().skip(a) {
                if binom_mod2(r, a) && !c.is_zero() {
                    xsum = f.add(xsum, f.mul_ct(c, xpow, ctr));
                }
                xpow = f.mul_ct(xpow, x0, ctr);
            }
            total = f.add(total, f.mul_ct(xsum, ypow, ctr));
        }
        total
    }

    /// self += scale * other.
    pub fn add_scaled(&mut self, f: &Field, other: &BiPoly, scale: Elem, ctr: Option<&MulCounter>) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), vec![]);
        }
        for (j, src) in other.coeffs.iter().enumerate() {
            let dst = &mut self.coeffs[j];
            if dst.len() < src.len() {
                dst.resize(src.len(), Elem::ZERO);
            }
            for (i, &c) in src.iter().enumerate() {
                dst[i] = f.add(dst[i], f.mul_ct(scale, c, ctr));
            }
        }
    }

    /// self *= (x - x0).
    pub fn mul_by_x_minus(&mut self, f: &Field, x0: Elem, ctr: Option<&MulCounter>) {
        for c in &mut self.coeffs {
            if poly::is_zero(c) {
                continue;
            }
            let mut shifted = vec![Elem::ZERO];
            shifted.extend_from_slice(c);
            for (i, &orig) in c.iter().enumerate() {
                shifted[i] = f.add(shifted[i], f.mul_ct(x0, orig, ctr));
            }
            *c = shifted;
        }
    }

    /// Largest s such that x^s divides every coefficient; 0 for zero polys.
    pub fn x_content(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|c| c.iter().position(|x| !x.is_zero()))
            .min()
            .unwrap_or(0)
    }

    pub fn shift_x_down(&mut self, s: usize) {
        if s == 0 {
            return;
        }
        for c in &mut self.coeffs {
            if c.len() <= s {
                c.clear();
            } else {
                c.drain(..s);
            }
        }
    }

    /// Q(0, y) as a univariate polynomial in y.
    pub fn at_x_zero(&self) -> Vec<Elem> {
        self.coeffs
            .iter()
            .map(|c| c.first().copied().unwrap_or(Elem::ZERO))
            .collect()
    }

    /// Substitution Q(x, x*y + gamma): the workhorse of the root recursion.
    /// (xy + gamma)^j expands by binomials mod 2, so
    /// q'_t(x) = x^t sum_{j >= t, C(j,t) odd} q_j(x) gamma^(j-t).
    pub fn substitute_y(&self, f: &Field, gamma: Elem, ctr: Option<&MulCounter>) -> BiPoly {
        let ydeg = match self.y_degree() {
            Some(d) => d,
            None => return BiPoly { coeffs: vec![] },
        };
        let mut out: Vec<Vec<Elem>> = Vec::with_capacity(ydeg + 1);
        for t in 0..=ydeg {
            let mut acc: Vec<Elem> = vec![];
            for (j, src) in self.coeffs.iter().enumerate().skip(t) {
                if !binom_mod2(j, t) || poly::is_zero(src) {
                    continue;
                }
                let gpow = f.pow(gamma, (j - t) as u64);
                if gpow.is_zero() {
                    continue;
                }
                if acc.len() < src.len() {
                    acc.resize(src.len(), Elem::ZERO);
                }
                for (i, &c) in src.iter().enumerate() {
                    acc[i] = f.add(acc[i], f.mul_ct(gpow, c, ctr));
                }
            }
            // times x^t
            let mut shifted = vec![Elem::ZERO; t];
            shifted.extend(acc);
            out.push(shifted);
        }
        BiPoly { coeffs: out }
    }

    /// Q(x, p(x)) by Horner in y.
    #[cfg(test)]
    pub fn compose(&self, f: &Field, p: &[Elem]) -> Vec<Elem> {
        let mut acc: Vec<Elem> = vec![];
        for c in self.coeffs.iter().rev() {
            acc = poly::mul(f, &acc, p);
            if acc.len() < c.len() {
                acc.resize(c.len(), Elem::ZERO);
            }
            for (i, &x) in c.iter().enumerate() {
                acc[i] = f.add(acc[i], x);
            }
        }
        acc
    }
}

/// Roots in GF(q) of a univariate polynomial in y, by field scan.
pub(crate) fn y_roots(f: &Field, p: &[Elem]) -> Vec<Elem> {
    if poly::is_zero(p) {
        return vec![];
    }
    f.elements()
        .filter(|&x| poly::eval(f, p, x).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn gf8() -> Field {
        Field::new(3, 0b1011, 7).unwrap()
    }

    #[test]
    fn leading_monomial_weighted_order() {
        // Q = x^4 + x y (weights (1,3)): both monomials have wdeg 4, tie
        // broken toward higher y-degree
        let mut q = BiPoly::y_power(1);
        q.coeffs[1] = vec![Elem::ZERO, Elem::ONE]; // x y
        q.coeffs[0] = vec![Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ONE]; // x^4
        assert_eq!(q.leading_monomial(3), Some((4, 1)));
        assert_eq!(q.y_degree(), Some(1));
        assert!(!q.is_zero());
    }

    #[test]
    fn hasse_eval_plain_evaluation() {
        // order (0,0) is plain evaluation
        let f = gf8();
        let mut q = BiPoly::y_power(2); // y^2
        q.coeffs[0] = vec![Elem(3)];
        q.coeffs[1] = vec![Elem::ZERO, Elem(2)]; // alpha x y
        for x0 in f.elements() {
            for y0 in f.elements() {
                let direct = f.add(
                    f.add(Elem(3), f.mul(f.mul(Elem(2), x0), y0)),
                    f.mul(y0, y0),
                );
                assert_eq!(q.hasse_eval(&f, 0, 0, x0, y0, None), direct);
            }
        }
    }

    #[test]
    fn hasse_derivative_char2() {
        // d/dy of y^2 is 2y = 0 in characteristic 2; Hasse (0,1) of y^2 is
        // C(2,1) y = 0 as well, while Hasse (0,2) of y^2 is 1
        let f = gf8();
        let q = BiPoly::y_power(2);
        for y0 in f.elements() {
            assert_eq!(q.hasse_eval(&f, 0, 1, Elem::ZERO, y0, None), Elem::ZERO);
            assert_eq!(q.hasse_eval(&f, 0, 2, Elem::ZERO, y0, None), Elem::ONE);
        }
    }

    #[test]
    fn mul_by_root_then_eval_zero() {
        let f = gf8();
        let mut q = BiPoly::y_power(1);
        q.coeffs[0] = vec![Elem(5), Elem(1)];
        q.mul_by_x_minus(&f, Elem(6), None);
        for y0 in f.elements() {
            assert_eq!(q.hasse_eval(&f, 0, 0, Elem(6), y0, None), Elem::ZERO);
        }
    }

    #[test]
    fn substitution_identity() {
        // Q(x, x*y + gamma) composed with p equals Q composed with x*p + gamma
        let f = gf8();
        let mut q = BiPoly::y_power(2);
        q.coeffs[0] = vec![Elem(3), Elem(4)];
        q.coeffs[1] = vec![Elem(2), Elem::ZERO, Elem(7)];
        q.coeffs[2] = vec![Elem::ONE, Elem(6)];
        let gamma = Elem(5);
        let sub = q.substitute_y(&f, gamma, None);
        let p = vec![Elem(2), Elem(3)];
        // x*p + gamma
        let mut xp = vec![gamma];
        xp.extend_from_slice(&p);
        let lhs = sub.compose(&f, &p);
        let rhs = q.compose(&f, &xp);
        let (mut l, mut r) = (lhs, rhs);
        while l.last() == Some(&Elem::ZERO) { l.pop(); }
        while r.last() == Some(&Elem::ZERO) { r.pop(); }
        assert_eq!(l, r);
    }

    #[test]
    fn x_content_removal() {
        let mut q = BiPoly::y_power(1);
        q.coeffs[0] = vec![Elem::ZERO, Elem::ZERO, Elem(3)];
        q.coeffs[1] = vec![Elem::ZERO, Elem(2)];
        assert_eq!(q.x_content(), 1);
        q.shift_x_down(1);
        assert_eq!(q.coeffs[0], vec![Elem::ZERO, Elem(3)]);
        assert_eq!(q.coeffs[1], vec![Elem(2)]);
    }

    #[test]
    fn y_roots_scan() {
        let f = gf8();
        // (y - 3)(y - 5) = y^2 + (3^5) y + 3*5
        let prod = f.mul(Elem(3), Elem(5));
        let p = vec![prod, f.add(Elem(3), Elem(5)), Elem::ONE];
        let mut roots = y_roots(&f, &p);
        roots.sort();
        assert_eq!(roots, vec![Elem(3), Elem(5)]);
    }
}
