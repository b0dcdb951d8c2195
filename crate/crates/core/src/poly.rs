//! Univariate polynomial helpers over GF(q). Coefficients are ascending
//! (index = power) everywhere in the crate.

use crate::gf::{Elem, Field, MulCounter};

pub(crate) fn is_zero(p: &[Elem]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub(crate) fn degree(p: &[Elem]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Quotient and remainder of num / den; den must be nonzero.
pub(crate) fn divrem(f: &Field, num: &[Elem], den: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let dd = degree(den).expect("division by zero polynomial");
    let lead_inv = f.inv(den[dd]).unwrap();
    let mut rem = num.to_vec();
    let mut quo = vec![Elem::ZERO; num.len().saturating_sub(dd)];
    for i in (dd..num.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = f.mul(rem[i], lead_inv);
        quo[i - dd] = c;
        for j in 0..=dd {
            rem[i - dd + j] = f.add(rem[i - dd + j], f.mul(c, den[j]));
        }
    }
    rem.truncate(dd);
    (quo, rem)
}

/// Horner evaluation; multiplications go through the counter when attached.
pub(crate) fn eval_ct(f: &Field, p: &[Elem], x: Elem, ctr: Option<&MulCounter>) -> Elem {
    let mut acc = Elem::ZERO;
    for &c in p.iter().rev() {
        acc = f.add(f.mul_ct(acc, x, ctr), c);
    }
    acc
}

pub(crate) fn eval(f: &Field, p: &[Elem], x: Elem) -> Elem {
    eval_ct(f, p, x, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> Field {
        Field::new(3, 0b1011, 7).unwrap()
    }

    #[test]
    fn mul_then_divrem_round_trip() {
        let f = gf8();
        let a = vec![Elem(4), Elem(3), Elem(1)];
        let b = vec![Elem(6), Elem(1)];
        let p = mul(&f, &a, &b);
        let (q, r) = divrem(&f, &p, &b);
        assert!(is_zero(&r));
        assert_eq!(&q[..a.len()], &a[..]);
    }

    #[test]
    fn divrem_nonzero_remainder() {
        let f = gf8();
        let num = vec![Elem(1), Elem::ZERO, Elem(1)]; // x^2 + 1
        let den = vec![Elem(2), Elem(1)]; // x + alpha
        let (_, r) = divrem(&f, &num, &den);
        // remainder = value of x^2+1 at x = alpha: alpha^2 + 1 = 4 ^ 1 = 5
        assert_eq!(r, vec![Elem(5)]);
        assert_eq!(eval(&f, &num, Elem(2)), Elem(5));
    }

    #[test]
    fn eval_constant_and_zero() {
        let f = gf8();
        assert_eq!(eval(&f, &[Elem(6)], Elem(3)), Elem(6));
        assert_eq!(eval(&f, &[], Elem(3)), Elem::ZERO);
    }
}
