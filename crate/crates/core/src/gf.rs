//! Arithmetic in GF(2^m) with a designated element `alpha` of multiplicative
//! order `n`.
//!
//! Elements are stored in polynomial basis: bit i of the integer value is the
//! coefficient of x^i, so addition is XOR. Multiplication and inversion are
//! table driven (log/antilog over the full multiplicative group); `alpha` is
//! beta^((2^m-1)/n) where beta is the root of the primitive polynomial.

use std::cell::Cell;
use std::fmt;

use crate::error::{Error, Result};

/// An element of GF(2^m), valid for the `Field` it was produced by.
/// The value is always `< 2^m`; operations on elements from different
/// fields are not detected and yield garbage.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

/// Counts field multiplications performed through [`Field::mul_ct`].
///
/// Schematic mode counts every call regardless of operand values, which makes
/// closed-form operation counts exactly assertable. Effective mode skips
/// calls where either operand is 0 or 1.
#[derive(Debug)]
pub struct MulCounter {
    schematic: bool,
    count: Cell<u64>,
}

impl MulCounter {
    pub fn schematic() -> Self {
        MulCounter { schematic: true, count: Cell::new(0) }
    }

    pub fn effective() -> Self {
        MulCounter { schematic: false, count: Cell::new(0) }
    }

    pub fn count(&self) -> u64 {
        self.count.get()
    }

    pub fn reset(&self) {
        self.count.set(0);
    }

    fn bump(&self, a: Elem, b: Elem) {
        if self.schematic || (a.0 > 1 && b.0 > 1) {
            self.count.set(self.count.get() + 1);
        }
    }
}

/// GF(2^m) context: primitive polynomial, log/antilog tables, and the
/// designated order-`n` element `alpha`. Immutable after construction and
/// safe to share across threads.
pub struct Field {
    m: u32,
    poly: u32,
    n: usize,
    q: usize,
    group_order: usize, // 2^m - 1
    alpha_step: usize,  // (2^m - 1) / n; alpha = beta^alpha_step
    log: Vec<u16>,      // indexed by value, entry 0 unused
    antilog: Vec<u16>,  // indexed by exponent of beta
}

impl Field {
    /// Builds the field context. `poly` holds the coefficients of a degree-m
    /// polynomial over GF(2) (bit 0 = constant term) that must be primitive;
    /// `n` must divide 2^m - 1.
    pub fn new(m: u32, poly: u32, n: usize) -> Result<Field> {
        if !(1..=16).contains(&m) {
            return Err(Error::InvalidFieldParameters(format!(
                "extension degree m={m} outside 1..=16"
            )));
        }
        if poly >> m != 1 {
            return Err(Error::PolynomialNotPrimitive { m, poly });
        }
        let q = 1usize << m;
        let group_order = q - 1;
        if n == 0 || group_order % n != 0 {
            return Err(Error::InvalidSubgroupOrder { m, n });
        }

        // Walk beta^0, beta^1, ... with beta = x; the polynomial is primitive
        // exactly when the walk visits every nonzero element once and returns
        // to 1 after 2^m - 1 steps.
        let mut antilog = vec![0u16; group_order];
        let mut log = vec![0u16; q];
        let mut seen = vec![false; q];
        let mut v: u32 = 1;
        for (e, slot) in antilog.iter_mut().enumerate() {
            if v == 0 || seen[v as usize] {
                return Err(Error::PolynomialNotPrimitive { m, poly });
            }
            seen[v as usize] = true;
            *slot = v as u16;
            log[v as usize] = e as u16;
            v <<= 1;
            if v & (q as u32) != 0 {
                v ^= poly;
            }
        }
        if v != 1 {
            return Err(Error::PolynomialNotPrimitive { m, poly });
        }

        Ok(Field {
            m,
            poly,
            n,
            q,
            group_order,
            alpha_step: group_order / n,
            log,
            antilog,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Order of the designated element alpha (the transform/code length).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Field size 2^m.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alpha(&self) -> Elem {
        self.pow_alpha(1)
    }

    /// Text descriptor used as the header of every file format.
    pub fn descriptor(&self) -> String {
        format!("field m={} poly=0x{:x} n={}", self.m, self.poly, self.n)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let e = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        Elem(self.antilog[e % self.group_order])
    }

    /// Multiplication through the active counter, if one is attached.
    pub fn mul_ct(&self, a: Elem, b: Elem, ctr: Option<&MulCounter>) -> Elem {
        if let Some(c) = ctr {
            c.bump(a, b);
        }
        self.mul(a, b)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.group_order - self.log[a.0 as usize] as usize;
        Ok(Elem(self.antilog[e % self.group_order]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// alpha^(e mod n); e may be negative.
    pub fn pow_alpha(&self, e: i64) -> Elem {
        let r = e.rem_euclid(self.n as i64) as usize;
        Elem(self.antilog[(self.alpha_step * r) % self.group_order])
    }

    /// General power a^e (e >= 0).
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let le = self.log[a.0 as usize] as u128 * e as u128;
        Elem(self.antilog[(le % self.group_order as u128) as usize])
    }

    /// Discrete log base beta, defined for nonzero elements.
    pub fn log(&self, a: Elem) -> Result<usize> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.log[a.0 as usize] as usize)
    }

    /// beta^e for 0 <= e < 2^m - 1.
    pub fn antilog(&self, e: usize) -> Elem {
        Elem(self.antilog[e % self.group_order])
    }

    /// All field elements, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q as u16).map(Elem)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(m={}, poly=0x{:x}, n={})", self.m, self.poly, self.n)
    }
}
