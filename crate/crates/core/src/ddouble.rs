//! Minimal double-double arithmetic (about 106 significant bits).
//!
//! Only what the binomial double sum needs: add, mul, reciprocal, and the
//! complex versions of those. Error-free transforms follow Dekker/Knuth with
//! `mul_add` for the product error term.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub(crate) const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// Leading 106 bits of an arbitrary integer.
    pub(crate) fn from_bigint(n: &BigInt) -> Self {
        let hi = n.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return DoubleDouble { hi, lo: 0.0 };
        }
        let rest = n - BigInt::from_f64(hi).unwrap_or_default();
        let lo = rest.to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn recip(self) -> Self {
        // Newton step on the f64 reciprocal: y + y(1 − x·y).
        let y = 1.0 / self.hi;
        let residual = DoubleDouble::from_f64(1.0) - self * DoubleDouble::from_f64(y);
        DoubleDouble::from_f64(y) + residual * DoubleDouble::from_f64(y)
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;
    fn add(self, rhs: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        DoubleDouble { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    fn neg(self) -> DoubleDouble {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;
    fn sub(self, rhs: DoubleDouble) -> DoubleDouble {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;
    fn mul(self, rhs: DoubleDouble) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct ComplexDD {
    pub(crate) re: DoubleDouble,
    pub(crate) im: DoubleDouble,
}

impl ComplexDD {
    pub(crate) const ZERO: ComplexDD = ComplexDD {
        re: DoubleDouble::ZERO,
        im: DoubleDouble::ZERO,
    };

    pub(crate) fn from_parts(re: DoubleDouble, im: DoubleDouble) -> Self {
        ComplexDD { re, im }
    }

    pub(crate) fn scale(self, k: DoubleDouble) -> Self {
        ComplexDD { re: self.re * k, im: self.im * k }
    }

    pub(crate) fn recip(self) -> Self {
        let norm = self.re * self.re + self.im * self.im;
        let inv = norm.recip();
        ComplexDD {
            re: self.re * inv,
            im: -(self.im * inv),
        }
    }

    pub(crate) fn powu(self, exp: u32) -> Self {
        let mut acc = ComplexDD::from_parts(DoubleDouble::from_f64(1.0), DoubleDouble::ZERO);
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }

    pub(crate) fn to_complex64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for ComplexDD {
    type Output = ComplexDD;
    fn add(self, rhs: ComplexDD) -> ComplexDD {
        ComplexDD { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Neg for ComplexDD {
    type Output = ComplexDD;
    fn neg(self) -> ComplexDD {
        ComplexDD { re: -self.re, im: -self.im }
    }
}

impl Mul for ComplexDD {
    type Output = ComplexDD;
    fn mul(self, rhs: ComplexDD) -> ComplexDD {
        ComplexDD {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}
