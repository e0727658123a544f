//! The binomial double sum
//!
//! ```text
//! Li_s^α(−z/(1−z)) = Σ_{p≥1} zᵖ Σ_{n=1}^{p} C(p−1, n−1)(−1)ⁿ/(α+n)^s
//! ```
//!
//! evaluated without the multiple harmonic sums, as an independent route to the
//! same coefficients. The inner alternating sums cancel catastrophically (terms
//! of size `C(p−1, ⌊p/2⌋)` add up to `O(1/p)`), so they are accumulated in
//! double-double arithmetic and rounded once at the end.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::{check_order, ensure_finite, ShiftParam};
use crate::ddouble::{ComplexDD, DoubleDouble};
use crate::error::{Error, Result};

/// `(α+n)^{−s}` in double-double for `n = 1..=count`.
fn inverse_powers(shift: &ShiftParam, s: u32, count: usize) -> Vec<ComplexDD> {
    let alpha = shift.alpha();
    (1..=count)
        .map(|n| {
            let re = DoubleDouble::from_f64(alpha.re) + DoubleDouble::from_f64(n as f64);
            let base = ComplexDD::from_parts(re, DoubleDouble::from_f64(alpha.im));
            base.recip().powu(s)
        })
        .collect()
}

/// Inner sums for `p = 1..=max_p`, each computed from scratch from its own
/// binomial row.
fn inner_sums(shift: &ShiftParam, s: u32, max_p: usize) -> Vec<Complex64> {
    let powers = inverse_powers(shift, s, max_p);
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    let mut out = Vec::with_capacity(max_p);
    for p in 1..=max_p {
        if p > 1 {
            // C(p−1, ·) from C(p−2, ·) by Pascal's rule
            let mut next = Vec::with_capacity(p);
            next.push(BigInt::from(1));
            for k in 1..p - 1 {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigInt::from(1));
            row = next;
        }
        let mut acc = ComplexDD::ZERO;
        for (k, binom) in row.iter().enumerate() {
            // n = k + 1, sign (−1)^n
            let term = powers[k].scale(DoubleDouble::from_bigint(binom));
            acc = if k % 2 == 0 { acc + (-term) } else { acc + term };
        }
        out.push(acc.to_complex64());
    }
    out
}

/// `Σ_{n=1}^{p} C(p−1, n−1)(−1)ⁿ/(α+n)^s`, the coefficient of `zᵖ`.
pub fn euler_inner_sum(p: u32, shift: &ShiftParam, s: u32) -> Result<Complex64> {
    check_order(s)?;
    if p == 0 {
        return Err(Error::Domain("index p must be at least 1".into()));
    }
    Ok(inner_sums(shift, s, p as usize)[p as usize - 1])
}

/// Partial sums of the double series for truncation points `1..=max_p`.
pub fn euler_partial_sums(z: Complex64, shift: &ShiftParam, s: u32, max_p: usize) -> Result<Vec<Complex64>> {
    ensure_finite(z, "z")?;
    check_order(s)?;
    if max_p == 0 {
        return Err(Error::Domain("truncation point P must be at least 1".into()));
    }
    let radius = z.norm();
    if radius >= 1.0 {
        return Err(Error::Domain(format!(
            "binomial double sum needs |z| < 1, got |z| = {radius}"
        )));
    }
    let mut z_pow = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    Ok(inner_sums(shift, s, max_p)
        .into_iter()
        .map(|inner| {
            z_pow *= z;
            sum += z_pow * inner;
            sum
        })
        .collect())
}

/// Double sum truncated after `p = max_p`.
pub fn euler_transform_eval(z: Complex64, shift: &ShiftParam, s: u32, max_p: usize) -> Result<Complex64> {
    Ok(*euler_partial_sums(z, shift, s, max_p)?
        .last()
        .expect("max_p >= 1"))
}
