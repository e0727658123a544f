//! The expansion in powers of `z = w/(w−1)`.
//!
//! Coefficients are produced incrementally: the column `S_1^p(u)`,
//! `u = 0..s−1`, with `f_i = 1/(α+i)` is extended by one index per step, and the
//! prefactor `(p−1)!/(α+1)_p` is carried as the running ratio
//! `r_p = r_{p−1}·(p−1)/(α+p)`, `r_1 = 1/(α+1)`. Neither `(p−1)!` nor the
//! Pochhammer symbol is ever formed on its own.

use num_complex::Complex64;

use super::{
    check_max_terms, check_order, check_tolerance, ensure_finite, SeriesResult, ShiftParam,
};
use crate::error::{Error, Result};

/// Iterator over `c_1, c_2, …` for a fixed shift and order.
#[derive(Clone, Debug)]
pub struct Coefficients {
    alpha: Complex64,
    column: Vec<Complex64>,
    ratio: Complex64,
    p: u64,
}

impl Coefficients {
    pub fn new(shift: &ShiftParam, s: u32) -> Result<Self> {
        check_order(s)?;
        let mut column = vec![Complex64::new(0.0, 0.0); s as usize];
        column[0] = Complex64::new(1.0, 0.0);
        Ok(Coefficients {
            alpha: shift.alpha(),
            column,
            ratio: Complex64::new(1.0, 0.0),
            p: 0,
        })
    }

    /// Index of the coefficient returned by the last call to `next`.
    pub fn index(&self) -> u64 {
        self.p
    }
}

impl Iterator for Coefficients {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        self.p += 1;
        let p = self.p as f64;
        let shifted = self.alpha + p;
        let f = shifted.inv();
        for u in 1..self.column.len() {
            let step = f * self.column[u - 1];
            self.column[u] += step;
        }
        self.ratio = if self.p == 1 {
            f
        } else {
            self.ratio * (p - 1.0) / shifted
        };
        Some(-self.ratio * self.column[self.column.len() - 1])
    }
}

/// `c_p` in binary64.
pub fn coefficient_float(p: u32, shift: &ShiftParam, s: u32) -> Result<Complex64> {
    if p == 0 {
        return Err(Error::Domain("coefficient index p must be at least 1".into()));
    }
    Coefficients::new(shift, s)?
        .nth(p as usize - 1)
        .ok_or_else(|| Error::Domain("coefficient stream ended".into()))
}

/// Running majorant `B(p) = (p−1)!/(|α+1|⋯|α+p|) · (p/C(α))^{s−1}`.
#[derive(Clone, Debug)]
struct BoundStream {
    alpha: Complex64,
    gap: f64,
    exponent: i32,
    ratio: f64,
    p: u64,
}

impl BoundStream {
    fn new(shift: &ShiftParam, s: u32) -> Self {
        BoundStream {
            alpha: shift.alpha(),
            gap: shift.gap(),
            exponent: s as i32 - 1,
            ratio: 1.0,
            p: 0,
        }
    }

    fn advance(&mut self) -> f64 {
        self.p += 1;
        let p = self.p as f64;
        let modulus = (self.alpha + p).norm();
        self.ratio = if self.p == 1 {
            1.0 / modulus
        } else {
            self.ratio * (p - 1.0) / modulus
        };
        self.ratio * (p / self.gap).powi(self.exponent)
    }
}

/// Majorant of `|c_p|` from the coefficient estimate.
pub fn coefficient_bound(p: u32, shift: &ShiftParam, s: u32) -> Result<f64> {
    check_order(s)?;
    if p == 0 {
        return Err(Error::Domain("coefficient index p must be at least 1".into()));
    }
    let mut stream = BoundStream::new(shift, s);
    let mut b = 0.0;
    for _ in 0..p {
        b = stream.advance();
    }
    Ok(b)
}

/// `z = w/(w−1)`; maps `Re w < 1/2` onto the unit disk.
pub fn w_to_z(w: Complex64) -> Complex64 {
    w / (w - 1.0)
}

/// `w = −z/(1−z)`, the inverse of [`w_to_z`].
pub fn z_to_w(z: Complex64) -> Complex64 {
    -z / (1.0 - z)
}

/// Upper bound on `sup_{p>P} B(p+1)/B(p)` times `|z|`; infinite when no finite
/// bound is available yet.
fn tail_ratio(alpha: Complex64, z_radius: f64, s: u32, terms: u64) -> f64 {
    let next = terms as f64 + 1.0;
    let denom = next + 1.0 + alpha.re;
    if denom <= 0.0 {
        return f64::INFINITY;
    }
    let shift_factor = (next / denom).max(1.0);
    let growth = ((next + 1.0) / next).powi(s as i32 - 1);
    z_radius * shift_factor * growth
}

/// `Li_s^α(w)` on the half-plane `Re w < 1/2` through the expansion in `z`.
pub fn lerch_accelerated(
    w: Complex64,
    shift: &ShiftParam,
    s: u32,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    ensure_finite(w, "w")?;
    if w.re >= 0.5 {
        return Err(Error::Domain(format!(
            "accelerated series needs Re(w) < 1/2, got Re(w) = {}",
            w.re
        )));
    }
    lerch_accelerated_z(w_to_z(w), shift, s, tol, max_terms)
}

/// `Σ_p c_p zᵖ` for `|z| < 1`, i.e. `Li_s^α(−z/(1−z))`.
///
/// Stops at the first `P` with `B(P+1)|z|^{P+1}/(1−ρ) ≤ tol`, where `ρ` bounds
/// the ratio of consecutive tail terms for every `p > P`.
pub fn lerch_accelerated_z(
    z: Complex64,
    shift: &ShiftParam,
    s: u32,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    ensure_finite(z, "z")?;
    check_tolerance(tol)?;
    check_max_terms(max_terms)?;
    let radius = z.norm();
    if radius >= 1.0 {
        return Err(Error::Domain(format!(
            "accelerated series needs |z| < 1, got |z| = {radius}"
        )));
    }
    let alpha = shift.alpha();
    let coefficients = Coefficients::new(shift, s)?;
    let mut bounds = BoundStream::new(shift, s);
    bounds.advance();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut z_pow = Complex64::new(1.0, 0.0);
    let mut radius_pow = radius;
    let mut error_bound = f64::INFINITY;
    for (terms, c) in (1..=max_terms).zip(coefficients) {
        z_pow *= z;
        sum += c * z_pow;
        // B(P+1)·|z|^{P+1}
        let next_bound = bounds.advance();
        radius_pow *= radius;
        let lead = next_bound * radius_pow;
        let rho = tail_ratio(alpha, radius, s, terms as u64);
        error_bound = if lead == 0.0 {
            0.0
        } else if rho < 1.0 {
            lead / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        if error_bound <= tol {
            return Ok(SeriesResult {
                value: sum,
                terms_used: terms,
                error_bound,
                converged: true,
            });
        }
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: max_terms,
        error_bound,
        converged: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn first_coefficient() {
        for &(re, im) in &[(0.0, 0.0), (0.5, 0.0), (0.0, 1.0), (-0.5, 0.5), (2.3, -1.1)] {
            let shift = ShiftParam::new(c(re, im)).unwrap();
            for s in 1..=5 {
                let expected = -(shift.alpha() + 1.0).inv().powu(s);
                let got = coefficient_float(1, &shift, s).unwrap();
                assert!((got - expected).norm() <= 1e-15 * expected.norm());
            }
        }
    }

    #[test]
    fn polylog_coefficients() {
        for p in 1..=50u32 {
            let got = coefficient_float(p, &ShiftParam::zero(), 1).unwrap();
            assert!((got.re + 1.0 / f64::from(p)).abs() < 1e-15);
            assert_eq!(got.im, 0.0);
        }
        let c3 = coefficient_float(3, &ShiftParam::zero(), 2).unwrap();
        assert!((c3.re + 11.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn stream_matches_indexed_access() {
        let shift = ShiftParam::new(c(0.3, -0.7)).unwrap();
        let stream: Vec<_> = Coefficients::new(&shift, 3).unwrap().take(20).collect();
        for (k, value) in stream.iter().enumerate() {
            assert_eq!(*value, coefficient_float(k as u32 + 1, &shift, 3).unwrap());
        }
    }

    #[test]
    fn bound_examples() {
        for p in 1..=30u32 {
            for s in 1..=5 {
                let b = coefficient_bound(p, &ShiftParam::zero(), s).unwrap();
                let expected = f64::from(p).powi(s as i32 - 2);
                assert!((b - expected).abs() <= 1e-12 * expected, "p={p} s={s}");
            }
        }
        let shift = ShiftParam::new(c(-0.5, 0.5)).unwrap();
        for s in 1..=4 {
            let b = coefficient_bound(1, &shift, s).unwrap();
            let expected = 1.0 / ((shift.alpha() + 1.0).norm() * shift.gap().powi(s as i32 - 1));
            assert!((b - expected).abs() <= 1e-15 * expected);
        }
    }

    #[test]
    fn no_overflow_deep_into_the_series() {
        let shift = ShiftParam::real(0.25).unwrap();
        let c = coefficient_float(400, &shift, 3).unwrap();
        let b = coefficient_bound(400, &shift, 3).unwrap();
        assert!(c.re.is_finite() && c.norm() > 0.0);
        assert!(b.is_finite() && c.norm() <= b);
    }

    #[test]
    fn domain_map_round_trip() {
        for k in 0..50 {
            let z = Complex64::from_polar(0.97 * f64::from(k) / 50.0, f64::from(k) * 0.7);
            let w = z_to_w(z);
            assert!(w.re < 0.5);
            assert!((w_to_z(w) - z).norm() < 1e-14);
        }
    }

    #[test]
    fn accelerated_examples() {
        let zero = lerch_accelerated(c(0.0, 0.0), &ShiftParam::zero(), 2, 1e-12, 100).unwrap();
        assert_eq!(zero.value, c(0.0, 0.0));
        assert!(zero.converged);

        let r = lerch_accelerated(c(-1.0, 0.0), &ShiftParam::zero(), 1, 1e-13, 10_000).unwrap();
        assert!(r.converged);
        assert!((r.value.re + LN_2).abs() <= r.error_bound + 1e-15);

        let r = lerch_accelerated(c(-1.0, 0.0), &ShiftParam::zero(), 2, 1e-13, 10_000).unwrap();
        assert!(r.converged);
        assert!((r.value.re + PI * PI / 12.0).abs() <= r.error_bound + 1e-15);
    }

    #[test]
    fn accelerated_domain() {
        assert!(matches!(
            lerch_accelerated(c(0.5, 0.0), &ShiftParam::zero(), 2, 1e-12, 100),
            Err(Error::Domain(_))
        ));
        assert!(lerch_accelerated(c(0.6, 3.0), &ShiftParam::zero(), 2, 1e-12, 100).is_err());
        assert!(lerch_accelerated_z(c(0.0, 1.0), &ShiftParam::zero(), 2, 1e-12, 100).is_err());
        assert!(lerch_accelerated(c(-1.0, 0.0), &ShiftParam::zero(), 0, 1e-12, 100).is_err());
    }

    #[test]
    fn near_boundary_reports_non_convergence() {
        let r = lerch_accelerated(c(0.4999, 0.0), &ShiftParam::zero(), 2, 1e-12, 200).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 200);
        assert!(r.error_bound > 1e-12);
    }

    #[test]
    fn very_negative_real_shift() {
        // Re α < −1: the ratio bound only becomes finite once P + 2 + Re α > 0.
        let shift = ShiftParam::real(-6.5).unwrap();
        let r = lerch_accelerated(c(-0.5, 0.0), &shift, 2, 1e-12, 10_000).unwrap();
        assert!(r.converged);
        let direct = super::super::lerch_direct(c(-0.5, 0.0), &shift, 2, 1e-13, 10_000).unwrap();
        assert!((r.value - direct.value).norm() <= r.error_bound + direct.error_bound + 1e-12);
    }
}
