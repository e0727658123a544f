use num_complex::Complex64;

use super::{
    check_max_terms, check_order, check_tolerance, ensure_finite, orbit_gap, SeriesResult, ShiftParam,
};
use crate::error::{Error, Result};

/// `(α + n)^{−s}`
pub(crate) fn inverse_power(alpha: Complex64, n: u64, s: u32) -> Complex64 {
    (alpha + n as f64).inv().powu(s)
}

/// Defining series `Σ_{n≥1} wⁿ/(α+n)^s`, valid for `|w| < 1`.
///
/// After `N` terms the remainder is at most
/// `|w|^{N+1} / ((1−|w|) · min_{n>N} |α+n|^s)`; summation stops at the first
/// `N` where that falls to `tol`.
pub fn lerch_direct(
    w: Complex64,
    shift: &ShiftParam,
    s: u32,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    ensure_finite(w, "w")?;
    check_order(s)?;
    check_tolerance(tol)?;
    check_max_terms(max_terms)?;
    let radius = w.norm();
    if radius >= 1.0 {
        return Err(Error::Domain(format!(
            "direct series needs |w| < 1, got |w| = {radius}"
        )));
    }
    let alpha = shift.alpha();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut w_pow = Complex64::new(1.0, 0.0);
    let mut radius_pow = 1.0;
    let mut bound = f64::INFINITY;
    for n in 1..=max_terms {
        w_pow *= w;
        radius_pow *= radius;
        sum += w_pow * inverse_power(alpha, n as u64, s);
        let next_gap = orbit_gap(alpha, n as u64 + 1);
        bound = radius_pow * radius / ((1.0 - radius) * next_gap.powi(s as i32));
        if bound <= tol {
            return Ok(SeriesResult {
                value: sum,
                terms_used: n,
                error_bound: bound,
                converged: true,
            });
        }
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: max_terms,
        error_bound: bound,
        converged: false,
    })
}

/// Partial sum `Σ_{n=1}^{N} (−1)^n/(α+n)^s` (the `n = 1` term is negative).
pub fn alternating_direct(shift: &ShiftParam, s: u32, n_terms: usize) -> Result<Complex64> {
    Ok(*alternating_partial_sums(shift, s, n_terms)?
        .last()
        .expect("at least one term"))
}

/// Every partial sum of the alternating series up to `n_terms`, in order.
pub fn alternating_partial_sums(shift: &ShiftParam, s: u32, n_terms: usize) -> Result<Vec<Complex64>> {
    check_order(s)?;
    check_max_terms(n_terms)?;
    let alpha = shift.alpha();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(n_terms);
    for n in 1..=n_terms {
        let term = inverse_power(alpha, n as u64, s);
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        out.push(sum);
    }
    Ok(out)
}
