use super::{check_max_terms, check_order, check_tolerance, SeriesResult};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Iterator over `a_1, a_2, …` where
/// `a_p = Σ_{1≤i₁≤…≤i_{s−1}≤p} 1/(i₁⋯i_{s−1})`.
#[derive(Clone, Debug)]
pub struct ApCoefficients {
    column: Vec<f64>,
    p: u64,
}

impl ApCoefficients {
    pub fn new(s: u32) -> Result<Self> {
        check_order(s)?;
        let mut column = vec![0.0; s as usize];
        column[0] = 1.0;
        Ok(ApCoefficients { column, p: 0 })
    }
}

impl Iterator for ApCoefficients {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        self.p += 1;
        let f = 1.0 / self.p as f64;
        for u in 1..self.column.len() {
            self.column[u] += f * self.column[u - 1];
        }
        self.column.last().copied()
    }
}

/// `a_p` for order `s`; `a_p = 1` when `s = 1` and `a_p = H_p` when `s = 2`.
pub fn ap_coefficient(p: u32, s: u32) -> Result<f64> {
    if p == 0 {
        return Err(Error::Domain("index p must be at least 1".into()));
    }
    Ok(ApCoefficients::new(s)?
        .nth(p as usize - 1)
        .expect("infinite iterator"))
}

/// `(1 + ln p)^{s−1}`, the majorant of `a_p`.
pub fn ap_majorant(p: u64, s: u32) -> f64 {
    (1.0 + (p as f64).ln()).powi(s as i32 - 1)
}

/// ζ(s) for integer `s ≥ 2` from `(1−2^{1−s})ζ(s) = Σ_p a_p/(p·2ᵖ)`.
///
/// The tail after `P` terms is bounded with `a_p ≤ (1+ln p)^{s−1}`: the
/// majorant terms `(1+ln p)^{s−1}/(p·2ᵖ)` have consecutive ratios at most
/// `ρ = ½·((1+ln(P+2))/(1+ln(P+1)))^{s−1}` beyond `P`, a decreasing function
/// of `P`, so the tail is at most `first/(1−ρ)` once `ρ < 1`.
pub fn zeta_accelerated(s: u32, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if s <= 1 {
        return Err(Error::Domain(format!("zeta series needs s >= 2, got s = {s}")));
    }
    check_tolerance(tol)?;
    check_max_terms(max_terms)?;
    let scale = 1.0 / (1.0 - 2f64.powi(1 - s as i32));
    let exponent = s as i32 - 1;

    let mut sum = 0.0;
    let mut half_pow = 1.0;
    let mut error_bound = f64::INFINITY;
    for (terms, a_p) in (1..=max_terms).zip(ApCoefficients::new(s)?) {
        half_pow *= 0.5;
        sum += a_p * half_pow / terms as f64;

        let next = terms as f64 + 1.0;
        let first = ap_majorant(terms as u64 + 1, s) * half_pow * 0.5 / next;
        let rho = 0.5 * ((1.0 + (next + 1.0).ln()) / (1.0 + next.ln())).powi(exponent);
        error_bound = if rho < 1.0 {
            scale * first / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        if error_bound <= tol {
            return Ok(SeriesResult {
                value: Complex64::new(scale * sum, 0.0),
                terms_used: terms,
                error_bound,
                converged: true,
            });
        }
    }
    Ok(SeriesResult {
        value: Complex64::new(scale * sum, 0.0),
        terms_used: max_terms,
        error_bound,
        converged: false,
    })
}
