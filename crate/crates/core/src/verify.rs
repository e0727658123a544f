//! Grid harness for the identities and bounds behind the expansion.
//!
//! Exact checks compare canonical rationals and report a residual of zero on
//! success. Float checks use [`scaled_residual`] unless noted otherwise.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    binomial_inner_sum, coefficient_exact, lemma_lhs, lemma_rhs, multi_sum_profile, pochhammer,
    LemmaParams, MultiSumSpec, Rational,
};
use crate::series::{
    ap_coefficient, ap_majorant, coefficient_bound, euler_inner_sum, euler_transform_eval, lerch_accelerated,
    lerch_direct, scaled_residual, z_to_w, zeta_accelerated, Coefficients, ShiftParam, MIN_TOLERANCE,
};

pub const DEFAULT_Q_MAX: u32 = 12;
pub const DEFAULT_S_MAX: u32 = 5;
pub const DEFAULT_B_MAX: u32 = 8;
pub const DEFAULT_T_MAX: u32 = 4;
pub const DEFAULT_P_MAX_EXACT: u32 = 40;
pub const DEFAULT_P_MAX_EULER: u32 = 30;
pub const DEFAULT_P_MAX_FLOAT: u32 = 200;
pub const DEFAULT_FLOAT_S_MAX: u32 = 3;
pub const DEFAULT_BOUND_S_MAX: u32 = 6;
pub const DEFAULT_PROPOSITION_TOL: f64 = 1e-10;
pub const DEFAULT_SONDOW_TERMS: usize = 80;
pub const DEFAULT_SONDOW_TOL: f64 = 1e-12;
/// Relative agreement required between the coefficient routes.
pub const COEFFICIENT_REL_TOL: f64 = 1e-12;
/// Slack on the coefficient majorant.
pub const BOUND_SLACK: f64 = 1e-10;

/// β ∈ {1, 1/2, 3/2, 2, 7/3, 5}.
pub fn default_betas() -> Vec<Rational> {
    ["1", "1/2", "3/2", "2", "7/3", "5"]
        .iter()
        .map(|s| s.parse().expect("literal rational"))
        .collect()
}

/// α ∈ {0, 1/2, i, −1/2 + i/2}.
pub fn default_shifts() -> Vec<ShiftParam> {
    [(0.0, 0.0), (0.5, 0.0), (0.0, 1.0), (-0.5, 0.5)]
        .iter()
        .map(|&(re, im)| ShiftParam::new(Complex64::new(re, im)).expect("valid shift"))
        .collect()
}

/// Eight points of the disk `|z| ≤ 0.4`.
pub fn default_z_grid() -> Vec<Complex64> {
    vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.3, 0.0),
        Complex64::new(-0.4, 0.0),
        Complex64::new(0.2, 0.2),
        Complex64::new(0.0, 0.35),
        Complex64::new(-0.25, -0.25),
        Complex64::new(-0.1, 0.38),
        Complex64::new(0.39, -0.05),
    ]
}

/// Outcome of one identity checked over a parameter grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_name: String,
    #[serde(rename = "grid")]
    pub grid_description: String,
    pub cases_run: usize,
    pub cases_failed: usize,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub failing_cases: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    /// Combines two runs of the same identity over different grid pieces.
    ///
    /// Grid descriptions and failing cases are kept sorted, so merging is
    /// associative and order-independent.
    pub fn merge(&self, other: &VerificationReport) -> Result<VerificationReport> {
        if self.identity_name != other.identity_name {
            return Err(Error::Domain(format!(
                "cannot merge reports for {} and {}",
                self.identity_name, other.identity_name
            )));
        }
        let grids: BTreeSet<&str> = self
            .grid_description
            .split("; ")
            .chain(other.grid_description.split("; "))
            .filter(|g| !g.is_empty())
            .collect();
        let mut failing: Vec<String> = self
            .failing_cases
            .iter()
            .chain(&other.failing_cases)
            .cloned()
            .collect();
        failing.sort();
        Ok(VerificationReport {
            identity_name: self.identity_name.clone(),
            grid_description: grids.into_iter().collect::<Vec<_>>().join("; "),
            cases_run: self.cases_run + other.cases_run,
            cases_failed: self.cases_failed + other.cases_failed,
            worst_residual: self.worst_residual.max(other.worst_residual),
            tolerance: self.tolerance.max(other.tolerance),
            failing_cases: failing,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} cases, {} failed, worst residual {:e} (tol {:e}) [{}]",
            if self.passed() { "PASS" } else { "FAIL" },
            self.identity_name,
            self.cases_run,
            self.cases_failed,
            self.worst_residual,
            self.tolerance,
            self.grid_description
        )
    }
}

struct Tally {
    name: &'static str,
    grid: String,
    tolerance: f64,
    cases_run: usize,
    worst: f64,
    failing: Vec<String>,
}

impl Tally {
    fn new(name: &'static str, grid: String, tolerance: f64) -> Self {
        Tally {
            name,
            grid,
            tolerance,
            cases_run: 0,
            worst: 0.0,
            failing: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, residual: f64, case: impl FnOnce() -> String) {
        self.cases_run += 1;
        // NaN residuals count as failures and as the worst case.
        if residual.is_nan() {
            self.worst = f64::INFINITY;
        } else {
            self.worst = self.worst.max(residual);
        }
        if !ok || residual.is_nan() {
            self.failing.push(case());
        }
    }

    fn exact(&mut self, lhs: &Rational, rhs: &Rational, case: impl FnOnce() -> String) {
        let ok = lhs == rhs;
        let residual = if ok { 0.0 } else { (lhs - rhs).abs().to_f64() };
        self.record(ok, residual, case);
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            identity_name: self.name.to_string(),
            grid_description: self.grid,
            cases_run: self.cases_run,
            cases_failed: self.failing.len(),
            worst_residual: self.worst,
            tolerance: self.tolerance,
            failing_cases: self.failing,
        }
    }
}

fn beta_list(betas: &[Rational]) -> String {
    let parts: Vec<String> = betas.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn shift_list(shifts: &[ShiftParam]) -> String {
    let parts: Vec<String> = shifts.iter().map(|s| s.alpha().to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn validate_betas(betas: &[Rational]) -> Result<()> {
    if betas.is_empty() {
        return Err(Error::Domain("empty beta grid".into()));
    }
    for beta in betas {
        if beta.is_nonpositive_integer() {
            return Err(Error::InvalidBeta(beta.to_string()));
        }
    }
    Ok(())
}

fn validate_order(s_max: u32) -> Result<()> {
    if s_max == 0 {
        return Err(Error::Domain("s_max must be at least 1".into()));
    }
    Ok(())
}

fn shifted(beta: &Rational, by: i64) -> Rational {
    beta + Rational::from(by)
}

fn lhs(q: u32, s: u32, beta: &Rational) -> Result<Rational> {
    lemma_lhs(&LemmaParams::new(q, s, beta.clone())?)
}

fn rhs(q: u32, s: u32, beta: &Rational) -> Result<Rational> {
    lemma_rhs(&LemmaParams::new(q, s, beta.clone())?)
}

/// `L(q, β) = R(q, β)` for `0 ≤ q ≤ q_max`, `1 ≤ s ≤ s_max`.
pub fn verify_lemma(q_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "lemma",
        format!("q in 0..={q_max}, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        for s in 1..=s_max {
            for q in 0..=q_max {
                let l = lhs(q, s, beta)?;
                let r = rhs(q, s, beta)?;
                tally.exact(&l, &r, || format!("q={q}, s={s}, beta={beta}"));
            }
        }
    }
    Ok(tally.finish())
}

/// Base cases: `L(0,β) = β^{−s} = R(0,β)` and
/// `L(1,β) = β^{−s} − (β+1)^{−s} = (β(β+1))^{−1} Σ_{u+v=s−1} β^{−u}(β+1)^{−v} = R(1,β)`.
pub fn verify_lemma_base(s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "lemma_base",
        format!("q in {{0, 1}}, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let next = shifted(beta, 1);
        let inv = beta.recip()?;
        let inv_next = next.recip()?;
        for s in 1..=s_max {
            let direct = inv.pow(s);
            tally.exact(&lhs(0, s, beta)?, &direct, || format!("L(0): s={s}, beta={beta}"));
            tally.exact(&rhs(0, s, beta)?, &direct, || format!("R(0): s={s}, beta={beta}"));

            let difference = inv.pow(s) - inv_next.pow(s);
            let convolution: Rational = (0..s).map(|u| inv.pow(u) * inv_next.pow(s - 1 - u)).sum();
            let middle = &inv * &inv_next * convolution;
            tally.exact(&lhs(1, s, beta)?, &difference, || format!("L(1) expansion: s={s}, beta={beta}"));
            tally.exact(&difference, &middle, || format!("L(1) convolution: s={s}, beta={beta}"));
            tally.exact(&middle, &rhs(1, s, beta)?, || format!("R(1): s={s}, beta={beta}"));
        }
    }
    Ok(tally.finish())
}

/// `L(q+1, β) = L(q, β) − L(q, β+1)` for `0 ≤ q < q_max`.
pub fn verify_recurrence_l(q_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "recurrence_L",
        format!("q in 0..{q_max}, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let next = shifted(beta, 1);
        for s in 1..=s_max {
            for q in 0..q_max {
                let step = lhs(q + 1, s, beta)?;
                let difference = lhs(q, s, beta)? - lhs(q, s, &next)?;
                tally.exact(&step, &difference, || format!("q={q}, s={s}, beta={beta}"));
            }
        }
    }
    Ok(tally.finish())
}

/// `R(q+1, β) = R(q, β) − R(q, β+1)` for `1 ≤ q < q_max`.
pub fn verify_recurrence_r(q_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "recurrence_R",
        format!("q in 1..{q_max}, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let next = shifted(beta, 1);
        for s in 1..=s_max {
            for q in 1..q_max {
                let step = rhs(q + 1, s, beta)?;
                let difference = rhs(q, s, beta)? - rhs(q, s, &next)?;
                tally.exact(&step, &difference, || format!("q={q}, s={s}, beta={beta}"));
            }
        }
    }
    Ok(tally.finish())
}

/// The same relation at `q = 0`, which holds by the base-case values.
pub fn verify_recurrence_r_q0(s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "recurrence_R_q0",
        format!("q = 0, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let next = shifted(beta, 1);
        for s in 1..=s_max {
            let step = rhs(1, s, beta)?;
            let difference = rhs(0, s, beta)? - rhs(0, s, &next)?;
            tally.exact(&step, &difference, || format!("s={s}, beta={beta}"));
        }
    }
    Ok(tally.finish())
}

fn profile(a: u32, b: u32, t: u32, beta: &Rational) -> Result<Vec<Rational>> {
    multi_sum_profile(&MultiSumSpec::new(a, b, t, beta.clone())?)
}

/// Both splitting identities for `S_a^b(t)`:
///
/// * `S_a^c(t) = Σ_{u+v=t} S_a^b(u) S_{b+1}^c(v)` for `0 ≤ a ≤ b < c ≤ b_max`;
/// * `S_{a−1}^{b+1}(t) = Σ_{u+v+w=t} f_{a−1}^u S_a^b(v) f_{b+1}^w` for
///   `1 ≤ a ≤ b ≤ b_max − 1`.
pub fn verify_splitting(b_max: u32, t_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    let mut tally = Tally::new(
        "splitting",
        format!(
            "two-part 0 <= a <= b < c <= {b_max}; three-part 1 <= a <= b <= {}; t in 0..={t_max}; beta in {}",
            b_max.saturating_sub(1),
            beta_list(betas)
        ),
        0.0,
    );
    for beta in betas {
        for a in 0..=b_max {
            for b in a..=b_max {
                let left = profile(a, b, t_max, beta)?;
                for c in b + 1..=b_max {
                    let whole = profile(a, c, t_max, beta)?;
                    let right = profile(b + 1, c, t_max, beta)?;
                    for t in 0..=t_max as usize {
                        let conv: Rational = (0..=t).map(|u| &left[u] * &right[t - u]).sum();
                        tally.exact(&whole[t], &conv, || {
                            format!("two-part a={a}, b={b}, c={c}, t={t}, beta={beta}")
                        });
                    }
                }
            }
        }
        for a in 1..b_max {
            for b in a..b_max {
                let inner = profile(a, b, t_max, beta)?;
                let outer = profile(a - 1, b + 1, t_max, beta)?;
                let f_low = shifted(beta, i64::from(a) - 1).recip()?;
                let f_high = shifted(beta, i64::from(b) + 1).recip()?;
                for t in 0..=t_max {
                    let mut conv = Rational::zero();
                    for u in 0..=t {
                        for v in 0..=t - u {
                            let w = t - u - v;
                            conv = conv + f_low.pow(u) * &inner[v as usize] * f_high.pow(w);
                        }
                    }
                    tally.exact(&outer[t as usize], &conv, || {
                        format!("three-part a={a}, b={b}, t={t}, beta={beta}")
                    });
                }
            }
        }
    }
    Ok(tally.finish())
}

/// The reduction inside the proof of the `R` recurrence, with `t = s − 1`:
///
/// * `R(q,β) − R(q,β+1) = q!/(β+1)_q · [S_0^q(t)/β − S_1^{q+1}(t)/(β+q+1)]`;
/// * `[…] = (f_0 − f_{q+1}) S_0^{q+1}(t) = (q+1)/(β(β+q+1)) · S_0^{q+1}(t)`;
/// * `q!/(β+1)_q · (q+1)/(β(β+q+1)) = (q+1)!/(β)_{q+2}`.
pub fn verify_bracket(q_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "bracket_reduction",
        format!("q in 0..{q_max}, s in 1..={s_max}, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let next = shifted(beta, 1);
        for s in 1..=s_max {
            let t = s - 1;
            for q in 0..q_max {
                let s0q = profile(0, q, t, beta)?.pop().expect("nonempty");
                let s1q1 = profile(1, q + 1, t, beta)?.pop().expect("nonempty");
                let s0q1 = profile(0, q + 1, t, beta)?.pop().expect("nonempty");
                let f0 = beta.recip()?;
                let fq1 = shifted(beta, i64::from(q) + 1).recip()?;
                let factorial = pochhammer(&Rational::one(), q);
                let outer = factorial.checked_div(&pochhammer(&next, q))?;

                let bracket = &f0 * &s0q - &fq1 * &s1q1;
                let difference = rhs(q, s, beta)? - rhs(q, s, &next)?;
                tally.exact(&difference, &(&outer * &bracket), || {
                    format!("prefactor split: q={q}, s={s}, beta={beta}")
                });
                tally.exact(&bracket, &((&f0 - &fq1) * &s0q1), || {
                    format!("bracket: q={q}, s={s}, beta={beta}")
                });
                let weight = Rational::from(i64::from(q) + 1)
                    .checked_div(&(beta * shifted(beta, i64::from(q) + 1)))?;
                tally.exact(&(&f0 - &fq1), &weight, || format!("f0 - f(q+1): q={q}, beta={beta}"));
                let lhs_factor = &outer * &weight;
                let rhs_factor =
                    pochhammer(&Rational::one(), q + 1).checked_div(&pochhammer(beta, q + 2))?;
                tally.exact(&lhs_factor, &rhs_factor, || format!("prefactor merge: q={q}, beta={beta}"));
            }
        }
    }
    Ok(tally.finish())
}

/// Exact coefficient equals the binomial inner sum of the double series:
/// `Σ_{n=1}^{p} C(p−1,n−1)(−1)ⁿ/(α+n)^s = c_p` with `α = β − 1`.
pub fn verify_coefficient_link(p_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "coefficient_link",
        format!("p in 1..={p_max}, s in 1..={s_max}, alpha = beta - 1, beta in {}", beta_list(betas)),
        0.0,
    );
    for beta in betas {
        let alpha = shifted(beta, -1);
        for s in 1..=s_max {
            for p in 1..=p_max {
                let inner = binomial_inner_sum(p, &alpha, s)?;
                let coeff = coefficient_exact(p, &alpha, s)?;
                tally.exact(&inner, &coeff, || format!("p={p}, s={s}, alpha={alpha}"));
            }
        }
    }
    Ok(tally.finish())
}

fn relative(value: Complex64, reference: Complex64) -> f64 {
    let diff = (value - reference).norm();
    if diff == 0.0 {
        0.0
    } else {
        diff / reference.norm()
    }
}

/// Binary64 coefficients against exact ones for rational `α = β − 1`,
/// relative error at most 1e−12.
pub fn verify_coefficients(p_max: u32, s_max: u32, betas: &[Rational]) -> Result<VerificationReport> {
    validate_betas(betas)?;
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "coefficient_exact_vs_float",
        format!("p in 1..={p_max}, s in 1..={s_max}, alpha = beta - 1, beta in {}", beta_list(betas)),
        COEFFICIENT_REL_TOL,
    );
    for beta in betas {
        let alpha = shifted(beta, -1);
        let shift = ShiftParam::real(alpha.to_f64())?;
        for s in 1..=s_max {
            let floats: Vec<Complex64> = Coefficients::new(&shift, s)?.take(p_max as usize).collect();
            for p in 1..=p_max {
                let exact = coefficient_exact(p, &alpha, s)?.to_f64();
                let residual = relative(floats[p as usize - 1], Complex64::new(exact, 0.0));
                tally.record(residual <= COEFFICIENT_REL_TOL, residual, || {
                    format!("p={p}, s={s}, alpha={alpha}")
                });
            }
        }
    }
    Ok(tally.finish())
}

/// Inner sums of the binomial double series against the coefficient stream,
/// relative error at most 1e−12.
pub fn verify_euler_inner(p_max: u32, shifts: &[ShiftParam], s_max: u32) -> Result<VerificationReport> {
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "euler_inner_vs_float",
        format!("p in 1..={p_max}, s in 1..={s_max}, alpha in {}", shift_list(shifts)),
        COEFFICIENT_REL_TOL,
    );
    for shift in shifts {
        for s in 1..=s_max {
            let floats: Vec<Complex64> = Coefficients::new(shift, s)?.take(p_max as usize).collect();
            for p in 1..=p_max {
                let inner = euler_inner_sum(p, shift, s)?;
                let residual = relative(inner, floats[p as usize - 1]);
                tally.record(residual <= COEFFICIENT_REL_TOL, residual, || {
                    format!("p={p}, s={s}, alpha={}", shift.alpha())
                });
            }
        }
    }
    Ok(tally.finish())
}

/// Accelerated series at `w = −z/(1−z)` against the direct series.
pub fn verify_proposition(
    z_grid: &[Complex64],
    shifts: &[ShiftParam],
    s_max: u32,
    tol: f64,
) -> Result<VerificationReport> {
    validate_order(s_max)?;
    for z in z_grid {
        if z.norm() > 0.4 {
            return Err(Error::Domain(format!(
                "proposition grid needs |z| <= 0.4 so the direct series applies, got |z| = {}",
                z.norm()
            )));
        }
    }
    let series_tol = (tol / 10.0).max(MIN_TOLERANCE);
    let mut tally = Tally::new(
        "proposition",
        format!(
            "{} points with |z| <= 0.4, s in 1..={s_max}, alpha in {}",
            z_grid.len(),
            shift_list(shifts)
        ),
        tol,
    );
    for shift in shifts {
        for s in 1..=s_max {
            for &z in z_grid {
                let w = z_to_w(z);
                let fast = lerch_accelerated(w, shift, s, series_tol, 10_000)?;
                let slow = lerch_direct(w, shift, s, series_tol, 10_000)?;
                let residual = scaled_residual(fast.value, slow.value);
                let ok = fast.converged && slow.converged && residual <= tol;
                tally.record(ok, residual, || format!("z={z}, s={s}, alpha={}", shift.alpha()));
            }
        }
    }
    Ok(tally.finish())
}

/// `|c_p| ≤ B(p)·(1 + 1e−10)`; the residual is the relative excess over the bound.
pub fn verify_coefficient_bound(p_max: u32, shifts: &[ShiftParam], s_max: u32) -> Result<VerificationReport> {
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "coefficient_bound",
        format!("p in 1..={p_max}, s in 1..={s_max}, alpha in {}", shift_list(shifts)),
        BOUND_SLACK,
    );
    for shift in shifts {
        for s in 1..=s_max {
            for (p, c) in (1..=p_max).zip(Coefficients::new(shift, s)?) {
                let bound = coefficient_bound(p, shift, s)?;
                let excess = (c.norm() / bound - 1.0).max(0.0);
                tally.record(c.norm() <= bound * (1.0 + BOUND_SLACK), excess, || {
                    format!("p={p}, s={s}, alpha={}", shift.alpha())
                });
            }
        }
    }
    Ok(tally.finish())
}

/// `0 < a_p ≤ (1 + ln p)^{s−1}` and `a_p` nondecreasing in `p`.
pub fn verify_ap_bound(p_max: u32, s_max: u32) -> Result<VerificationReport> {
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "ap_bound",
        format!("p in 1..={p_max}, s in 1..={s_max}"),
        0.0,
    );
    for s in 1..=s_max {
        let mut previous = 0.0;
        for p in 1..=p_max {
            let a = ap_coefficient(p, s)?;
            let majorant = ap_majorant(u64::from(p), s);
            let excess = ((a - majorant) / majorant).max(0.0);
            let ok = a > 0.0 && a <= majorant && a >= previous;
            tally.record(ok, excess, || format!("p={p}, s={s}, a_p={a}, bound={majorant}"));
            previous = a;
        }
    }
    Ok(tally.finish())
}

/// At `α = 0`, `z = 1/2`: the truncated double sum against the accelerated
/// series at `w = −1`, and against `−(1 − 2^{1−s})ζ(s)` for `s ≥ 2`.
pub fn verify_sondow_form(s_max: u32, terms: usize, tol: f64) -> Result<VerificationReport> {
    validate_order(s_max)?;
    let mut tally = Tally::new(
        "sondow_form",
        format!("alpha = 0, z = 1/2, s in 1..={s_max}, P = {terms}"),
        tol,
    );
    let half = Complex64::new(0.5, 0.0);
    let zero = ShiftParam::zero();
    for s in 1..=s_max {
        let double_sum = euler_transform_eval(half, &zero, s, terms)?;
        let accelerated = lerch_accelerated(Complex64::new(-1.0, 0.0), &zero, s, MIN_TOLERANCE, 10_000)?;
        let residual = scaled_residual(double_sum, accelerated.value);
        tally.record(accelerated.converged && residual <= tol, residual, || {
            format!("accelerated: s={s}")
        });
        if s >= 2 {
            let zeta = zeta_accelerated(s, MIN_TOLERANCE, 10_000)?;
            let eta = -(1.0 - 2f64.powi(1 - s as i32)) * zeta.value;
            let residual = scaled_residual(double_sum, eta);
            tally.record(zeta.converged && residual <= tol, residual, || format!("zeta: s={s}"));
        }
    }
    Ok(tally.finish())
}

/// Each displayed identity of the binomial-identity proof and the report that
/// covers it.
pub const LEMMA_PROOF_IDENTITIES: &[(&str, &str)] = &[
    ("L(0,b) = 1/b^s = R(0,b)", "lemma_base"),
    ("L(1,b) = 1/b^s - 1/(b+1)^s = sum_{u+v=s-1} ... = R(1,b)", "lemma_base"),
    ("L(q,b) = R(q,b)", "lemma"),
    ("L(q+1,b) = L(q,b) - L(q,b+1)", "recurrence_L"),
    ("R(q+1,b) = R(q,b) - R(q,b+1), q >= 1", "recurrence_R"),
    ("S_a^c(t) = sum_{u+v=t} S_a^b(u) S_{b+1}^c(v)", "splitting"),
    ("S_{a-1}^{b+1}(t) = sum_{u+v+w=t} f_{a-1}^u S_a^b(v) f_{b+1}^w", "splitting"),
    ("R(q,b) - R(q,b+1) = q!/(b+1)_q [f_0 S_0^q(t) - f_{q+1} S_1^{q+1}(t)]", "bracket_reduction"),
    ("[...] = (f_0 - f_{q+1}) S_0^{q+1}(t) = (q+1)/(b(b+q+1)) S_0^{q+1}(t)", "bracket_reduction"),
    ("q!/(b+1)_q (q+1)/(b(b+q+1)) = (q+1)!/(b)_{q+2}", "bracket_reduction"),
];

/// Named groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lemma,
    Recurrences,
    Splitting,
    Proposition,
    Bounds,
    Sondow,
    All,
}

impl Suite {
    pub const NAMES: &'static [&'static str] =
        &["lemma", "recurrences", "splitting", "proposition", "bounds", "sondow", "all"];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma" => Suite::Lemma,
            "recurrences" => Suite::Recurrences,
            "splitting" => Suite::Splitting,
            "proposition" => Suite::Proposition,
            "bounds" => Suite::Bounds,
            "sondow" => Suite::Sondow,
            "all" => Suite::All,
            other => {
                return Err(Error::Parse(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// Grid sizes for [`run_suite`]; `Default` gives the desk-scale grids.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub q_max: u32,
    pub exact_s_max: u32,
    pub b_max: u32,
    pub t_max: u32,
    pub betas: Vec<Rational>,
    pub exact_p_max: u32,
    pub euler_p_max: u32,
    pub float_p_max: u32,
    pub float_s_max: u32,
    pub bound_s_max: u32,
    pub shifts: Vec<ShiftParam>,
    pub z_grid: Vec<Complex64>,
    pub proposition_tol: f64,
    pub sondow_terms: usize,
    pub sondow_tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            q_max: DEFAULT_Q_MAX,
            exact_s_max: DEFAULT_S_MAX,
            b_max: DEFAULT_B_MAX,
            t_max: DEFAULT_T_MAX,
            betas: default_betas(),
            exact_p_max: DEFAULT_P_MAX_EXACT,
            euler_p_max: DEFAULT_P_MAX_EULER,
            float_p_max: DEFAULT_P_MAX_FLOAT,
            float_s_max: DEFAULT_FLOAT_S_MAX,
            bound_s_max: DEFAULT_BOUND_S_MAX,
            shifts: default_shifts(),
            z_grid: default_z_grid(),
            proposition_tol: DEFAULT_PROPOSITION_TOL,
            sondow_terms: DEFAULT_SONDOW_TERMS,
            sondow_tol: DEFAULT_SONDOW_TOL,
        }
    }
}

impl SuiteConfig {
    /// Applies one `s_max` to every group.
    pub fn with_s_max(mut self, s_max: u32) -> Self {
        self.exact_s_max = s_max;
        self.float_s_max = s_max;
        self.bound_s_max = s_max;
        self
    }

    /// Applies one `p_max` to every coefficient and bound check.
    pub fn with_p_max(mut self, p_max: u32) -> Self {
        self.exact_p_max = p_max;
        self.euler_p_max = p_max;
        self.float_p_max = p_max;
        self
    }
}

/// Runs every check in `suite` and returns one report per identity.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let c = config;
    let mut reports = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Lemma {
        reports.push(verify_lemma(c.q_max, c.exact_s_max, &c.betas)?);
        reports.push(verify_lemma_base(c.exact_s_max, &c.betas)?);
    }
    if all || suite == Suite::Recurrences {
        reports.push(verify_recurrence_l(c.q_max, c.exact_s_max, &c.betas)?);
        reports.push(verify_recurrence_r(c.q_max, c.exact_s_max, &c.betas)?);
        reports.push(verify_recurrence_r_q0(c.exact_s_max, &c.betas)?);
        reports.push(verify_bracket(c.q_max, c.exact_s_max, &c.betas)?);
    }
    if all || suite == Suite::Splitting {
        reports.push(verify_splitting(c.b_max, c.t_max, &c.betas)?);
    }
    if all || suite == Suite::Proposition {
        reports.push(verify_proposition(&c.z_grid, &c.shifts, c.float_s_max, c.proposition_tol)?);
        reports.push(verify_coefficient_link(c.euler_p_max, c.exact_s_max, &c.betas)?);
        reports.push(verify_coefficients(c.exact_p_max, c.exact_s_max, &c.betas)?);
        reports.push(verify_euler_inner(c.euler_p_max, &c.shifts, c.exact_s_max)?);
    }
    if all || suite == Suite::Bounds {
        reports.push(verify_coefficient_bound(c.float_p_max, &c.shifts, c.bound_s_max)?);
        reports.push(verify_ap_bound(c.float_p_max, c.bound_s_max)?);
    }
    if all || suite == Suite::Sondow {
        reports.push(verify_sondow_form(c.bound_s_max, c.sondow_terms, c.sondow_tol)?);
    }
    Ok(reports)
}
