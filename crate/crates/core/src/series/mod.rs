//! Binary64 evaluation of the Lerch function and its accelerated expansion.
//!
//! All evaluators take an explicit tolerance and term cap and return a
//! [`SeriesResult`] whose `error_bound` is a rigorous majorant of the
//! truncation error (rounding error is not included; tolerances below
//! [`MIN_TOLERANCE`] are refused for that reason).

mod accelerated;
mod direct;
mod euler;
mod zeta;

pub use accelerated::{
    coefficient_bound, coefficient_float, lerch_accelerated, lerch_accelerated_z, w_to_z, z_to_w,
    Coefficients,
};
pub use direct::{alternating_direct, alternating_partial_sums, lerch_direct};
pub use euler::{euler_inner_sum, euler_partial_sums, euler_transform_eval};
pub use zeta::{ap_coefficient, ap_majorant, zeta_accelerated, ApCoefficients};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex binary64 carrier for `w`, `z`, `α` and series values.
pub type ComplexValue = Complex64;

/// Minimum distance from `α` to `{−1, −2, …}` accepted as a valid shift.
pub const SHIFT_TOLERANCE: f64 = 1e-12;

/// Smallest tolerance the float layer will try to certify.
pub const MIN_TOLERANCE: f64 = 1e-13;

/// `{re, im}` JSON form for complex values.
pub mod complex_serde {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Complex64, serializer: S) -> Result<S::Ok, S::Error> {
        Parts { re: z.re, im: z.im }.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Complex64, D::Error> {
        let p = Parts::deserialize(deserializer)?;
        Ok(Complex64::new(p.re, p.im))
    }
}

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(format!("{what} = {z}")))
    }
}

pub(crate) fn check_tolerance(tol: f64) -> Result<()> {
    if tol.is_finite() && tol >= MIN_TOLERANCE {
        Ok(())
    } else {
        Err(Error::Precision(tol))
    }
}

pub(crate) fn check_order(s: u32) -> Result<()> {
    if s == 0 {
        Err(Error::Domain("order s must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub(crate) fn check_max_terms(max_terms: usize) -> Result<()> {
    if max_terms == 0 {
        Err(Error::Domain("max_terms must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Shift `α` of the Lerch function, kept away from `{−1, −2, …}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ShiftRepr", into = "ShiftRepr")]
pub struct ShiftParam {
    alpha: Complex64,
    gap: f64,
}

#[derive(Serialize, Deserialize)]
struct ShiftRepr {
    #[serde(with = "complex_serde")]
    alpha: Complex64,
}

impl TryFrom<ShiftRepr> for ShiftParam {
    type Error = Error;
    fn try_from(r: ShiftRepr) -> Result<Self> {
        ShiftParam::new(r.alpha)
    }
}

impl From<ShiftParam> for ShiftRepr {
    fn from(s: ShiftParam) -> Self {
        ShiftRepr { alpha: s.alpha }
    }
}

impl ShiftParam {
    pub fn new(alpha: Complex64) -> Result<Self> {
        ensure_finite(alpha, "alpha")?;
        let gap = shift_gap(alpha);
        if gap <= SHIFT_TOLERANCE {
            return Err(Error::InvalidShift {
                re: alpha.re,
                im: alpha.im,
                gap,
            });
        }
        Ok(ShiftParam { alpha, gap })
    }

    pub fn real(alpha: f64) -> Result<Self> {
        ShiftParam::new(Complex64::new(alpha, 0.0))
    }

    pub fn zero() -> Self {
        ShiftParam {
            alpha: Complex64::new(0.0, 0.0),
            gap: 1.0,
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// `C(α) = inf_{n≥1} |α + n|`.
    pub fn gap(&self) -> f64 {
        self.gap
    }
}

/// `C(α) = min_{n≥1} |α + n|`; zero exactly at the forbidden shifts.
pub fn shift_gap(alpha: Complex64) -> f64 {
    orbit_gap(alpha, 1)
}

/// `min_{n ≥ n_min} |α + n|`. `|α+n|²` is a parabola in `n` with vertex at
/// `−Re α`, so only the integers next to the (clamped) vertex matter.
pub(crate) fn orbit_gap(alpha: Complex64, n_min: u64) -> f64 {
    let floor = n_min as f64;
    let vertex = (-alpha.re).round().max(floor);
    [vertex - 1.0, vertex, vertex + 1.0]
        .into_iter()
        .filter(|&n| n >= floor)
        .map(|n| (alpha + n).norm())
        .fold(f64::INFINITY, f64::min)
}

/// Value of a truncated series together with its truncation bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    #[serde(with = "complex_serde")]
    pub value: Complex64,
    pub terms_used: usize,
    pub error_bound: f64,
    pub converged: bool,
}

/// Distance used by the comparison harness: absolute when the reference is at
/// most 1 in modulus, relative otherwise.
pub fn scaled_residual(value: Complex64, reference: Complex64) -> f64 {
    let diff = (value - reference).norm();
    let scale = reference.norm();
    if scale <= 1.0 {
        diff
    } else {
        diff / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_gap_examples() {
        assert_eq!(shift_gap(Complex64::new(0.0, 0.0)), 1.0);
        assert_eq!(shift_gap(Complex64::new(-2.0, 0.0)), 0.0);
        assert_eq!(shift_gap(Complex64::new(-2.5, 0.0)), 0.5);
        assert_eq!(shift_gap(Complex64::new(3.0, 4.0)), (16.0f64 + 16.0).sqrt());
        assert_eq!(shift_gap(Complex64::new(-0.5, 0.5)), 0.5f64.sqrt());
        assert_eq!(shift_gap(Complex64::new(0.0, 1.0)), 2.0f64.sqrt());
    }

    #[test]
    fn shift_gap_matches_scan() {
        for k in 0..200 {
            let alpha = Complex64::new(-7.0 + 0.073 * f64::from(k), 0.3 * f64::from(k % 5) - 0.6);
            let scan = (1..40)
                .map(|n| (alpha + f64::from(n)).norm())
                .fold(f64::INFINITY, f64::min);
            assert_eq!(shift_gap(alpha), scan, "alpha = {alpha}");
        }
    }

    #[test]
    fn orbit_gap_respects_lower_index() {
        let alpha = Complex64::new(-5.2, 0.0);
        assert!((orbit_gap(alpha, 1) - 0.2).abs() < 1e-12);
        assert!((orbit_gap(alpha, 6) - 0.8).abs() < 1e-12);
        assert!((orbit_gap(alpha, 10) - 4.8).abs() < 1e-12);
    }

    #[test]
    fn shift_validation() {
        assert!(ShiftParam::real(-1.0).is_err());
        assert!(ShiftParam::real(-3.0 + 1e-13).is_err());
        assert!(ShiftParam::real(-3.0 + 1e-9).is_ok());
        assert!(ShiftParam::real(0.0).is_ok());
        assert!(ShiftParam::real(-0.5).is_ok());
        assert!(ShiftParam::new(Complex64::new(f64::NAN, 0.0)).is_err());
        assert!(ShiftParam::new(Complex64::new(-2.0, 1e-6)).is_ok());
        assert_eq!(ShiftParam::zero(), ShiftParam::real(0.0).unwrap());
    }

    #[test]
    fn shift_json_round_trip() {
        let s = ShiftParam::new(Complex64::new(-0.5, 0.5)).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"alpha":{"re":-0.5,"im":0.5}}"#);
        let back: ShiftParam = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ShiftParam>(r#"{"alpha":{"re":-2.0,"im":0.0}}"#).is_err());
    }

    #[test]
    fn tolerance_contract() {
        assert!(check_tolerance(1e-13).is_ok());
        assert!(check_tolerance(1e-12).is_ok());
        assert!(matches!(check_tolerance(1e-14), Err(Error::Precision(_))));
        assert!(check_tolerance(f64::NAN).is_err());
        assert!(check_tolerance(-1.0).is_err());
    }

    #[test]
    fn residual_metric() {
        let a = Complex64::new(1e-3, 0.0);
        assert_eq!(scaled_residual(a, Complex64::new(0.0, 0.0)), 1e-3);
        let big = Complex64::new(100.0, 0.0);
        assert!((scaled_residual(Complex64::new(101.0, 0.0), big) - 0.01).abs() < 1e-15);
    }
}
