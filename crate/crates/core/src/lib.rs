//! Lerch function and polylogarithm evaluation on the half-plane `Re(w) < 1/2`.
//!
//! The shifted polylogarithm `Li_s^α(w) = Σ_{n≥1} wⁿ/(α+n)^s` is re-expanded in
//! powers of `z = w/(w−1)`, whose coefficients are multiple harmonic sums over
//! nondecreasing index tuples:
//!
//! ```text
//! Li_s^α(−z/(1−z)) = Σ_{p≥1} c_p zᵖ,
//! c_p = −(p−1)!/(α+1)_p · Σ_{1≤i₁≤…≤i_{s−1}≤p} Π 1/(α+i_r)
//! ```
//!
//! The crate is split in three layers:
//!
//! * [`exact`]: arbitrary-precision rationals, Pochhammer symbols, the sums
//!   `S_a^b(t)`, both sides of the binomial identity behind the expansion, and
//!   the exact coefficients `c_p`.
//! * [`series`]: binary64 complex evaluators (direct series, accelerated series,
//!   the binomial double sum, and the ζ(s) series at `z = 1/2`) with rigorous
//!   a-posteriori truncation bounds.
//! * [`verify`]: a grid harness checking every identity and bound, producing
//!   serializable [`verify::VerificationReport`]s.
//!
//! [`cli`] wires the three together behind the `harmonic-lerch` binary.
//!
//! ```
//! use harmonic_lerch::series::{lerch_accelerated, ShiftParam};
//! use num_complex::Complex64;
//!
//! let shift = ShiftParam::new(Complex64::new(0.0, 0.0)).unwrap();
//! let r = lerch_accelerated(Complex64::new(-1.0, 0.0), &shift, 1, 1e-12, 10_000).unwrap();
//! assert!(r.converged);
//! assert!((r.value.re + std::f64::consts::LN_2).abs() < 1e-12);
//! ```

pub mod cli;
mod ddouble;
pub mod error;
pub mod exact;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
