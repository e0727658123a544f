use thiserror::Error;

/// Errors raised by the exact and floating-point layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the requested series applies.
    #[error("domain error: {0}")]
    Domain(String),

    /// The shift lies within the forbidden tolerance of {-1, -2, ...}.
    #[error("invalid shift alpha = {re}{im:+}i: distance to the nearest negative integer is {gap:e}")]
    InvalidShift { re: f64, im: f64, gap: f64 },

    /// Lemma parameter beta is in {0, -1, -2, ...}.
    #[error("invalid beta = {0}: must avoid 0, -1, -2, ...")]
    InvalidBeta(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// The tuple enumerator would visit more tuples than allowed.
    #[error("enumeration cap exceeded: {count} tuples requested, cap is {cap}")]
    CapExceeded { count: u128, cap: u128 },

    /// Requested tolerance is below what binary64 evaluation can certify.
    #[error("tolerance {0:e} is below the supported minimum of 1e-13 (or not a positive finite number)")]
    Precision(f64),

    #[error("non-finite input: {0}")]
    NonFinite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
