//! Exact-rational kernel.
//!
//! Everything here is computed in arbitrary-precision rationals so identities
//! can be checked with zero residual. The central object is the multiple
//! harmonic sum over nondecreasing tuples
//!
//! ```text
//! S_a^b(t) = Σ_{a ≤ i₁ ≤ … ≤ i_t ≤ b} Π_r f_{i_r},   f_n = 1/(β+n),   S_a^b(0) = 1
//! ```
//!
//! evaluated by the column recurrence `T(n, t) = T(n−1, t) + f_n·T(n, t−1)`.
//! [`multi_sum_bruteforce`] enumerates the tuples directly and is kept only as
//! an oracle.

mod rational;

pub use rational::Rational;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default limit on the number of tuples [`multi_sum_bruteforce`] will visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Parameters of one instance of the binomial identity `L(q, β) = R(q, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaParams {
    pub q: u32,
    pub s: u32,
    pub beta: Rational,
}

impl LemmaParams {
    pub fn new(q: u32, s: u32, beta: Rational) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("order s must be at least 1".into()));
        }
        check_beta(&beta)?;
        Ok(LemmaParams { q, s, beta })
    }
}

/// Index range, depth and shift of a multiple harmonic sum `S_a^b(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSumSpec {
    pub a: u32,
    pub b: u32,
    pub t: u32,
    pub beta: Rational,
}

impl MultiSumSpec {
    pub fn new(a: u32, b: u32, t: u32, beta: Rational) -> Result<Self> {
        let spec = MultiSumSpec { a, b, t, beta };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.a > self.b {
            return Err(Error::Domain(format!("empty range a = {} > b = {}", self.a, self.b)));
        }
        // β + n = 0 for some n in [a, b] iff −β is an integer in that range.
        let neg = -&self.beta;
        if neg.is_integer() {
            let lo = BigInt::from(self.a);
            let hi = BigInt::from(self.b);
            if neg.numer() >= &lo && neg.numer() <= &hi {
                return Err(Error::DivisionByZero(format!(
                    "beta + n vanishes at n = {} inside [{}, {}]",
                    neg.numer(),
                    self.a,
                    self.b
                )));
            }
        }
        Ok(())
    }

    /// Number of nondecreasing `t`-tuples drawn from `[a, b]`: C(b−a+t, t).
    pub fn tuple_count(&self) -> u128 {
        let width = u128::from(self.b - self.a + 1);
        let t = u128::from(self.t);
        // C(width + t − 1, t), accumulated without overflow for desk-scale sizes.
        let mut count: u128 = 1;
        for k in 1..=t {
            count = match count.checked_mul(width + k - 1) {
                Some(c) => c / k,
                None => return u128::MAX,
            };
        }
        count
    }
}

fn check_beta(beta: &Rational) -> Result<()> {
    if beta.is_nonpositive_integer() {
        return Err(Error::InvalidBeta(beta.to_string()));
    }
    Ok(())
}

/// Rising factorial `(x)_p = x(x+1)…(x+p−1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, p: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..p {
        acc = acc * &factor;
        factor = factor + Rational::one();
    }
    acc
}

/// Binomial coefficient C(n, k); zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Values `S_a^b(u)` for every `u = 0..=t`.
///
/// One pass over `n = a..=b` updating the column in place, ascending in `u`, so
/// entry `u−1` already holds `T(n, u−1)` when entry `u` is updated.
pub fn multi_sum_profile(spec: &MultiSumSpec) -> Result<Vec<Rational>> {
    spec.validate()?;
    let t = spec.t as usize;
    let mut column = vec![Rational::zero(); t + 1];
    column[0] = Rational::one();
    for n in spec.a..=spec.b {
        let f = (&spec.beta + Rational::from(i64::from(n))).recip()?;
        for u in 1..=t {
            let step = &f * &column[u - 1];
            column[u] = &column[u] + step;
        }
    }
    Ok(column)
}

/// `S_a^b(t)` computed in `O((b−a+1)·t)` rational operations.
pub fn multi_sum(spec: &MultiSumSpec) -> Result<Rational> {
    let mut profile = multi_sum_profile(spec)?;
    Ok(profile.pop().expect("profile has t + 1 entries"))
}

/// `S_a^b(t)` by explicit enumeration of nondecreasing tuples, with the default cap.
pub fn multi_sum_bruteforce(spec: &MultiSumSpec) -> Result<Rational> {
    multi_sum_bruteforce_capped(spec, DEFAULT_ENUMERATION_CAP)
}

/// Tuple enumeration oracle; refuses to start when more than `cap` tuples
/// would be visited.
pub fn multi_sum_bruteforce_capped(spec: &MultiSumSpec, cap: u128) -> Result<Rational> {
    spec.validate()?;
    let count = spec.tuple_count();
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let f: Vec<Rational> = (spec.a..=spec.b)
        .map(|n| (&spec.beta + Rational::from(i64::from(n))).recip())
        .collect::<Result<_>>()?;

    fn walk(f: &[Rational], start: usize, depth: u32, prefix: &Rational, total: &mut Rational) {
        if depth == 0 {
            *total = &*total + prefix;
            return;
        }
        for i in start..f.len() {
            let next = prefix * &f[i];
            walk(f, i, depth - 1, &next, total);
        }
    }

    let mut total = Rational::zero();
    walk(&f, 0, spec.t, &Rational::one(), &mut total);
    Ok(total)
}

/// Left side `L(q, β) = Σ_{m=0}^{q} C(q, m)(−1)^m/(β+m)^s`.
pub fn lemma_lhs(params: &LemmaParams) -> Result<Rational> {
    check_beta(&params.beta)?;
    let q = params.q;
    let mut total = Rational::zero();
    for m in 0..=q {
        let denom = (&params.beta + Rational::from(i64::from(m))).pow(params.s);
        let mut term = Rational::from(binomial(u64::from(q), i64::from(m))).checked_div(&denom)?;
        if m % 2 == 1 {
            term = -term;
        }
        total = total + term;
    }
    Ok(total)
}

/// Right side `R(q, β) = q!/(β)_{q+1} · S_0^q(s−1)`; for `s = 1` the sum is `S(0) = 1`.
pub fn lemma_rhs(params: &LemmaParams) -> Result<Rational> {
    check_beta(&params.beta)?;
    let q = params.q;
    let factorial = pochhammer(&Rational::one(), q);
    let prefactor = factorial.checked_div(&pochhammer(&params.beta, q + 1))?;
    let sum = multi_sum(&MultiSumSpec {
        a: 0,
        b: q,
        t: params.s - 1,
        beta: params.beta.clone(),
    })?;
    Ok(prefactor * sum)
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_integer() && alpha.numer() <= &BigInt::from(-1) {
        return Err(Error::InvalidShift {
            re: alpha.to_f64(),
            im: 0.0,
            gap: 0.0,
        });
    }
    Ok(())
}

/// Exact coefficient of `z^p` in the accelerated expansion of `Li_s^α`:
/// `c_p = −(p−1)!/(α+1)_p · Σ_{1≤i₁≤…≤i_{s−1}≤p} Π 1/(α+i_r)`.
pub fn coefficient_exact(p: u32, alpha: &Rational, s: u32) -> Result<Rational> {
    if p == 0 || s == 0 {
        return Err(Error::Domain("coefficient index p and order s must be at least 1".into()));
    }
    check_alpha(alpha)?;
    let factorial = pochhammer(&Rational::one(), p - 1);
    let shifted = alpha + Rational::one();
    let prefactor = factorial.checked_div(&pochhammer(&shifted, p))?;
    let sum = multi_sum(&MultiSumSpec {
        a: 1,
        b: p,
        t: s - 1,
        beta: alpha.clone(),
    })?;
    Ok(-(prefactor * sum))
}

/// Inner sum of the binomial double series at index `p`:
/// `Σ_{n=1}^{p} C(p−1, n−1)(−1)^n/(α+n)^s`.
pub fn binomial_inner_sum(p: u32, alpha: &Rational, s: u32) -> Result<Rational> {
    if p == 0 || s == 0 {
        return Err(Error::Domain("index p and order s must be at least 1".into()));
    }
    check_alpha(alpha)?;
    let mut total = Rational::zero();
    for n in 1..=p {
        let denom = (alpha + Rational::from(i64::from(n))).pow(s);
        let mut term = Rational::from(binomial(u64::from(p - 1), i64::from(n - 1))).checked_div(&denom)?;
        if n % 2 == 1 {
            term = -term;
        }
        total = total + term;
    }
    Ok(total)
}
