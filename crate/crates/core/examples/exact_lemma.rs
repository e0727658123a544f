//! The binomial identity in exact rational arithmetic, one case at a time and
//! then the full grid.
//!
//!     cargo run --example exact_lemma

use harmonic_lerch::exact::{coefficient_exact, lemma_lhs, lemma_rhs, LemmaParams, Rational};
use harmonic_lerch::verify::{default_betas, verify_lemma, verify_splitting};

fn main() -> harmonic_lerch::Result<()> {
    let beta: Rational = "7/3".parse()?;
    for q in 0..4 {
        let params = LemmaParams::new(q, 3, beta.clone())?;
        println!("q={q}  L = {}  R = {}", lemma_lhs(&params)?, lemma_rhs(&params)?);
    }

    let alpha: Rational = "1/2".parse()?;
    for p in 1..=4 {
        println!("c_{p}(alpha = 1/2, s = 2) = {}", coefficient_exact(p, &alpha, 2)?);
    }

    println!("{}", verify_lemma(12, 5, &default_betas())?);
    println!("{}", verify_splitting(8, 4, &default_betas())?);
    Ok(())
}
