//! ζ(s) from Σ a_p/(p·2ᵖ).
//!
//!     cargo run --example zeta

use harmonic_lerch::series::zeta_accelerated;

fn main() -> harmonic_lerch::Result<()> {
    let pi = std::f64::consts::PI;
    let known = [
        (2, pi.powi(2) / 6.0),
        (3, 1.2020569031595943),
        (4, pi.powi(4) / 90.0),
        (6, pi.powi(6) / 945.0),
        (10, pi.powi(10) / 93555.0),
    ];
    for (s, exact) in known {
        let r = zeta_accelerated(s, 1e-12, 10_000)?;
        println!(
            "zeta({s:>2}) = {:.16}  terms {:>3}  bound {:.1e}  actual {:.1e}",
            r.value.re,
            r.terms_used,
            r.error_bound,
            (r.value.re - exact).abs()
        );
    }
    Ok(())
}
