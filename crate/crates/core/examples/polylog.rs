//! Li_s^α(w) at a few points, including ones far outside the unit disk.
//!
//!     cargo run --example polylog

use harmonic_lerch::series::{lerch_accelerated, ShiftParam};
use num_complex::Complex64;

fn main() -> harmonic_lerch::Result<()> {
    let points = [
        (Complex64::new(-1.0, 0.0), 0.0, 1),
        (Complex64::new(-1.0, 0.0), 0.0, 2),
        (Complex64::new(-25.0, 0.0), 0.0, 3),
        (Complex64::new(0.4, 3.0), 0.0, 2),
        (Complex64::new(-2.0, -1.0), 0.5, 2),
        (Complex64::new(-0.5, 0.0), -2.5, 4),
    ];
    println!("{:>14} {:>6} {:>2}  {:>40}  {:>5}  {:>9}", "w", "alpha", "s", "value", "terms", "bound");
    for (w, alpha, s) in points {
        let shift = ShiftParam::real(alpha)?;
        let r = lerch_accelerated(w, &shift, s, 1e-12, 10_000)?;
        println!(
            "{:>14} {:>6} {:>2}  {:>40}  {:>5}  {:>9.2e}",
            w.to_string(),
            alpha,
            s,
            format!("{:.15}", r.value),
            r.terms_used,
            r.error_bound
        );
    }
    Ok(())
}
