//! Terms needed by the z-expansion and by the plain power series for the same w.
//!
//!     cargo run --example accelerated_vs_direct

use harmonic_lerch::series::{lerch_accelerated, lerch_direct, w_to_z, ShiftParam};
use num_complex::Complex64;

fn main() -> harmonic_lerch::Result<()> {
    let shift = ShiftParam::zero();
    let tol = 1e-12;
    println!("{:>8} {:>6}  {:>11} {:>7}  {:>10}", "w", "|z|", "accelerated", "direct", "difference");
    for re in [-0.1, -0.3, -0.5, -0.7, -0.9, -0.99] {
        let w = Complex64::new(re, 0.0);
        let fast = lerch_accelerated(w, &shift, 2, tol, 100_000)?;
        let slow = lerch_direct(w, &shift, 2, tol, 100_000)?;
        println!(
            "{:>8} {:>6.3}  {:>11} {:>7}  {:>10.1e}",
            re,
            w_to_z(w).norm(),
            fast.terms_used,
            slow.terms_used,
            (fast.value - slow.value).norm()
        );
    }
    Ok(())
}
