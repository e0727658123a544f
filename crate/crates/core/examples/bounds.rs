//! Coefficient sizes against their majorants.
//!
//!     cargo run --example bounds

use harmonic_lerch::series::{
    ap_coefficient, ap_majorant, coefficient_bound, Coefficients, ShiftParam,
};
use num_complex::Complex64;

fn main() -> harmonic_lerch::Result<()> {
    let shift = ShiftParam::new(Complex64::new(-0.5, 0.5))?;
    println!("alpha = {}, C(alpha) = {:.4}", shift.alpha(), shift.gap());
    for s in [1, 3, 6] {
        println!("s = {s}");
        for (p, c) in (1..=200u32).zip(Coefficients::new(&shift, s)?) {
            if [1, 10, 50, 200].contains(&p) {
                let b = coefficient_bound(p, &shift, s)?;
                println!("  p={p:>3}  |c_p| = {:.3e}  B(p) = {:.3e}  ratio {:.3}", c.norm(), b, c.norm() / b);
            }
        }
    }
    println!("a_p against (1 + ln p)^(s-1), s = 4");
    for p in [1, 10, 100, 1000] {
        println!("  p={p:>4}  a_p = {:>10.4}  majorant = {:>10.4}", ap_coefficient(p, 4)?, ap_majorant(u64::from(p), 4));
    }
    Ok(())
}
