//! Terms-to-tolerance table for Li_s(−1), written as CSV to stdout.
//!
//!     cargo run --release --example bench

use harmonic_lerch::cli::{run_bench, write_csv};

fn main() -> harmonic_lerch::Result<()> {
    let out = run_bench(&[1, 2, 3, 4, 5, 6], &[1e-6, 1e-10], 1_000_000)?;
    write_csv(&out, std::io::stdout().lock())
}
