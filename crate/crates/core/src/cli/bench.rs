//! Terms-to-tolerance comparison of the three routes to `Li_s(−1)`.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{
    complex_serde, euler_partial_sums, lerch_accelerated, ShiftParam, MIN_TOLERANCE,
};

/// Evaluation route measured by the benchmark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Accelerated,
    EulerTransform,
    DirectAlternating,
}

/// One (method, s, tolerance) measurement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub method: Method,
    pub s: u32,
    /// `z = 1/2` for the expansions, `w = −1` for the alternating series.
    #[serde(with = "complex_serde")]
    pub z_or_w: Complex64,
    pub tolerance: f64,
    pub terms_needed: usize,
    pub achieved_error: f64,
}

impl ConvergenceRow {
    pub fn converged(&self) -> bool {
        self.achieved_error <= self.tolerance
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRecord {
    method: Method,
    s: u32,
    z_re: f64,
    z_im: f64,
    tol: f64,
    terms: usize,
    achieved_error: f64,
}

impl From<&ConvergenceRow> for CsvRecord {
    fn from(r: &ConvergenceRow) -> Self {
        CsvRecord {
            method: r.method,
            s: r.s,
            z_re: r.z_or_w.re,
            z_im: r.z_or_w.im,
            tol: r.tolerance,
            terms: r.terms_needed,
            achieved_error: r.achieved_error,
        }
    }
}

impl From<CsvRecord> for ConvergenceRow {
    fn from(r: CsvRecord) -> Self {
        ConvergenceRow {
            method: r.method,
            s: r.s,
            z_or_w: Complex64::new(r.z_re, r.z_im),
            tolerance: r.tol,
            terms_needed: r.terms,
            achieved_error: r.achieved_error,
        }
    }
}

/// Rows plus the notes explaining omitted orders.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchOutput {
    pub rows: Vec<ConvergenceRow>,
    pub notes: Vec<String>,
}

/// Largest truncation point tried for the binomial double sum.
const EULER_CAP: usize = 1024;

fn first_hit(errors: impl Iterator<Item = f64>, tol: f64) -> Option<(usize, f64)> {
    errors
        .enumerate()
        .find(|&(_, e)| e <= tol)
        .map(|(k, e)| (k + 1, e))
}

/// Measures, for every order in `orders` and tolerance in `tolerances`, how
/// many terms each route needs at `w = −1` (`z = 1/2`, `α = 0`).
///
/// The reference value is the accelerated series at the minimum tolerance.
/// Order 1 has no ζ value and is reported as a note instead of rows.
pub fn run_bench(orders: &[u32], tolerances: &[f64], max_terms: usize) -> Result<BenchOutput> {
    for &tol in tolerances {
        crate::series::check_tolerance(tol)?;
    }
    if max_terms == 0 {
        return Err(Error::Domain("max_terms must be at least 1".into()));
    }
    let zero = ShiftParam::zero();
    let w = Complex64::new(-1.0, 0.0);
    let z = Complex64::new(0.5, 0.0);
    let mut out = BenchOutput::default();

    for &s in orders {
        if s == 0 {
            return Err(Error::Domain("order s must be at least 1".into()));
        }
        if s == 1 {
            out.notes.push("s=1 omitted: zeta(s) has a pole at s = 1".into());
            continue;
        }
        let reference = lerch_accelerated(w, &zero, s, MIN_TOLERANCE, 10_000)?.value;

        // Binomial double sum: grow the truncation point until every tolerance is met.
        let tightest = tolerances.iter().copied().fold(f64::INFINITY, f64::min);
        let mut cap = 64;
        let euler = loop {
            let sums = euler_partial_sums(z, &zero, s, cap)?;
            let met = sums.iter().any(|v| (v - reference).norm() <= tightest);
            if met || cap >= EULER_CAP {
                break sums;
            }
            cap = (cap * 2).min(EULER_CAP);
        };

        for &tol in tolerances {
            let acc = lerch_accelerated(w, &zero, s, tol, max_terms)?;
            out.rows.push(ConvergenceRow {
                method: Method::Accelerated,
                s,
                z_or_w: z,
                tolerance: tol,
                terms_needed: acc.terms_used,
                achieved_error: (acc.value - reference).norm(),
            });

            let (terms, err) = first_hit(euler.iter().map(|v| (v - reference).norm()), tol)
                .unwrap_or_else(|| (euler.len(), (euler[euler.len() - 1] - reference).norm()));
            out.rows.push(ConvergenceRow {
                method: Method::EulerTransform,
                s,
                z_or_w: z,
                tolerance: tol,
                terms_needed: terms,
                achieved_error: err,
            });
        }

        // Alternating series: one streaming pass records the first hit per tolerance.
        let mut pending: Vec<(f64, Option<(usize, f64)>)> = tolerances.iter().map(|&t| (t, None)).collect();
        let mut sum = 0.0f64;
        let mut last_err = f64::INFINITY;
        for n in 1..=max_terms {
            let term = (n as f64).powi(-(s as i32));
            if n % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            last_err = (sum - reference.re).abs();
            let mut open = false;
            for entry in pending.iter_mut() {
                if entry.1.is_none() {
                    if last_err <= entry.0 {
                        entry.1 = Some((n, last_err));
                    } else {
                        open = true;
                    }
                }
            }
            if !open {
                break;
            }
        }
        for (tol, hit) in pending {
            let (terms, err) = hit.unwrap_or((max_terms, last_err));
            out.rows.push(ConvergenceRow {
                method: Method::DirectAlternating,
                s,
                z_or_w: w,
                tolerance: tol,
                terms_needed: terms,
                achieved_error: err,
            });
        }
    }

    out.rows.sort_by(|a, b| {
        (a.method, a.s)
            .cmp(&(b.method, b.s))
            .then(a.tolerance.total_cmp(&b.tolerance))
    });
    Ok(out)
}

/// Writes notes as `#` comment lines followed by the CSV table
/// `method,s,z_re,z_im,tol,terms,achieved_error`.
pub fn write_csv<W: Write>(out: &BenchOutput, mut writer: W) -> Result<()> {
    for note in &out.notes {
        writeln!(writer, "# {note}").map_err(|e| Error::Parse(e.to_string()))?;
    }
    let mut csv = csv::Writer::from_writer(writer);
    if out.rows.is_empty() {
        csv.write_record(["method", "s", "z_re", "z_im", "tol", "terms", "achieved_error"])
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    for row in &out.rows {
        csv.serialize(CsvRecord::from(row))
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    csv.flush().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(())
}

/// Parses a table written by [`write_csv`], skipping comment lines.
pub fn read_csv<R: Read>(reader: R) -> Result<Vec<ConvergenceRow>> {
    let mut csv = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(reader);
    csv.deserialize::<CsvRecord>()
        .map(|r| r.map(ConvergenceRow::from).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}
