use std::f64::consts::{LN_2, PI};

use harmonic_lerch::exact::{coefficient_exact, Rational};
use harmonic_lerch::series::{
    ap_coefficient, coefficient_bound, coefficient_float, euler_transform_eval, lerch_accelerated,
    lerch_accelerated_z, lerch_direct, w_to_z, z_to_w, zeta_accelerated, Coefficients, ShiftParam,
};
use harmonic_lerch::Error;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Σ_{n≥1} w^n/(α+n)^s summed naively until terms drop below 1e-18.
fn naive_lerch(w: Complex64, alpha: Complex64, s: u32) -> Complex64 {
    assert!(w.norm() <= 0.6);
    let mut sum = c(0.0, 0.0);
    let mut pow = c(1.0, 0.0);
    for n in 1..2000 {
        pow *= w;
        let term = pow / (alpha + n as f64).powu(s);
        sum += term;
        if term.norm() < 1e-18 {
            break;
        }
    }
    sum
}

/// ζ(s) from N terms plus the Euler–Maclaurin tail through the f' term.
fn zeta_em(s: u32) -> f64 {
    let n = 2000usize;
    let sf = f64::from(s);
    let head: f64 = (1..=n).rev().map(|k| (k as f64).powi(-(s as i32))).sum();
    let nf = n as f64;
    let integral = nf.powf(1.0 - sf) / (sf - 1.0);
    let half = 0.5 * nf.powf(-sf);
    let derivative = sf / 12.0 * nf.powf(-sf - 1.0);
    head + integral - half + derivative
}

#[test]
fn zeta_against_euler_maclaurin() {
    for s in 2..=8 {
        let r = zeta_accelerated(s, 1e-12, 10_000).unwrap();
        assert!(r.converged);
        let oracle = zeta_em(s);
        assert!((r.value.re - oracle).abs() <= 2e-12, "s = {s}: {} vs {oracle}", r.value.re);
    }
    assert!((zeta_em(4) - PI.powi(4) / 90.0).abs() < 1e-13);
}

#[test]
fn dilog_inversion_far_from_the_disk() {
    // Li_2(w) + Li_2(1/w) = −π²/6 − ½ln²(−w) for w < 0
    let w = -3.0;
    let inner = naive_lerch(c(1.0 / w, 0.0), c(0.0, 0.0), 2).re;
    let oracle = -PI * PI / 6.0 - 0.5 * 3f64.ln().powi(2) - inner;
    let r = lerch_accelerated(c(w, 0.0), &ShiftParam::zero(), 2, 1e-12, 10_000).unwrap();
    assert!(r.converged);
    assert!((r.value.re - oracle).abs() <= 1e-11, "{} vs {oracle}", r.value.re);
    assert!(r.value.im.abs() <= 1e-15);
}

#[test]
fn unit_shift_log_form() {
    // Σ wⁿ/(n+1) = (−ln(1−w) − w)/w
    let shift = ShiftParam::real(1.0).unwrap();
    for w in [c(-3.0, 0.0), c(-0.5, 2.0), c(0.3, -0.7)] {
        let oracle = (-(c(1.0, 0.0) - w).ln() - w) / w;
        let r = lerch_accelerated(w, &shift, 1, 1e-12, 10_000).unwrap();
        assert!(r.converged);
        assert!((r.value - oracle).norm() <= 1e-11, "w = {w}");
    }
}

#[test]
fn alternating_constants() {
    let zero = ShiftParam::zero();
    let w = c(-1.0, 0.0);
    let cases = [
        (1, -LN_2),
        (2, -PI * PI / 12.0),
        (4, -7.0 * PI.powi(4) / 720.0),
    ];
    for (s, oracle) in cases {
        let r = lerch_accelerated(w, &zero, s, 1e-12, 10_000).unwrap();
        assert!((r.value.re - oracle).abs() <= 1e-12, "s = {s}");
        assert!((r.value.re - oracle).abs() <= r.error_bound + 1e-14);
        let euler = euler_transform_eval(c(0.5, 0.0), &zero, s, 80).unwrap();
        assert!((euler.re - oracle).abs() <= 1e-12, "euler s = {s}");
    }
}

#[test]
fn float_coefficients_at_zero_shift() {
    // α = 0, s = 1: c_p = −1/p
    for (p, value) in (1..=50).zip(Coefficients::new(&ShiftParam::zero(), 1).unwrap()) {
        assert!((value.re + 1.0 / f64::from(p)).abs() <= 1e-16, "p = {p}");
        assert_eq!(value.im, 0.0);
    }
    let exact = coefficient_exact(25, &Rational::new(7, 3).unwrap(), 4).unwrap().to_f64();
    let float = coefficient_float(25, &ShiftParam::real(7.0 / 3.0).unwrap(), 4).unwrap().re;
    assert!((float / exact - 1.0).abs() <= 1e-13);
}

#[test]
fn ap_recursion() {
    // a_p(s) = Σ_{i≤p} a_i(s−1)/i
    for s in 2..=5 {
        let mut running = 0.0;
        for p in 1..=60 {
            running += ap_coefficient(p, s - 1).unwrap() / f64::from(p);
            let a = ap_coefficient(p, s).unwrap();
            assert!((a - running).abs() <= 1e-13 * running, "s = {s}, p = {p}");
        }
    }
}

#[test]
fn error_contract() {
    let zero = ShiftParam::zero();
    assert!(matches!(
        lerch_accelerated(c(0.5, 0.0), &zero, 2, 1e-10, 100),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        lerch_direct(c(1.0, 0.0), &zero, 2, 1e-10, 100),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        lerch_accelerated(c(-1.0, 0.0), &zero, 2, 1e-14, 100),
        Err(Error::Precision(_))
    ));
    assert!(matches!(ShiftParam::real(-3.0), Err(Error::InvalidShift { .. })));
    assert!(lerch_accelerated(c(-1.0, 0.0), &zero, 0, 1e-10, 100).is_err());
    assert!(lerch_accelerated(c(f64::NAN, 0.0), &zero, 2, 1e-10, 100).is_err());

    // Close to the boundary the cap runs out before the bound certifies anything.
    let r = lerch_accelerated_z(c(0.999, 0.0), &zero, 2, 1e-12, 50).unwrap();
    assert!(!r.converged);
    assert_eq!(r.terms_used, 50);
    assert!(r.error_bound > 1e-12);
}

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..0.55, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn shift() -> impl Strategy<Value = ShiftParam> {
    prop_oneof![
        Just(c(0.0, 0.0)),
        Just(c(0.5, 0.0)),
        Just(c(0.0, 1.0)),
        Just(c(-0.5, 0.5)),
        (-4.9f64..4.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im)),
    ]
    .prop_filter_map("forbidden shift", |a| ShiftParam::new(a).ok().filter(|s| s.gap() > 0.05))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn domain_map_round_trip(w in (-50.0f64..0.49, -50.0f64..50.0)) {
        let w = c(w.0, w.1);
        let z = w_to_z(w);
        prop_assert!(z.norm() < 1.0);
        prop_assert!((z_to_w(z) - w).norm() <= 1e-12 * (1.0 + w.norm()));
    }

    #[test]
    fn accelerated_matches_naive_sum(w in disk_point(), shift in shift(), s in 1u32..5) {
        prop_assume!(w.re < 0.5);
        let oracle = naive_lerch(w, shift.alpha(), s);
        let r = lerch_accelerated(w, &shift, s, 1e-12, 20_000).unwrap();
        prop_assert!(r.converged);
        prop_assert!(r.error_bound <= 1e-12);
        let scale = 1.0f64.max(oracle.norm());
        prop_assert!((r.value - oracle).norm() <= 1e-10 * scale, "{} vs {}", r.value, oracle);
    }

    #[test]
    fn direct_bound_is_honest(w in disk_point(), shift in shift(), s in 1u32..4) {
        let oracle = naive_lerch(w, shift.alpha(), s);
        let r = lerch_direct(w, &shift, s, 1e-9, 10_000).unwrap();
        prop_assert!(r.converged);
        prop_assert!((r.value - oracle).norm() <= r.error_bound + 1e-13);
    }

    #[test]
    fn accelerated_and_direct_agree_inside_small_disk(z in disk_point(), shift in shift(), s in 1u32..5) {
        prop_assume!(z.norm() <= 0.4);
        let w = z_to_w(z);
        let fast = lerch_accelerated(w, &shift, s, 1e-12, 10_000).unwrap();
        let slow = lerch_direct(w, &shift, s, 1e-12, 10_000).unwrap();
        prop_assert!(fast.converged && slow.converged);
        let allowed = 10.0 * (fast.error_bound + slow.error_bound);
        prop_assert!((fast.value - slow.value).norm() <= allowed, "{} vs {}", fast.value, slow.value);
    }

    #[test]
    fn coefficients_stay_under_bound(shift in shift(), s in 1u32..7) {
        for (p, value) in (1..=120).zip(Coefficients::new(&shift, s).unwrap()) {
            let bound = coefficient_bound(p, &shift, s).unwrap();
            prop_assert!(value.norm() <= bound * (1.0 + 1e-10), "p={} |c|={} B={}", p, value.norm(), bound);
        }
    }

    #[test]
    fn looser_tolerance_never_costs_more(s in 1u32..6, k in 3i32..12) {
        let zero = ShiftParam::zero();
        let w = c(-1.0, 0.0);
        let tight = lerch_accelerated(w, &zero, s, 10f64.powi(-k - 1), 10_000).unwrap();
        let loose = lerch_accelerated(w, &zero, s, 10f64.powi(-k), 10_000).unwrap();
        prop_assert!(loose.terms_used <= tight.terms_used);
        prop_assert!((loose.value - tight.value).norm() <= loose.error_bound + tight.error_bound);
    }
}
