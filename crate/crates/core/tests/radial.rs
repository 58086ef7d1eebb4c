use std::f64::consts::PI;

use partialwave::potentials::RadialPotential;
use partialwave::radial::{RadialProblem, RadialSolver};
use proptest::prelude::*;

fn step(a: f64) -> RadialPotential {
    RadialPotential::step_well(1.0, a).unwrap()
}

fn chi(r: f64) -> RadialPotential {
    RadialPotential::single_well(r).unwrap()
}

/// Bound states of a three-dimensional square well with `Ka = √V₀·a`:
/// zero-energy thresholds sit at zeros of `j_{l-1}`, i.e. `(m − 1/2)π` for
/// `l = 0` and `mπ` for `l = 1`.
fn oracle_count(l: u32, ka: f64) -> usize {
    let offset = if l == 0 { 0.5 } else { 0.0 };
    (1..).take_while(|&m| (m as f64 - offset) * PI < ka).count()
}

fn square_pairs() -> Vec<(u32, f64, f64)> {
    let mut out = Vec::new();
    for i in 0..50 {
        let l = (i % 2) as u32;
        let a = [0.5, 1.0, 1.7, 2.3, 3.1][i % 5];
        let mut ka = 0.3 + 31.0 * (i as f64 / 49.0);
        let offset = if l == 0 { 0.5 } else { 0.0 };
        let frac = ka / PI + offset;
        if (frac - frac.round()).abs() < 0.01 {
            ka += 0.1;
        }
        out.push((l, (ka / a).powi(2), a));
    }
    out
}

#[test]
fn square_well_bound_counts_match_threshold_formula() {
    let s = RadialSolver::default();
    let mut max_seen = 0;
    for (l, v0, a) in square_pairs() {
        let ka = v0.sqrt() * a;
        let want = oracle_count(l, ka);
        let got = s.count_bound_states(l, 3, v0, &step(a)).unwrap();
        assert_eq!(got, want, "l={l} V0={v0} a={a} Ka={ka}");
        max_seen = max_seen.max(got);
    }
    assert!(max_seen >= 10);
}

#[test]
fn half_bound_fires_exactly_at_threshold() {
    let s = RadialSolver::default();
    for m in 1..=3 {
        for a in [0.5, 1.0, 2.0] {
            let v0 = ((2 * m - 1) as f64 * PI / (2.0 * a)).powi(2);
            let hb = s.detect_half_bound(3, v0, &step(a)).unwrap();
            assert!(hb.flag, "m={m} a={a} residual {:e}", hb.residual);
            assert_eq!(s.count_bound_states(0, 3, v0, &step(a)).unwrap(), m - 1);
            for scale in [0.99, 1.01] {
                let off = s.detect_half_bound(3, v0 * scale, &step(a)).unwrap();
                assert!(!off.flag, "m={m} a={a} scale={scale} residual {:e}", off.residual);
            }
        }
    }
}

#[test]
fn half_bound_requires_n3() {
    let s = RadialSolver::default();
    assert!(s.detect_half_bound(2, 1.0, &step(1.0)).is_err());
}

#[test]
fn interior_log_derivative_matches_half_order_bessel() {
    let s = RadialSolver::default();
    let a = 1.0;
    let v0 = 30.0;
    for k in [0.0f64, 0.5, 3.0, 10.0] {
        let kk = (k * k + v0).sqrt();
        let p = RadialProblem::new(0, 3, k, v0, step(a)).unwrap();
        for r in [0.2, 0.5, 0.9] {
            let b = s.regular_solution(&p, r).unwrap();
            let want = kk / (kk * r).tan() - 0.5 / r;
            let got = b.log_derivative();
            assert!(
                (got - want).abs() < 1e-9 * want.abs().max(1.0),
                "k={k} r={r}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn ode_residual_at_endpoint() {
    let s = RadialSolver::default();
    let h = 1e-3;
    for (l, n, k, lambda) in [
        (0, 3, 2.0, 100.0),
        (2, 3, 5.0, 50.0),
        (1, 2, 1.0, 80.0),
        (3, 4, 0.0, 200.0),
    ] {
        let well = chi(1.0);
        let p = RadialProblem::new(l, n, k, lambda, well).unwrap();
        let r = 0.37;
        let radii = [r - 2.0 * h, r - h, r, r + h, r + 2.0 * h];
        let sol = s.regular_solution_at(&p, &radii).unwrap();
        let d: Vec<f64> = sol.iter().map(|b| b.deriv_unscaled()).collect();
        let f = sol[2].value_unscaled();
        let fp = d[2];
        let fpp = (-d[4] + 8.0 * d[3] - 8.0 * d[1] + d[0]) / (12.0 * h);
        let nu = p.nu();
        let rhs = -fp / r + (nu * nu / (r * r) - lambda * well.profile(r) - k * k) * f;
        let scale = fpp.abs() + (fp / r).abs() + (lambda * well.profile(r) * f).abs();
        assert!((fpp - rhs).abs() < 1e-8 * scale, "l={l} n={n}: {fpp} vs {rhs}");
    }
}

#[test]
fn free_problem_has_no_bound_states() {
    let s = RadialSolver::default();
    for l in 0..4 {
        assert_eq!(s.count_bound_states(l, 3, 0.0, &chi(1.0)).unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bound_count_nondecreasing_in_coupling(l in 0u32..4, n in 2u32..5, start in 1.0f64..50.0, growth in 1.05f64..1.6) {
        let s = RadialSolver::default();
        let mut prev = 0;
        let mut lam = start;
        for _ in 0..6 {
            let c = s.count_bound_states(l, n, lam, &chi(1.0)).unwrap();
            prop_assert!(c >= prev, "count fell from {} to {} at lambda {}", prev, c, lam);
            prev = c;
            lam *= growth;
        }
    }

    #[test]
    fn bound_count_invariant_under_scaling(l in 0u32..3, lambda in 5.0f64..300.0, c in 0.3f64..4.0) {
        let s = RadialSolver::default();
        let base = s.count_bound_states(l, 3, lambda, &chi(1.0)).unwrap();
        let scaled = s.count_bound_states(l, 3, lambda, &chi(c)).unwrap();
        prop_assert_eq!(base, scaled);
    }
}
