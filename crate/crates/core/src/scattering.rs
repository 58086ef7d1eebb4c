//! Phase shifts of central wells, their continuous branches anchored at
//! large `k`, winding numbers, Levinson checks and the frequencies where a
//! branch passes through a multiple of `π`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::potentials::RadialPotential;
use crate::radial::{BoundaryData, RadialProblem, RadialSolver};
use crate::roots::brent;
use crate::specfun::bessel_jy;

/// One sample of a phase curve; `s_eigenvalue = e^{2iδ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub k: f64,
    pub delta: f64,
    pub s_eigenvalue: Complex64,
}

impl PhasePoint {
    pub fn new(k: f64, delta: f64) -> Self {
        let s = Complex64::new((2.0 * delta).cos(), (2.0 * delta).sin());
        Self {
            k,
            delta,
            s_eigenvalue: s,
        }
    }
}

/// Continuous branch of `δ_l(k)` ordered from the largest `k` downwards.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseCurve {
    pub l: u32,
    pub n: u32,
    pub lambda: f64,
    pub well: RadialPotential,
    pub points: Vec<PhasePoint>,
    pub branch_anchored_at_infinity: bool,
}

impl PhaseCurve {
    /// The same samples traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut c = self.clone();
        c.points.reverse();
        c
    }

    pub fn k_values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.k).collect()
    }

    /// Linear interpolation of the branch at `k` inside the sampled range.
    pub fn delta_at(&self, k: f64) -> Option<f64> {
        self.points.windows(2).find_map(|w| {
            let (a, b) = (w[0], w[1]);
            let (lo, hi) = if a.k < b.k { (a, b) } else { (b, a) };
            if k >= lo.k && k <= hi.k {
                if hi.k == lo.k {
                    return Some(lo.delta);
                }
                let t = (k - lo.k) / (hi.k - lo.k);
                Some(lo.delta + t * (hi.delta - lo.delta))
            } else {
                None
            }
        })
    }
}

/// Refinement and anchoring controls for [`phase_curve_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveOptions {
    /// Adjacent samples whose unwrapped difference exceeds this get bisected.
    pub jump_guard: f64,
    pub max_refine_levels: u32,
    pub anchor_tolerance: f64,
    pub max_extensions: u32,
}

impl Default for CurveOptions {
    fn default() -> Self {
        Self {
            jump_guard: PI / 4.0,
            max_refine_levels: 20,
            anchor_tolerance: 0.02,
            max_extensions: 16,
        }
    }
}

/// Principal-value phase shift computed from matching data at `r_m`.
fn delta_from_boundary(p: &RadialProblem, b: &BoundaryData) -> Result<f64> {
    let k = p.k();
    let (wj, wy) = match b.free {
        Some(c) => (-c.b, c.a),
        None => {
            let v = bessel_jy(p.order(), k * b.r)?;
            (b.value * k * v.jp - b.deriv * v.j, b.value * k * v.yp - b.deriv * v.y)
        }
    };
    if wj == 0.0 && wy == 0.0 {
        return Err(Error::Internal(format!(
            "both matching Wronskians vanish at k = {k}, r = {}",
            b.r
        )));
    }
    if wy == 0.0 {
        return Ok(FRAC_PI_2);
    }
    let d = (wj / wy).atan();
    Ok(if d <= -FRAC_PI_2 { FRAC_PI_2 } else { d })
}

/// `δ_l(k)` reduced to `(−π/2, π/2]`, matched at `r_m` (default: support).
pub fn phase_shift_mod_pi_at(solver: &RadialSolver, p: &RadialProblem, r_m: f64) -> Result<f64> {
    if !(p.k() > 0.0) {
        return Err(invalid("k", format!("phase shifts need k > 0, got {}", p.k())));
    }
    let rho = p.well().support_radius();
    if r_m < rho * (1.0 - 1e-12) {
        return Err(invalid(
            "r_m",
            format!("matching radius {r_m} lies inside the support radius {rho}"),
        ));
    }
    if p.lambda() == 0.0 {
        return Ok(0.0);
    }
    let b = solver.regular_solution(p, r_m)?;
    delta_from_boundary(p, &b)
}

/// [`phase_shift_mod_pi_at`] with the matching radius at the support edge.
pub fn phase_shift_mod_pi(p: &RadialProblem) -> Result<f64> {
    phase_shift_mod_pi_at(&RadialSolver::default(), p, p.well().support_radius())
}

fn unwrap_near(principal: f64, reference: f64) -> f64 {
    principal + PI * ((reference - principal) / PI).round()
}

struct CurveBuilder<'a> {
    solver: &'a RadialSolver,
    base: RadialProblem,
    opts: CurveOptions,
}

impl CurveBuilder<'_> {
    fn principal(&self, k: f64) -> Result<f64> {
        let p = self.base.with_k(k)?;
        phase_shift_mod_pi_at(self.solver, &p, p.well().support_radius())
    }

    fn principal_many(&self, ks: &[f64]) -> Result<Vec<f64>> {
        ks.par_iter().map(|&k| self.principal(k)).collect()
    }

    /// Appends the unwrapped branch on `(k_a, k_b]`, bisecting until the
    /// jump guard holds.
    fn refine_into(&self, a: PhasePoint, kb: f64, db: f64, level: u32, out: &mut Vec<PhasePoint>) -> Result<()> {
        let cont = unwrap_near(db, a.delta);
        if (cont - a.delta).abs() <= self.opts.jump_guard {
            out.push(PhasePoint::new(kb, cont));
            return Ok(());
        }
        if level >= self.opts.max_refine_levels {
            let (lo, hi) = if a.k < kb { (a.k, kb) } else { (kb, a.k) };
            return Err(Error::RefinementExhausted { lo, hi });
        }
        let km = 0.5 * (a.k + kb);
        let dm = self.principal(km)?;
        let mid_cont = unwrap_near(dm, a.delta);
        let mid = PhasePoint::new(km, mid_cont);
        if (mid_cont - a.delta).abs() > self.opts.jump_guard {
            self.refine_into(a, km, dm, level + 1, out)?;
        } else {
            out.push(mid);
        }
        let last = *out.last().expect("midpoint pushed");
        self.refine_into(last, kb, db, level + 1, out)
    }
}

/// Continuous branch over a descending grid; see [`CurveOptions`].
pub fn phase_curve_with(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    lambda: f64,
    well: &RadialPotential,
    k_grid: &[f64],
    opts: &CurveOptions,
) -> Result<PhaseCurve> {
    if k_grid.len() < 2 {
        return Err(invalid("k_grid", "needs at least two points"));
    }
    if k_grid.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(invalid("k_grid", "must be strictly descending"));
    }
    if !(k_grid[k_grid.len() - 1] > 0.0) {
        return Err(invalid("k_min", "must be > 0"));
    }
    let base = RadialProblem::new(l, n, k_grid[0], lambda, *well)?;
    let builder = CurveBuilder {
        solver,
        base,
        opts: *opts,
    };

    let mut grid = k_grid.to_vec();
    let mut k_top = grid[0];
    let mut d_top = builder.principal(k_top)?;
    let mut ext = Vec::new();
    let mut extensions = 0;
    while d_top.abs() >= opts.anchor_tolerance {
        if extensions >= opts.max_extensions {
            return Err(Error::NoConvergence(format!(
                "phase shift still {d_top:.3} at k = {k_top}; anchor not reached"
            )));
        }
        k_top *= 2.0;
        ext.push(k_top);
        d_top = builder.principal(k_top)?;
        extensions += 1;
    }
    if !ext.is_empty() {
        ext.reverse();
        let mut full = Vec::new();
        for (i, &k) in ext.iter().enumerate() {
            let next = if i + 1 < ext.len() { ext[i + 1] } else { grid[0] };
            let pieces = 32;
            for j in 0..pieces {
                full.push(k + (next - k) * j as f64 / pieces as f64);
            }
        }
        full.extend_from_slice(&grid);
        grid = full;
    }

    let principal = builder.principal_many(&grid)?;
    let mut points = Vec::with_capacity(grid.len());
    points.push(PhasePoint::new(grid[0], principal[0]));
    for i in 1..grid.len() {
        let prev = *points.last().expect("nonempty");
        builder.refine_into(prev, grid[i], principal[i], 0, &mut points)?;
    }
    Ok(PhaseCurve {
        l,
        n,
        lambda,
        well: *well,
        points,
        branch_anchored_at_infinity: true,
    })
}

/// [`phase_curve_with`] using default solver and options.
pub fn phase_curve(l: u32, n: u32, lambda: f64, well: &RadialPotential, k_grid: &[f64]) -> Result<PhaseCurve> {
    phase_curve_with(
        &RadialSolver::default(),
        l,
        n,
        lambda,
        well,
        k_grid,
        &CurveOptions::default(),
    )
}

/// Descending grid: linear on `[1, k_max]`, logarithmic on `[k_min, 1)`.
pub fn default_k_grid(k_min: f64, k_max: f64, linear_points: usize, per_decade: usize) -> Result<Vec<f64>> {
    if !(k_min > 0.0 && k_max > k_min) {
        return Err(invalid(
            "k range",
            format!("need 0 < k_min < k_max, got [{k_min}, {k_max}]"),
        ));
    }
    let mut ks = Vec::new();
    let split = 1.0f64.clamp(k_min, k_max);
    let lin = linear_points.max(2);
    if k_max > split {
        for i in 0..lin {
            ks.push(k_max - (k_max - split) * i as f64 / (lin - 1) as f64);
        }
    } else {
        ks.push(k_max);
    }
    if split > k_min {
        let decades = (split / k_min).log10();
        let m = ((decades * per_decade as f64).ceil() as usize).max(1);
        for i in 1..=m {
            ks.push(split * (k_min / split).powf(i as f64 / m as f64));
        }
    }
    ks.dedup();
    Ok(ks)
}

/// `(δ(k_last) − δ(k_first))/π`.
pub fn winding_number(curve: &PhaseCurve) -> f64 {
    match (curve.points.first(), curve.points.last()) {
        (Some(a), Some(b)) => (b.delta - a.delta) / PI,
        _ => 0.0,
    }
}

/// Outcome of [`levinson_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevinsonReport {
    pub l: u32,
    pub n: u32,
    pub lambda: f64,
    pub k_min: f64,
    pub k_max: f64,
    pub winding: f64,
    pub n_bound: usize,
    pub half_bound: bool,
    pub residual: f64,
    pub pass: bool,
}

/// Levinson tolerance on `|winding − (n_bound + ν)|`.
pub const LEVINSON_TOLERANCE: f64 = 0.05;

/// Default top of the k-grid for a well: several interior wave numbers.
pub fn default_k_max(lambda: f64, well: &RadialPotential) -> f64 {
    let rho = well.support_radius();
    (20.0 / rho).max(4.0 * (lambda * well.max_value()).sqrt())
}

/// Compares the phase winding on `(k_min, ∞)` with the oscillation count.
pub fn levinson_check(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    lambda: f64,
    well: &RadialPotential,
    k_min: f64,
) -> Result<LevinsonReport> {
    let k_max = default_k_max(lambda, well);
    let grid = default_k_grid(k_min, k_max, 200, 30)?;
    let curve = phase_curve_with(solver, l, n, lambda, well, &grid, &CurveOptions::default())?;
    let winding = winding_number(&curve);
    let n_bound = solver.count_bound_states(l, n, lambda, well)?;
    let half_bound = if n == 3 && l == 0 && lambda > 0.0 {
        solver.detect_half_bound(3, lambda, well)?.flag
    } else {
        false
    };
    let expected = n_bound as f64 + if half_bound { 0.5 } else { 0.0 };
    let residual = (winding - expected).abs();
    Ok(LevinsonReport {
        l,
        n,
        lambda,
        k_min,
        k_max: curve.points[0].k,
        winding,
        n_bound,
        half_bound,
        residual,
        pass: residual < LEVINSON_TOLERANCE,
    })
}

/// Side from which the branch reaches `mπ` as `k` decreases to `k₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Approach {
    FromBelow,
    FromAbove,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransparentFrequency {
    pub k0: f64,
    /// The branch value is `multiple·π` at `k0`.
    pub multiple: i64,
    pub approach: Approach,
    pub bracket_width: f64,
    /// Principal phase shift re-evaluated at `k0`.
    pub residual: f64,
}

/// Frequencies in `(k_lo, k_hi)` where the continuous branch crosses a
/// multiple of `π`, refined by Brent's method on the principal value.
pub fn almost_transparent_frequencies(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    lambda: f64,
    well: &RadialPotential,
    k_range: (f64, f64),
    grid_points: usize,
) -> Result<Vec<TransparentFrequency>> {
    let (k_lo, k_hi) = k_range;
    if !(k_lo > 0.0 && k_hi > k_lo) {
        return Err(invalid("k_range", format!("need 0 < lo < hi, got [{k_lo}, {k_hi}]")));
    }
    if lambda == 0.0 {
        return Ok(Vec::new());
    }
    let top = default_k_max(lambda, well).max(k_hi);
    let mut grid = Vec::new();
    if top > k_hi {
        let m = 64;
        for i in 0..m {
            grid.push(top - (top - k_hi) * i as f64 / m as f64);
        }
    }
    let pts = grid_points.max(2);
    for i in 0..pts {
        grid.push(k_hi - (k_hi - k_lo) * i as f64 / (pts - 1) as f64);
    }
    let curve = phase_curve_with(solver, l, n, lambda, well, &grid, &CurveOptions::default())?;
    let base = RadialProblem::new(l, n, k_hi, lambda, *well)?;
    let principal = |k: f64| -> Result<f64> {
        let p = base.with_k(k)?;
        phase_shift_mod_pi_at(solver, &p, p.well().support_radius())
    };
    let mut found = Vec::new();
    for w in curve.points.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        if lo.k >= k_hi || hi.k <= k_lo {
            continue;
        }
        let m_hi = (hi.delta / PI).floor();
        let m_lo = (lo.delta / PI).floor();
        if m_hi == m_lo {
            continue;
        }
        let multiple = m_hi.max(m_lo) as i64;
        let target = multiple as f64 * PI;
        let (g_hi, g_lo) = (hi.delta - target, lo.delta - target);
        let root = brent(principal, lo.k, hi.k, g_lo, g_hi, 1e-13 * k_hi)?;
        if !(root.root > k_lo && root.root < k_hi) {
            continue;
        }
        let residual = principal(root.root)?;
        let approach = if g_hi < 0.0 {
            Approach::FromBelow
        } else {
            Approach::FromAbove
        };
        found.push(TransparentFrequency {
            k0: root.root,
            multiple,
            approach,
            bracket_width: root.width(),
            residual,
        });
    }
    found.sort_by(|a, b| a.k0.total_cmp(&b.k0));
    Ok(found)
}

/// Continuous `δ(λ)` at fixed `k`, unwrapped from `δ(0) = 0` along an
/// ascending list of couplings.
pub fn phase_vs_coupling(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    k: f64,
    well: &RadialPotential,
    lambdas: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if lambdas.windows(2).any(|w| !(w[1] > w[0])) || lambdas.first().is_some_and(|&v| v < 0.0) {
        return Err(invalid("lambdas", "must be nonnegative and strictly ascending"));
    }
    let base = RadialProblem::new(l, n, k, 0.0, *well)?;
    let principal = |lam: f64| -> Result<f64> {
        let p = base.with_lambda(lam)?;
        phase_shift_mod_pi_at(solver, &p, p.well().support_radius())
    };
    let guard = PI / 4.0;
    let mut out = Vec::with_capacity(lambdas.len());
    let (mut lam_prev, mut d_prev) = (0.0, 0.0);
    for &lam in lambdas {
        let mut stack = vec![lam];
        while let Some(&target) = stack.last() {
            let d = unwrap_near(principal(target)?, d_prev);
            if (d - d_prev).abs() <= guard || target - lam_prev < 1e-9 * lam.max(1.0) {
                stack.pop();
                lam_prev = target;
                d_prev = d;
            } else {
                if stack.len() > 40 {
                    return Err(Error::RefinementExhausted {
                        lo: lam_prev,
                        hi: target,
                    });
                }
                stack.push(0.5 * (lam_prev + target));
            }
        }
        out.push((lam, d_prev));
    }
    Ok(out)
}
