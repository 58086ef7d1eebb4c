//! The Wronskian determinant between the free Bessel solution and the
//! regular solution of a χ-well, zero scans in `k` and `R`, and the
//! non-transparency certificate for the two-well configuration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::potentials::{chi_hash, DoubleWellConfig, RadialPotential};
use crate::radial::{RadialProblem, RadialSolver};
use crate::roots::brent;
use crate::specfun::bessel_jy;
use crate::TOOL_VERSION;

/// Default certificate margin threshold (normalized units).
pub const MARGIN_THRESHOLD: f64 = 1e-4;

/// Local minima of `|F|` below this, without a sign change, are tangencies.
pub const TANGENCY_FLOOR: f64 = 1e-7;

/// Both forms of the determinant at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WronskianValue {
    /// `J_ν(kr)·∂_r𝒥 − ∂_r J_ν(kr)·𝒥` under the solver's normalization.
    pub raw: f64,
    /// Dimensionless form in `[−1, 1]`.
    pub normalized: f64,
}

/// The determinant for an arbitrary well at `r_eval` (outside its support).
pub fn wronskian_for_well(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    k: f64,
    lambda: f64,
    well: &RadialPotential,
    r_eval: f64,
) -> Result<WronskianValue> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(invalid("k", format!("must be > 0, got {k}")));
    }
    let rho = well.support_radius();
    if !(r_eval >= rho * (1.0 - 1e-12)) {
        return Err(invalid(
            "r_eval",
            format!("must lie outside the support radius {rho}, got {r_eval}"),
        ));
    }
    let p = RadialProblem::new(l, n, k, lambda, *well)?;
    let b = solver.regular_solution(&p, r_eval)?;
    let v = bessel_jy(p.order(), k * r_eval)?;
    let core = match b.free {
        Some(c) => k * c.b * (v.j * v.yp - v.jp * v.y),
        None => v.j * b.deriv - k * v.jp * b.value,
    };
    let raw = if core == 0.0 {
        0.0
    } else {
        core.signum() * (core.abs().ln() + b.log_scale).exp()
    };
    let denom = (v.j.abs() + v.jp.abs()) * (b.value.abs() + b.deriv.abs() / k);
    let normalized = core / k / denom;
    Ok(WronskianValue { raw, normalized })
}

/// `D_{l,k,λ,R}(r_eval)` for the χ-well of radius `R`.
pub fn wronskian_d(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    k: f64,
    lambda: f64,
    r: f64,
    r_eval: f64,
) -> Result<WronskianValue> {
    let well = RadialPotential::single_well(r)?;
    wronskian_for_well(solver, l, n, k, lambda, &well, r_eval)
}

/// Which parameter a [`ZeroScan`] varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanVariable {
    K,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanZero {
    pub position: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Normalized determinant re-evaluated at `position`.
    pub value: f64,
}

impl ScanZero {
    pub fn bracket_width(&self) -> f64 {
        self.bracket_hi - self.bracket_lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangency {
    pub position: f64,
    pub value: f64,
}

/// Sign-change zeros of the normalized determinant `D(R)` over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroScan {
    pub variable: ScanVariable,
    pub l: u32,
    pub n: u32,
    pub lambda: f64,
    /// `R` for a k-scan, `k` for an R-scan.
    pub fixed: f64,
    pub interval: (f64, f64),
    pub grid_step: f64,
    pub zeros: Vec<ScanZero>,
    pub tangencies: Vec<Tangency>,
}

impl ZeroScan {
    pub fn positions(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.position).collect()
    }
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let m = ((hi - lo) / step).ceil().max(1.0) as usize;
    (0..=m).map(|i| lo + (hi - lo) * i as f64 / m as f64).collect()
}

/// Coarse-grid bracketing, local refinement near `|F|` minima, Brent
/// polishing and tangency flagging for any scalar function.
fn scan_function<F>(f: F, lo: f64, hi: f64, step: f64) -> Result<(Vec<ScanZero>, Vec<Tangency>)>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let xs = grid(lo, hi, step);
    let ys: Vec<f64> = xs.par_iter().map(|&x| f(x)).collect::<Result<_>>()?;

    let mut intervals: Vec<(f64, f64, f64, f64)> = Vec::new();
    let mut tangencies = Vec::new();
    for i in 0..xs.len() - 1 {
        let crosses = ys[i] == 0.0 || ys[i].signum() != ys[i + 1].signum();
        if crosses && (ys[i + 1] != 0.0 || i + 2 == xs.len()) {
            intervals.push((xs[i], xs[i + 1], ys[i], ys[i + 1]));
        }
    }
    let mut minima = Vec::new();
    for i in 1..xs.len() - 1 {
        let (a, b, c) = (ys[i - 1], ys[i], ys[i + 1]);
        let same = a.signum() == b.signum() && b.signum() == c.signum();
        if same && b.abs() < a.abs() && b.abs() < c.abs() {
            minima.push(i);
        }
    }
    let fine: Vec<(Vec<f64>, Vec<f64>)> = minima
        .par_iter()
        .map(|&i| {
            let sub = grid(xs[i - 1], xs[i + 1], step / 10.0);
            let vals = sub.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
            Ok((sub, vals))
        })
        .collect::<Result<_>>()?;
    for (sub, vals) in fine {
        let mut split = false;
        for j in 0..sub.len() - 1 {
            if vals[j].signum() != vals[j + 1].signum() {
                intervals.push((sub[j], sub[j + 1], vals[j], vals[j + 1]));
                split = true;
            }
        }
        if split {
            continue;
        }
        let j = (0..vals.len())
            .min_by(|&a, &b| vals[a].abs().total_cmp(&vals[b].abs()))
            .expect("nonempty");
        let a = sub[j.saturating_sub(1)];
        let b = sub[(j + 1).min(sub.len() - 1)];
        let (xm, vm) = golden_min_abs(&f, a, b)?;
        if vm.signum() != vals[j].signum() {
            let fa = f(a)?;
            let fb = f(b)?;
            intervals.push((a, xm, fa, vm));
            intervals.push((xm, b, vm, fb));
        } else if vm.abs() < TANGENCY_FLOOR {
            tangencies.push(Tangency {
                position: xm,
                value: vm,
            });
        }
    }
    intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
    intervals.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    let xtol = 1e-11 * (hi - lo);
    let zeros: Vec<ScanZero> = intervals
        .par_iter()
        .map(|&(a, b, fa, fb)| {
            let r = brent(&f, a, b, fa, fb, xtol)?;
            let value = if r.value == 0.0 { 0.0 } else { f(r.root)? };
            Ok(ScanZero {
                position: r.root,
                bracket_lo: r.lo,
                bracket_hi: r.hi,
                value,
            })
        })
        .collect::<Result<_>>()?;
    Ok((zeros, tangencies))
}

/// Golden-section minimization of `|f|` on `[a, b]`; stops early on a sign
/// flip relative to the left endpoint.
fn golden_min_abs<F>(f: &F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (a, b);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let reference = f(a)?.signum();
    for _ in 0..80 {
        if fc.signum() != reference {
            return Ok((c, fc));
        }
        if fd.signum() != reference {
            return Ok((d, fd));
        }
        if (b - a).abs() <= 1e-13 * (a.abs() + b.abs()).max(1e-300) {
            break;
        }
        if fc.abs() < fd.abs() {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc.abs() < fd.abs() { (c, fc) } else { (d, fd) })
}

fn reject_free(lambda: f64) -> Result<()> {
    if lambda == 0.0 {
        return Err(Error::IdenticallyZero(
            "with lambda = 0 the regular solution is the free Bessel function, so D vanishes for every k and R".into(),
        ));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", format!("must be > 0, got {lambda}")));
    }
    Ok(())
}

/// Default k-grid step for a well of radius `R`.
pub fn default_k_step(r: f64) -> f64 {
    0.01f64.min(std::f64::consts::PI / (40.0 * r))
}

/// Default R-grid step at frequency `k`.
pub fn default_r_step(k: f64) -> f64 {
    0.01f64.min(std::f64::consts::PI / (40.0 * k))
}

/// Zeros in `k` of `D_{l,k,λ,R}(R)` on `k_interval`.
pub fn scan_zeros_in_k(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    lambda: f64,
    r: f64,
    k_interval: (f64, f64),
    grid_step: f64,
) -> Result<ZeroScan> {
    reject_free(lambda)?;
    let (lo, hi) = k_interval;
    if !(lo > 0.0 && hi > lo) {
        return Err(invalid("k_interval", format!("need 0 < lo < hi, got [{lo}, {hi}]")));
    }
    if !(grid_step > 0.0) {
        return Err(invalid("grid_step", format!("must be > 0, got {grid_step}")));
    }
    let well = RadialPotential::single_well(r)?;
    RadialProblem::new(l, n, lo, lambda, well)?;
    let f = |k: f64| Ok(wronskian_for_well(solver, l, n, k, lambda, &well, r)?.normalized);
    let (zeros, tangencies) = scan_function(f, lo, hi, grid_step)?;
    Ok(ZeroScan {
        variable: ScanVariable::K,
        l,
        n,
        lambda,
        fixed: r,
        interval: k_interval,
        grid_step,
        zeros,
        tangencies,
    })
}

/// Zeros in `R` of `D_{l,k,λ,R}(R)` at fixed `k`.
pub fn scan_zeros_in_r(
    solver: &RadialSolver,
    l: u32,
    n: u32,
    lambda: f64,
    k: f64,
    r_interval: (f64, f64),
    grid_step: f64,
) -> Result<ZeroScan> {
    reject_free(lambda)?;
    let (lo, hi) = r_interval;
    if !(lo > 0.0 && hi > lo) {
        return Err(invalid("R_interval", format!("need 0 < lo < hi, got [{lo}, {hi}]")));
    }
    if !(grid_step > 0.0) {
        return Err(invalid("grid_step", format!("must be > 0, got {grid_step}")));
    }
    if !(k > 0.0) {
        return Err(invalid("k", format!("must be > 0, got {k}")));
    }
    let f = |r: f64| {
        let well = RadialPotential::single_well(r)?;
        Ok(wronskian_for_well(solver, l, n, k, lambda, &well, r)?.normalized)
    };
    let (zeros, tangencies) = scan_function(f, lo, hi, grid_step)?;
    Ok(ZeroScan {
        variable: ScanVariable::R,
        l,
        n,
        lambda,
        fixed: k,
        interval: r_interval,
        grid_step,
        zeros,
        tangencies,
    })
}

/// Certificate verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The pair of sectors and the frequency where the margin is attained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginWitness {
    pub l: u32,
    pub l_unit: u32,
    pub k: f64,
    pub normalized_d: f64,
}

/// How far the angular truncation reaches compared with the centrifugal
/// barrier estimate `√(k_hi²·max(R,1)² + λ)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationNote {
    pub largest_order_scanned: f64,
    pub barrier_order_estimate: f64,
    pub covers_barrier_estimate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransparencyCertificate {
    pub config: DoubleWellConfig,
    pub n: u32,
    pub l_max: u32,
    pub lt_max: u32,
    pub k_interval: (f64, f64),
    pub grid_step: f64,
    pub margin_threshold: f64,
    /// Unit-well zeros per angular index `l̃`.
    pub unit_well_zeros: BTreeMap<u32, Vec<f64>>,
    pub unit_well_tangencies: BTreeMap<u32, Vec<f64>>,
    pub unit_zero_count: usize,
    /// `None` when the unit well has no zeros: nothing can coincide.
    pub margin: Option<f64>,
    pub witness: Option<MarginWitness>,
    pub truncation: TruncationNote,
    pub verdict: Verdict,
    pub reason: String,
    pub chi_hash: String,
    pub tool_version: String,
}

/// Settings shared by certificates and the R search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyOptions {
    pub n: u32,
    pub grid_step: Option<f64>,
    pub margin_threshold: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            n: 3,
            grid_step: None,
            margin_threshold: MARGIN_THRESHOLD,
        }
    }
}

/// Unit-well zero sets for `l̃ ≤ lt_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitZeros {
    pub lambda: f64,
    pub zeros: BTreeMap<u32, Vec<f64>>,
    pub tangencies: BTreeMap<u32, Vec<f64>>,
}

impl UnitZeros {
    pub fn count(&self) -> usize {
        self.zeros.values().map(Vec::len).sum()
    }

    fn flat(&self) -> Vec<(u32, f64)> {
        self.zeros
            .iter()
            .flat_map(|(&l, ks)| ks.iter().map(move |&k| (l, k)))
            .collect()
    }
}

pub fn unit_well_zeros(
    solver: &RadialSolver,
    lambda: f64,
    lt_max: u32,
    k_interval: (f64, f64),
    opts: &CertifyOptions,
) -> Result<UnitZeros> {
    let step = opts.grid_step.unwrap_or_else(|| default_k_step(1.0));
    let mut zeros = BTreeMap::new();
    let mut tangencies = BTreeMap::new();
    for lt in 0..=lt_max {
        let scan = scan_zeros_in_k(solver, lt, opts.n, lambda, 1.0, k_interval, step)?;
        for z in &scan.zeros {
            let (lo, hi) = k_interval;
            if z.position - lo <= step || hi - z.position <= step {
                return Err(Error::BoundaryZero { k: z.position, lo, hi });
            }
        }
        zeros.insert(lt, scan.positions());
        tangencies.insert(lt, scan.tangencies.iter().map(|t| t.position).collect());
    }
    Ok(UnitZeros {
        lambda,
        zeros,
        tangencies,
    })
}

/// Minimum normalized `|D_{l,k_i,λ,R}(R)|` over unit zeros and `l ≤ l_max`.
fn margin_at(solver: &RadialSolver, unit: &UnitZeros, r: f64, l_max: u32, n: u32) -> Result<Option<MarginWitness>> {
    let flat = unit.flat();
    let well = RadialPotential::single_well(r)?;
    let tasks: Vec<(u32, f64, u32)> = flat
        .iter()
        .flat_map(|&(lt, k)| (0..=l_max).map(move |l| (lt, k, l)))
        .collect();
    let values: Vec<f64> = tasks
        .par_iter()
        .map(|&(_, k, l)| Ok(wronskian_for_well(solver, l, n, k, unit.lambda, &well, r)?.normalized))
        .collect::<Result<_>>()?;
    let mut best: Option<MarginWitness> = None;
    for (&(lt, k, l), &v) in tasks.iter().zip(&values) {
        if best.is_none_or(|b| v.abs() < b.normalized_d.abs()) {
            best = Some(MarginWitness {
                l,
                l_unit: lt,
                k,
                normalized_d: v,
            });
        }
    }
    Ok(best)
}

fn truncation_note(config: &DoubleWellConfig, lt_max: u32, l_max: u32, n: u32, k_hi: f64) -> TruncationNote {
    let shift = (n as f64 - 2.0) / 2.0;
    let largest = lt_max.min(l_max) as f64 + shift;
    let reach = config.radius().max(1.0);
    let barrier = ((k_hi * reach).powi(2) + config.lambda()).sqrt() / 2.0;
    TruncationNote {
        largest_order_scanned: largest,
        barrier_order_estimate: barrier,
        covers_barrier_estimate: largest >= barrier,
    }
}

fn validate_ranges(l_max: u32, lt_max: u32, k_interval: (f64, f64)) -> Result<()> {
    let (lo, hi) = k_interval;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(invalid("k_interval", format!("need 0 < lo < hi, got [{lo}, {hi}]")));
    }
    if l_max > 59 || lt_max > 59 {
        return Err(invalid("l_max", "angular cutoffs above 59 are not supported"));
    }
    Ok(())
}

fn assemble(
    config: DoubleWellConfig,
    l_max: u32,
    lt_max: u32,
    k_interval: (f64, f64),
    opts: &CertifyOptions,
    unit: &UnitZeros,
    witness: Option<MarginWitness>,
) -> TransparencyCertificate {
    let step = opts.grid_step.unwrap_or_else(|| default_k_step(1.0));
    let tangency_count: usize = unit.tangencies.values().map(Vec::len).sum();
    let margin = witness.map(|w| w.normalized_d.abs());
    let (verdict, reason) = if tangency_count > 0 {
        (
            Verdict::Fail,
            format!("{tangency_count} unresolved tangential unit-well zero(s)"),
        )
    } else {
        match margin {
            None => (
                Verdict::Pass,
                "the unit well has no zeros on the scanned sectors and interval".to_string(),
            ),
            Some(m) if m > opts.margin_threshold => (
                Verdict::Pass,
                format!("margin {m:.3e} exceeds threshold {:.1e}", opts.margin_threshold),
            ),
            Some(m) => (
                Verdict::Fail,
                format!("margin {m:.3e} does not exceed threshold {:.1e}", opts.margin_threshold),
            ),
        }
    };
    TransparencyCertificate {
        config,
        n: opts.n,
        l_max,
        lt_max,
        k_interval,
        grid_step: step,
        margin_threshold: opts.margin_threshold,
        unit_well_zeros: unit.zeros.clone(),
        unit_well_tangencies: unit.tangencies.clone(),
        unit_zero_count: unit.count(),
        margin,
        witness,
        truncation: truncation_note(&config, lt_max, l_max, opts.n, k_interval.1),
        verdict,
        reason,
        chi_hash: chi_hash(),
        tool_version: TOOL_VERSION.to_string(),
    }
}

/// Certificate for one configuration from precomputed unit-well zeros.
pub fn certify_with_unit_zeros(
    solver: &RadialSolver,
    config: DoubleWellConfig,
    l_max: u32,
    unit: &UnitZeros,
    lt_max: u32,
    k_interval: (f64, f64),
    opts: &CertifyOptions,
) -> Result<TransparencyCertificate> {
    let witness = margin_at(solver, unit, config.radius(), l_max, opts.n)?;
    Ok(assemble(config, l_max, lt_max, k_interval, opts, unit, witness))
}

/// Evidence that the two-well configuration has no simultaneous zeros of
/// the unit-well and R-well determinants on the scanned range.
pub fn certify_non_transparency(
    solver: &RadialSolver,
    config: DoubleWellConfig,
    l_max: u32,
    lt_max: u32,
    k_interval: (f64, f64),
    opts: &CertifyOptions,
) -> Result<TransparencyCertificate> {
    validate_ranges(l_max, lt_max, k_interval)?;
    let unit = unit_well_zeros(solver, config.lambda(), lt_max, k_interval, opts)?;
    certify_with_unit_zeros(solver, config, l_max, &unit, lt_max, k_interval, opts)
}

/// Result of [`suggest_r`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RSuggestion {
    pub r_best: f64,
    /// `None` means unbounded: no unit-well zeros for any listed coupling.
    pub margin: Option<f64>,
    pub lambdas: Vec<f64>,
    pub unit_zero_counts: Vec<usize>,
    pub r_grid_points: usize,
    pub verdict: Verdict,
    pub certificates: Vec<TransparencyCertificate>,
}

/// Grid search for the radius maximizing the worst certificate margin
/// across a list of couplings.
#[allow(clippy::too_many_arguments)]
pub fn suggest_r(
    solver: &RadialSolver,
    lambdas: &[f64],
    x0_norm: f64,
    r_interval: (f64, f64),
    l_max: u32,
    lt_max: u32,
    k_interval: (f64, f64),
    r_points: usize,
    opts: &CertifyOptions,
) -> Result<RSuggestion> {
    validate_ranges(l_max, lt_max, k_interval)?;
    let (r_lo, r_hi) = r_interval;
    if !(r_lo > 0.0 && r_hi > r_lo && r_hi < x0_norm - 1.0) {
        return Err(invalid(
            "R_interval",
            format!(
                "need 0 < lo < hi < x0_norm - 1 = {}, got [{r_lo}, {r_hi}]",
                x0_norm - 1.0
            ),
        ));
    }
    if r_points < 1 {
        return Err(invalid("r_points", "must be >= 1"));
    }
    let mut lams: Vec<f64> = lambdas.to_vec();
    if lams.is_empty() {
        return Err(invalid("lambda_list", "must not be empty"));
    }
    lams.sort_by(f64::total_cmp);
    lams.dedup();
    for &lam in &lams {
        DoubleWellConfig::new(r_lo, x0_norm, lam)?;
    }
    let units: Vec<UnitZeros> = lams
        .iter()
        .map(|&lam| unit_well_zeros(solver, lam, lt_max, k_interval, opts))
        .collect::<Result<_>>()?;
    let rs: Vec<f64> = if r_points == 1 {
        vec![0.5 * (r_lo + r_hi)]
    } else {
        (0..r_points)
            .map(|i| r_lo + (r_hi - r_lo) * i as f64 / (r_points - 1) as f64)
            .collect()
    };
    let mid = 0.5 * (r_lo + r_hi);
    let mut best: Option<(f64, Option<f64>)> = None;
    for &r in &rs {
        let mut worst: Option<f64> = None;
        for u in &units {
            if let Some(w) = margin_at(solver, u, r, l_max, opts.n)? {
                let m = w.normalized_d.abs();
                worst = Some(worst.map_or(m, |x: f64| x.min(m)));
            }
        }
        let better = match best {
            None => true,
            Some((rb, mb)) => match (worst, mb) {
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (Some(a), Some(b)) => a > b || (a == b && (r - mid).abs() < (rb - mid).abs()),
                (None, None) => (r - mid).abs() < (rb - mid).abs(),
            },
        };
        if better {
            best = Some((r, worst));
        }
    }
    let (r_best, margin) = best.expect("at least one grid point");
    let certificates: Vec<TransparencyCertificate> = lams
        .iter()
        .zip(&units)
        .map(|(&lam, u)| {
            let cfg = DoubleWellConfig::new(r_best, x0_norm, lam)?;
            certify_with_unit_zeros(solver, cfg, l_max, u, lt_max, k_interval, opts)
        })
        .collect::<Result<_>>()?;
    let verdict = if certificates.iter().all(|c| c.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(RSuggestion {
        r_best,
        margin,
        lambdas: lams,
        unit_zero_counts: units.iter().map(UnitZeros::count).collect(),
        r_grid_points: rs.len(),
        verdict,
        certificates,
    })
}
