//! Truncations of the diagonal-plus-rank-one operator
//! `T_k = diag(t) + k z zᵀ`, `z_j = 1/(2j)`, `t_j = z_j³ = 1/(8j³)`,
//! solved through the secular equation `1 + k Σ z_j²/(t_j − μ) = 0`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// `z_j` for the 1-based index `j`.
pub fn z0(j: usize) -> f64 {
    0.5 / j as f64
}

/// `t_j = z_j³`.
pub fn t_diag(j: usize) -> f64 {
    let j = j as f64;
    1.0 / (8.0 * j * j * j)
}

/// `Σ_{j≤N} z_j²`, which increases to `π²/24`.
pub fn partial_norm_sq(n: usize) -> f64 {
    (1..=n).rev().map(|j| z0(j) * z0(j)).sum()
}

/// `‖z₀‖² = π²/24`.
pub const NORM_SQ_LIMIT: f64 = PI * PI / 24.0;

/// `t_a − t_j` without cancellation.
fn t_diff(a: usize, j: usize) -> f64 {
    let (fa, fj) = (a as f64, j as f64);
    let (a3, j3) = (fa * fa * fa, fj * fj * fj);
    (j3 - a3) / (8.0 * a3 * j3)
}

/// One eigenvalue stored as an offset from the nearest diagonal entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularRoot {
    /// 1-based index `j` of the anchoring `t_j`.
    pub anchor: usize,
    /// `μ = t_anchor + offset`.
    pub offset: f64,
    /// Interlacing interval as 1-based indices `(j_low, j_high)` of the
    /// neighbouring diagonal entries; `None` marks an unbounded side.
    pub between: (Option<usize>, Option<usize>),
}

impl SecularRoot {
    pub fn value(&self) -> f64 {
        t_diag(self.anchor) + self.offset
    }

    /// Distance to the nearest `t_j`, exact up to rounding of the offset.
    pub fn distance_to_diagonal(&self) -> f64 {
        let mut d = self.offset.abs();
        for j in [self.between.0, self.between.1].into_iter().flatten() {
            if j != self.anchor {
                d = d.min((t_diff(self.anchor, j) + self.offset).abs());
            }
        }
        d
    }

    /// `t_low < μ < t_high` for the recorded interlacing interval.
    pub fn strictly_inside(&self) -> bool {
        let above = |j: usize| t_diff(self.anchor, j) + self.offset > 0.0;
        let below = |j: usize| t_diff(self.anchor, j) + self.offset < 0.0;
        let low_ok = self.between.0.is_none_or(above);
        let high_ok = self.between.1.is_none_or(below);
        low_ok && high_ok && self.offset != 0.0
    }
}

/// The truncated operator at coupling `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelOperator {
    pub n: usize,
    pub k: f64,
}

/// Poles in ascending order of `s·t_j` with `s = sign`: index `m` maps to the
/// 1-based `j`.
struct Poles {
    n: usize,
    sign: f64,
}

impl Poles {
    fn j(&self, m: usize) -> usize {
        if self.sign > 0.0 {
            self.n - m
        } else {
            m + 1
        }
    }

    /// `s·t_{j(m)} − s·t_{j(a)}` in the ascending coordinates.
    fn diff(&self, m: usize, a: usize) -> f64 {
        self.sign * t_diff(self.j(m), self.j(a))
    }
}

impl ModelOperator {
    pub fn new(n: usize, k: f64) -> Result<Self> {
        if n < 2 {
            return Err(invalid("N", format!("truncation must be >= 2, got {n}")));
        }
        if !k.is_finite() {
            return Err(invalid("k", format!("must be finite, got {k}")));
        }
        Ok(Self { n, k })
    }

    fn poles(&self) -> Poles {
        Poles {
            n: self.n,
            sign: if self.k < 0.0 { -1.0 } else { 1.0 },
        }
    }

    /// All roots in ascending eigenvalue order.
    pub fn secular_roots(&self) -> Result<Vec<SecularRoot>> {
        let n = self.n;
        if self.k == 0.0 {
            return Ok((1..=n)
                .rev()
                .map(|j| SecularRoot {
                    anchor: j,
                    offset: 0.0,
                    between: (Some(j), Some(j)),
                })
                .collect());
        }
        let poles = self.poles();
        let rho = self.k.abs();
        let w: Vec<f64> = (0..n).map(|m| z0(poles.j(m)).powi(2)).collect();
        let upper_span = rho * w.iter().sum::<f64>();
        let mut roots = Vec::with_capacity(n);
        let mut scratch = vec![0.0; n];
        for m in 0..n {
            let (pos_anchor, tau) = solve_interval(&poles, &w, rho, m, upper_span, &mut scratch)?;
            roots.push((m, pos_anchor, tau));
        }
        let mut out: Vec<SecularRoot> = roots
            .into_iter()
            .map(|(m, a, tau)| {
                let lo = Some(poles.j(m));
                let hi = if m + 1 < n { Some(poles.j(m + 1)) } else { None };
                let (lo, hi) = if poles.sign > 0.0 { (lo, hi) } else { (hi, lo) };
                SecularRoot {
                    anchor: poles.j(a),
                    offset: poles.sign * tau,
                    between: (lo, hi),
                }
            })
            .collect();
        if poles.sign < 0.0 {
            out.reverse();
        }
        Ok(out)
    }

    /// Sorted eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(self.secular_roots()?.iter().map(SecularRoot::value).collect())
    }

    /// Only the smallest eigenvalue when `k < 0` (the negative branch).
    pub fn lowest_for_negative_k(&self) -> Result<f64> {
        if !(self.k < 0.0) {
            return Err(invalid("k", format!("the negative branch needs k < 0, got {}", self.k)));
        }
        let poles = self.poles();
        let rho = self.k.abs();
        let w: Vec<f64> = (0..self.n).map(|m| z0(poles.j(m)).powi(2)).collect();
        let span = rho * w.iter().sum::<f64>();
        let mut scratch = vec![0.0; self.n];
        let (a, tau) = solve_interval(&poles, &w, rho, self.n - 1, span, &mut scratch)?;
        Ok(t_diag(poles.j(a)) - tau)
    }

    /// Dense matrix `diag(t) + k z zᵀ` in row-major order (for oracles).
    pub fn dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = self.k * z0(i + 1) * z0(j + 1);
            }
            m[i * n + i] += t_diag(i + 1);
        }
        m
    }
}

/// Root of `1 + ρ Σ w_m/(d_m − μ)` in `(d_m, d_{m+1})` (or above the last
/// pole), returned as `(anchor position, offset)` in ascending coordinates.
fn solve_interval(
    poles: &Poles,
    w: &[f64],
    rho: f64,
    m: usize,
    upper_span: f64,
    e: &mut [f64],
) -> Result<(usize, f64)> {
    let n = w.len();
    let last = m + 1 == n;
    let gap = if last { upper_span } else { poles.diff(m + 1, m) };
    let anchor = if last {
        m
    } else {
        for (q, slot) in e.iter_mut().enumerate() {
            *slot = poles.diff(q, m);
        }
        let (f, _, _, _, _) = secular_parts(e, w, rho, m, 0.5 * gap);
        if f >= 0.0 {
            m
        } else {
            m + 1
        }
    };
    for (q, slot) in e.iter_mut().enumerate() {
        *slot = poles.diff(q, anchor);
    }
    let (lo_pole, hi_pole) = if anchor == m {
        (0.0, if last { f64::INFINITY } else { gap })
    } else {
        (-gap, 0.0)
    };
    let (mut lo, mut hi) = if anchor == m {
        (0.0, if last { upper_span } else { 0.5 * gap })
    } else {
        (-0.5 * gap, 0.0)
    };
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (f, psi, dpsi, phi, dphi) = secular_parts(e, w, rho, m, x);
        let scale = 1.0 + psi.abs() + phi.abs();
        if f.abs() <= 8.0 * f64::EPSILON * n as f64 * scale {
            return Ok((anchor, x));
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return Ok((anchor, x));
        }
        let b = dpsi * (lo_pole - x).powi(2);
        let a = psi - b / (lo_pole - x);
        let next = if hi_pole.is_finite() {
            let ee = dphi * (hi_pole - x).powi(2);
            let cc = phi - ee / (hi_pole - x);
            let c = 1.0 + a + cc;
            rational_root(c, b, ee, lo_pole, hi_pole)
        } else {
            let c = 1.0 + a + phi;
            if c > 0.0 {
                Some(lo_pole + b / c)
            } else {
                None
            }
        };
        x = match next {
            Some(y) if y > lo && y < hi => y,
            _ => 0.5 * (lo + hi),
        };
    }
    Err(Error::NoConvergence(format!("secular root {m} did not converge")))
}

/// `(f, ψ, ψ', φ, φ')` at local abscissa `x`; `ψ` collects poles at or left
/// of position `m`, `φ` the rest.
fn secular_parts(e: &[f64], w: &[f64], rho: f64, m: usize, x: f64) -> (f64, f64, f64, f64, f64) {
    let (mut psi, mut dpsi, mut phi, mut dphi) = (0.0, 0.0, 0.0, 0.0);
    for q in 0..=m {
        let inv = 1.0 / (e[q] - x);
        let t = w[q] * inv;
        psi += t;
        dpsi += t * inv;
    }
    for q in m + 1..e.len() {
        let inv = 1.0 / (e[q] - x);
        let t = w[q] * inv;
        phi += t;
        dphi += t * inv;
    }
    let (psi, dpsi, phi, dphi) = (rho * psi, rho * dpsi, rho * phi, rho * dphi);
    (1.0 + psi + phi, psi, dpsi, phi, dphi)
}

/// Root in `(l, u)` of `c + b/(l − y) + e/(u − y) = 0`.
fn rational_root(c: f64, b: f64, e: f64, l: f64, u: f64) -> Option<f64> {
    let qa = c;
    let qb = -(c * (l + u) + b + e);
    let qc = c * l * u + b * u + e * l;
    if qa == 0.0 {
        return if qb != 0.0 { Some(-qc / qb) } else { None };
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let q = -0.5 * (qb + sq.copysign(qb));
    let r1 = q / qa;
    let r2 = if q != 0.0 { qc / q } else { r1 };
    [r1, r2].into_iter().find(|&y| y > l && y < u)
}

/// Sorted eigenvalues of the `N × N` truncation at coupling `k`.
pub fn eigenvalues_tk(n: usize, k: f64) -> Result<Vec<f64>> {
    ModelOperator::new(n, k)?.eigenvalues()
}

/// Per-sample evidence for the three spectral properties.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleCheck {
    pub k: f64,
    pub min_eigenvalue: f64,
    pub negative_count: usize,
    /// `k < α(k) < 0` when `k < 0`; vacuous otherwise.
    pub negative_in_bounds: bool,
    /// `min |μ_i − t_j|` (`None` at `k = 0`).
    pub min_distance_to_diagonal: Option<f64>,
    /// Smallest gap between consecutive eigenvalues (`None` at `k = 0`).
    pub min_gap: Option<f64>,
    pub interlacing: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub n: usize,
    pub samples: Vec<SampleCheck>,
    pub violations: Vec<String>,
    pub all_ok: bool,
}

fn check_sample(n: usize, k: f64) -> Result<SampleCheck> {
    let op = ModelOperator::new(n, k)?;
    let roots = op.secular_roots()?;
    let values: Vec<f64> = roots.iter().map(SecularRoot::value).collect();
    let min_eig = values[0];
    let negative_count = values.iter().filter(|&&v| v < 0.0).count();
    if k == 0.0 {
        let ok = min_eig > 0.0;
        return Ok(SampleCheck {
            k,
            min_eigenvalue: min_eig,
            negative_count,
            negative_in_bounds: true,
            min_distance_to_diagonal: None,
            min_gap: None,
            interlacing: true,
            ok,
        });
    }
    let interlacing = roots.iter().all(SecularRoot::strictly_inside);
    let min_dist = roots
        .iter()
        .map(SecularRoot::distance_to_diagonal)
        .fold(f64::INFINITY, f64::min);
    let min_gap = roots
        .windows(2)
        .map(|w| -t_diff(w[0].anchor, w[1].anchor) + (w[1].offset - w[0].offset))
        .fold(f64::INFINITY, f64::min);
    let (in_bounds, sign_ok) = if k > 0.0 {
        (true, min_eig > 0.0)
    } else {
        (negative_count == 1 && min_eig > k && min_eig < 0.0, negative_count == 1)
    };
    let ok = sign_ok && in_bounds && interlacing && min_dist > 0.0 && min_gap > 0.0;
    Ok(SampleCheck {
        k,
        min_eigenvalue: min_eig,
        negative_count,
        negative_in_bounds: in_bounds,
        min_distance_to_diagonal: Some(min_dist),
        min_gap: Some(min_gap),
        interlacing,
        ok,
    })
}

/// Checks positivity for `k ≥ 0`, the single negative eigenvalue in `(k, 0)`
/// for `k < 0`, and simplicity plus disjointness from `{t_j}` for `k ≠ 0`.
pub fn verify_properties(n: usize, k_samples: &[f64]) -> Result<PropertyReport> {
    let samples: Vec<SampleCheck> = k_samples
        .par_iter()
        .map(|&k| check_sample(n, k))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    for s in &samples {
        if s.ok {
            continue;
        }
        let what = if s.k > 0.0 && s.min_eigenvalue <= 0.0 {
            "nonpositive eigenvalue for k > 0".to_string()
        } else if s.k < 0.0 && !s.negative_in_bounds {
            format!(
                "{} negative eigenvalue(s), lowest {:e}",
                s.negative_count, s.min_eigenvalue
            )
        } else if s.k == 0.0 {
            "nonpositive diagonal entry".to_string()
        } else {
            "spectrum not simple or touches the diagonal".to_string()
        };
        violations.push(format!("k = {}: {what}", s.k));
    }
    Ok(PropertyReport {
        n,
        all_ok: violations.is_empty(),
        samples,
        violations,
    })
}

/// `(k, α(k))` for a strictly negative ascending grid, with the bound and
/// monotone-approach checks.
pub fn negative_branch(n: usize, k_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    if k_grid.iter().any(|&k| !(k < 0.0)) {
        return Err(invalid("k_grid", "must be strictly negative".to_string()));
    }
    if k_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(invalid("k_grid", "must be ascending toward 0".to_string()));
    }
    let mut out = Vec::with_capacity(k_grid.len());
    for &k in k_grid {
        let op = ModelOperator::new(n, k)?;
        let alpha = op.lowest_for_negative_k()?;
        if !(alpha > k && alpha < 0.0) {
            return Err(Error::Internal(format!(
                "alpha({k}) = {alpha:e} violates k < alpha < 0"
            )));
        }
        out.push((k, alpha));
    }
    for w in out.windows(2) {
        if !(w[1].1.abs() < w[0].1.abs()) {
            return Err(Error::Internal(format!(
                "|alpha| is not decreasing between k = {} and k = {}",
                w[0].0, w[1].0
            )));
        }
    }
    Ok(out)
}

/// Least-squares fit `μ_top(k) ≈ a k + b + c/k + d/k²` over the top decade.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub k_from: f64,
    pub k_to: f64,
    pub points: usize,
    pub partial_norm_sq: f64,
    pub limit_norm_sq: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFlow {
    pub n: usize,
    pub k_grid: Vec<f64>,
    /// Sorted eigenvalues per grid point.
    pub trajectories: Vec<Vec<f64>>,
    pub top_slope: Option<SlopeFit>,
    /// Smallest gap between consecutive eigenvalues over nonzero grid points.
    pub min_gap: f64,
}

fn solve_small(mut a: [[f64; 5]; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let piv = (col..4).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        let pivot = a[col];
        for (row, line) in a.iter_mut().enumerate() {
            if row != col {
                let f = line[col] / pivot[col];
                for (x, p) in line.iter_mut().zip(pivot.iter()).skip(col) {
                    *x -= f * p;
                }
            }
        }
    }
    Some([
        a[0][4] / a[0][0],
        a[1][4] / a[1][1],
        a[2][4] / a[2][2],
        a[3][4] / a[3][3],
    ])
}

/// Fit of the top eigenvalue's asymptotic slope on `[k_max/10, k_max]`.
pub fn fit_top_slope(n: usize, ks: &[f64], tops: &[f64]) -> Option<SlopeFit> {
    let k_max = ks.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !(k_max > 0.0) {
        return None;
    }
    let k_from = 0.1 * k_max;
    let sel: Vec<(f64, f64)> = ks
        .iter()
        .zip(tops)
        .filter(|(&k, _)| k >= k_from)
        .map(|(&k, &v)| (k, v))
        .collect();
    if sel.len() < 6 {
        return None;
    }
    let mut ata = [[0.0; 5]; 4];
    for &(k, v) in &sel {
        let basis = [k, 1.0, 1.0 / k, 1.0 / (k * k)];
        for i in 0..4 {
            for j in 0..4 {
                ata[i][j] += basis[i] * basis[j];
            }
            ata[i][4] += basis[i] * v;
        }
    }
    let coef = solve_small(ata)?;
    Some(SlopeFit {
        slope: coef[0],
        k_from,
        k_to: k_max,
        points: sel.len(),
        partial_norm_sq: partial_norm_sq(n),
        limit_norm_sq: NORM_SQ_LIMIT,
    })
}

/// Eigenvalue trajectories over a grid with slope and gap diagnostics.
pub fn spectrum_flow(n: usize, k_grid: &[f64]) -> Result<SpectrumFlow> {
    let per_k: Vec<(Vec<f64>, f64)> = k_grid
        .par_iter()
        .map(|&k| {
            let roots = ModelOperator::new(n, k)?.secular_roots()?;
            let mut gap = f64::INFINITY;
            if k != 0.0 {
                for w in roots.windows(2) {
                    gap = gap.min(-t_diff(w[0].anchor, w[1].anchor) + (w[1].offset - w[0].offset));
                }
            }
            Ok((roots.iter().map(SecularRoot::value).collect(), gap))
        })
        .collect::<Result<_>>()?;
    let min_gap = per_k.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let trajectories: Vec<Vec<f64>> = per_k.into_iter().map(|p| p.0).collect();
    let tops: Vec<f64> = trajectories.iter().map(|t: &Vec<f64>| t[t.len() - 1]).collect();
    let top_slope = fit_top_slope(n, k_grid, &tops);
    Ok(SpectrumFlow {
        n,
        k_grid: k_grid.to_vec(),
        trajectories,
        top_slope,
        min_gap,
    })
}

/// Evenly spaced grid of `points` values on `[lo, hi]`.
pub fn linear_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![lo];
    }
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}
