//! Regular solutions of the radial equation
//!
//! `f'' + f'/r − (ν²/r² − λW(r) − k²) f = 0`,  `ν = l + (n−2)/2`,
//!
//! started from a two-term Frobenius expansion and integrated with an
//! adaptive eighth-order Runge–Kutta scheme, piecewise between the well's
//! breakpoints. Values are stored with a separate logarithmic scale so that
//! large orders never overflow.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::ode::{integrate, State, StepAction, Tolerance};
use crate::potentials::RadialPotential;
use crate::roots::brent;
use crate::specfun::{bessel_jy, ln_gamma, BesselOrder};

/// Largest Bessel order the solver accepts.
pub const MAX_ORDER: f64 = 60.0;

/// Threshold on the half-bound residual.
pub const TOL_HALF_BOUND: f64 = 1e-6;

const RENORM_HI: f64 = 1e150;
const RENORM_LO: f64 = 1e-150;

/// One partial-wave problem: sector `(l, n)`, frequency `k`, coupling `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialProblem {
    l: u32,
    n: u32,
    k: f64,
    lambda: f64,
    well: RadialPotential,
}

impl RadialProblem {
    pub fn new(l: u32, n: u32, k: f64, lambda: f64, well: RadialPotential) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n", format!("space dimension must be >= 2, got {n}")));
        }
        if !(k.is_finite() && k >= 0.0) {
            return Err(invalid("k", format!("must be finite and >= 0, got {k}")));
        }
        if !(lambda.is_finite() && lambda >= 0.0) {
            return Err(invalid("lambda", format!("must be finite and >= 0, got {lambda}")));
        }
        let nu = BesselOrder::from_angular(l, n)?.value();
        if nu > MAX_ORDER {
            return Err(Error::Overflow(format!(
                "order nu = {nu} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        Ok(Self { l, n, k, lambda, well })
    }

    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn well(&self) -> &RadialPotential {
        &self.well
    }

    pub fn order(&self) -> BesselOrder {
        BesselOrder::from_angular(self.l, self.n).expect("validated at construction")
    }

    pub fn nu(&self) -> f64 {
        self.order().value()
    }

    pub fn with_k(&self, k: f64) -> Result<Self> {
        Self::new(self.l, self.n, k, self.lambda, self.well)
    }

    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Self::new(self.l, self.n, self.k, lambda, self.well)
    }

    /// `κ = √(k² + λW(0))`, the interior frequency at the origin.
    pub fn kappa(&self) -> f64 {
        (self.k * self.k + self.lambda * self.well.central_value()).sqrt()
    }
}

/// Normalization convention of [`BoundaryData`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleNote {
    /// Matches `J_ν(κr)` at the origin (or `(r/2)^ν/Γ(ν+1)` when `κ = 0`).
    FrobeniusBessel,
}

/// `f(r)` and `f'(r)` of the regular solution, as `e^{log_scale}·(value, deriv)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub r: f64,
    pub value: f64,
    pub deriv: f64,
    pub log_scale: f64,
    pub scale_note: ScaleNote,
    /// Outside the support (`k > 0`): `f = a·J_ν(kr) + b·Y_ν(kr)`, same scale.
    pub free: Option<FreeCoefficients>,
}

/// Coefficients of the regular solution on the free Bessel pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreeCoefficients {
    pub a: f64,
    pub b: f64,
}

impl BoundaryData {
    /// Unscaled value; may overflow or underflow for extreme orders.
    pub fn value_unscaled(&self) -> f64 {
        self.value * self.log_scale.exp()
    }

    pub fn deriv_unscaled(&self) -> f64 {
        self.deriv * self.log_scale.exp()
    }

    /// Logarithmic derivative `f'/f`.
    pub fn log_derivative(&self) -> f64 {
        self.deriv / self.value
    }
}

/// Zero-energy half-bound diagnosis in the `(n = 3, l = 0)` sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfBound {
    pub flag: bool,
    pub residual: f64,
}

/// Integration settings shared by all radial computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSolver {
    pub rtol: f64,
    pub atol: f64,
    pub start_fraction: f64,
    pub max_steps: usize,
}

impl Default for RadialSolver {
    fn default() -> Self {
        Self {
            rtol: 1e-12,
            atol: 1e-300,
            start_fraction: 1e-6,
            max_steps: 500_000,
        }
    }
}

struct Scaled {
    y: State,
    log_scale: f64,
}

fn renormalize(y: &mut State, log_scale: &mut f64) -> bool {
    let m = y[0].abs() + y[1].abs();
    if m > RENORM_HI || (m < RENORM_LO && m > 0.0) {
        y[0] /= m;
        y[1] /= m;
        *log_scale += m.ln();
        true
    } else {
        false
    }
}

impl RadialSolver {
    fn start(&self, p: &RadialProblem) -> (f64, Scaled) {
        let r0 = self.start_fraction * p.well.support_radius();
        let nu = p.nu();
        let kappa2 = p.k * p.k + p.lambda * p.well.central_value();
        let c2 = -kappa2 / (4.0 * (nu + 1.0));
        let kappa = kappa2.sqrt();
        let ln_norm = if kappa > 0.0 {
            nu * (0.5 * kappa).ln() - ln_gamma(nu + 1.0)
        } else {
            -nu * std::f64::consts::LN_2 - ln_gamma(nu + 1.0)
        };
        let poly = 1.0 + c2 * r0 * r0;
        let y = [poly, nu / r0 * poly + 2.0 * c2 * r0];
        let log_scale = if nu > 0.0 { ln_norm + nu * r0.ln() } else { ln_norm };
        (r0, Scaled { y, log_scale })
    }

    fn tolerance(&self, p: &RadialProblem) -> Tolerance {
        let rho = p.well.support_radius();
        let omega = (p.k * p.k + p.lambda * p.well.max_value() + 1.0 / (rho * rho)).sqrt();
        Tolerance {
            rtol: self.rtol,
            atol: self.atol,
            weights: [1.0, 1.0 / omega],
            h_max: 1.0 / omega,
            max_steps: self.max_steps,
        }
    }

    /// Knots where integration restarts: breakpoints inside `(r0, r_end)`.
    fn segments(p: &RadialProblem, r0: f64, r_end: f64) -> Vec<f64> {
        let mut pts = vec![r0];
        for b in p.well.breakpoints() {
            if b > r0 && b < r_end {
                pts.push(b);
            }
        }
        pts.push(r_end);
        pts
    }

    /// Integrates one smooth piece, calling `on_step` after every accepted
    /// step with `(r_old, y_old, r_new, y_new)`; the scale is renormalized.
    fn segment<C>(
        &self,
        p: &RadialProblem,
        tol: &Tolerance,
        lo: f64,
        hi: f64,
        state: &mut Scaled,
        mut on_step: C,
    ) -> Result<()>
    where
        C: FnMut(f64, &State, f64, &State) -> Result<()>,
    {
        let rhs = segment_rhs(p, lo, hi);
        let mut failure = None;
        let mut log_scale = state.log_scale;
        let (_, y, _) = integrate(rhs, lo, state.y, hi, tol, |r_old, y_old, r_new, y_new| {
            if let Err(e) = on_step(r_old, y_old, r_new, y_new) {
                failure = Some(e);
                return StepAction::Stop;
            }
            if renormalize(y_new, &mut log_scale) {
                StepAction::Rescaled
            } else {
                StepAction::Continue
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        state.y = y;
        state.log_scale = log_scale;
        Ok(())
    }

    /// The regular solution at each radius of `radii` (any order, all > r₀).
    pub fn regular_solution_at(&self, p: &RadialProblem, radii: &[f64]) -> Result<Vec<BoundaryData>> {
        let (r0, mut state) = self.start(p);
        for &r in radii {
            if !(r.is_finite() && r >= r0) {
                return Err(invalid("r_end", format!("must be finite and >= {r0:e}, got {r}")));
            }
        }
        let mut order: Vec<usize> = (0..radii.len()).collect();
        order.sort_by(|&a, &b| radii[a].total_cmp(&radii[b]));
        let tol = self.tolerance(p);
        let rho = p.well.support_radius();
        let mut out = vec![None; radii.len()];
        let mut r_cur = r0;
        let mut edge: Option<State> = None;
        for &idx in &order {
            let target = radii[idx];
            let inner = target.min(rho);
            if inner > r_cur {
                let knots = Self::segments(p, r_cur, inner);
                for w in knots.windows(2) {
                    self.segment(p, &tol, w[0], w[1], &mut state, |_, _, _, _| Ok(()))?;
                }
                r_cur = inner;
            }
            let (y, free) = if target > rho {
                let at_edge = *edge.get_or_insert(state.y);
                free_continuation(p, rho, at_edge, target)?
            } else {
                (state.y, None)
            };
            out[idx] = Some(BoundaryData {
                r: target,
                value: y[0],
                deriv: y[1],
                log_scale: state.log_scale,
                scale_note: ScaleNote::FrobeniusBessel,
                free,
            });
        }
        let out: Vec<BoundaryData> = out.into_iter().map(|b| b.expect("every radius visited")).collect();
        for b in &out {
            if b.value == 0.0 && b.deriv == 0.0 {
                return Err(Error::Internal(format!(
                    "regular solution vanished identically at r = {}",
                    b.r
                )));
            }
        }
        Ok(out)
    }

    pub fn regular_solution(&self, p: &RadialProblem, r_end: f64) -> Result<BoundaryData> {
        Ok(self.regular_solution_at(p, &[r_end])?[0])
    }

    /// Refined interior zeros of the regular solution on `(r₀, r_end]`.
    pub fn nodes(&self, p: &RadialProblem, r_end: f64) -> Result<(Vec<f64>, BoundaryData)> {
        let (r0, mut state) = self.start(p);
        if !(r_end > r0) {
            return Err(invalid("r_end", format!("must exceed the start radius {r0:e}")));
        }
        let tol = self.tolerance(p);
        let mut nodes = Vec::new();
        let knots = Self::segments(p, r0, r_end);
        for w in knots.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let rhs = segment_rhs(p, lo, hi);
            let sub_tol = tol;
            self.segment(p, &tol, lo, hi, &mut state, |r_old, y_old, r_new, y_new| {
                if y_old[0] == 0.0 || y_old[0].signum() == y_new[0].signum() {
                    if y_new[0] == 0.0 && r_new < r_end {
                        nodes.push(r_new);
                    }
                    return Ok(());
                }
                let y_start = *y_old;
                let value_at = |r: f64| -> Result<f64> {
                    let (_, y, _) = integrate(&rhs, r_old, y_start, r, &sub_tol, |_, _, _, _| StepAction::Continue)?;
                    Ok(y[0])
                };
                let width = r_new - r_old;
                let root = brent(value_at, r_old, r_new, y_old[0], y_new[0], 1e-12 * width.max(1e-300))?;
                nodes.push(root.root);
                Ok(())
            })?;
        }
        let end = BoundaryData {
            r: r_end,
            value: state.y[0],
            deriv: state.y[1],
            log_scale: state.log_scale,
            scale_note: ScaleNote::FrobeniusBessel,
            free: None,
        };
        Ok((nodes, end))
    }

    /// Number of negative eigenvalues in the `(l, n)` sector, by counting the
    /// zeros of the zero-energy regular solution on `(0, ∞)`.
    pub fn count_bound_states(&self, l: u32, n: u32, lambda: f64, well: &RadialPotential) -> Result<usize> {
        let p = RadialProblem::new(l, n, 0.0, lambda, *well)?;
        if lambda == 0.0 {
            return Ok(0);
        }
        let rho = well.support_radius();
        let (nodes, end) = self.nodes(&p, rho)?;
        Ok(nodes.len() + usize::from(has_tail_zero(p.nu(), rho, end.value, end.deriv)))
    }

    /// Zero-energy half-bound test in the `n = 3`, `l = 0` sector.
    ///
    /// Outside the support `u = r^{1/2} f` is linear, `u = a + b r`; the
    /// residual is `|bρ|/(|a| + |bρ|)` at the support radius `ρ`.
    pub fn detect_half_bound(&self, n: u32, lambda: f64, well: &RadialPotential) -> Result<HalfBound> {
        if n != 3 {
            return Err(invalid(
                "n",
                format!("half-bound detection is implemented for n = 3 only, got {n}"),
            ));
        }
        let p = RadialProblem::new(0, 3, 0.0, lambda, *well)?;
        let rho = well.support_radius();
        let b = self.regular_solution(&p, rho)?;
        let sq = rho.sqrt();
        let u = sq * b.value;
        let up = sq * b.deriv + b.value / (2.0 * sq);
        let slope = up * rho;
        let a = u - slope;
        let denom = a.abs() + slope.abs();
        if denom == 0.0 {
            return Err(Error::Internal(
                "zero-energy solution vanished at the support radius".into(),
            ));
        }
        let residual = slope.abs() / denom;
        Ok(HalfBound {
            flag: residual < TOL_HALF_BOUND,
            residual,
        })
    }
}

/// Exact continuation of `(f, f')` from the support edge `ρ` to `r > ρ`,
/// where the equation is free: `f = aJ_ν(kr) + bY_ν(kr)` for `k > 0`,
/// `f = α(r/ρ)^ν + β(r/ρ)^{−ν}` (or `A + B ln(r/ρ)`) at `k = 0`.
fn free_continuation(p: &RadialProblem, rho: f64, y: State, r: f64) -> Result<(State, Option<FreeCoefficients>)> {
    let (f, fp) = (y[0], y[1]);
    let nu = p.nu();
    let k = p.k;
    if k > 0.0 {
        let e = bessel_jy(p.order(), k * rho)?;
        let wj = f * k * e.jp - fp * e.j;
        let wy = f * k * e.yp - fp * e.y;
        let half = 0.5 * std::f64::consts::PI * rho;
        let a = half * wy;
        let b = -half * wj;
        let v = bessel_jy(p.order(), k * r)?;
        Ok((
            [a * v.j + b * v.y, k * (a * v.jp + b * v.yp)],
            Some(FreeCoefficients { a, b }),
        ))
    } else if nu > 0.0 {
        let alpha = 0.5 * (f + rho * fp / nu);
        let beta = 0.5 * (f - rho * fp / nu);
        let t = r / rho;
        let (up, down) = (t.powf(nu), t.powf(-nu));
        Ok(([alpha * up + beta * down, nu / r * (alpha * up - beta * down)], None))
    } else {
        let b = rho * fp;
        Ok(([f + b * (r / rho).ln(), b / r], None))
    }
}

/// Whether the free zero-energy continuation of `(f, f')` at `ρ` vanishes
/// somewhere in `(ρ, ∞)`. A growing coefficient below [`TOL_HALF_BOUND`]
/// (relative) is a threshold state, whose zero sits at infinity.
fn has_tail_zero(nu: f64, rho: f64, f: f64, fp: f64) -> bool {
    let (grow, stay) = if nu > 0.0 {
        (0.5 * (f + rho * fp / nu), 0.5 * (f - rho * fp / nu))
    } else {
        (rho * fp, f)
    };
    let threshold = grow.abs() < TOL_HALF_BOUND * (grow.abs() + stay.abs());
    if threshold || grow * stay >= 0.0 {
        return false;
    }
    nu == 0.0 || stay.abs() > grow.abs()
}

fn segment_rhs(p: &RadialProblem, lo: f64, hi: f64) -> impl Fn(f64, &State) -> State {
    let nu2 = p.nu() * p.nu();
    let k2 = p.k * p.k;
    let lambda = p.lambda;
    let well = p.well;
    let frozen = if well.is_smooth() {
        None
    } else {
        Some(well.profile(0.5 * (lo + hi)))
    };
    move |r: f64, y: &State| {
        let w = match frozen {
            Some(v) => v,
            None => well.profile(r),
        };
        let c = nu2 / (r * r) - lambda * w - k2;
        [y[1], -y[1] / r + c * y[0]]
    }
}

/// [`RadialSolver::regular_solution`] with default settings.
pub fn regular_solution(p: &RadialProblem, r_end: f64) -> Result<BoundaryData> {
    RadialSolver::default().regular_solution(p, r_end)
}

/// [`RadialSolver::count_bound_states`] with default settings.
pub fn count_bound_states(l: u32, n: u32, lambda: f64, well: &RadialPotential) -> Result<usize> {
    RadialSolver::default().count_bound_states(l, n, lambda, well)
}

/// [`RadialSolver::detect_half_bound`] with default settings.
pub fn detect_half_bound(n: u32, lambda: f64, well: &RadialPotential) -> Result<HalfBound> {
    RadialSolver::default().detect_half_bound(n, lambda, well)
}
