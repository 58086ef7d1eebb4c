//! Bracketed scalar root refinement.

use crate::error::{Error, Result};

/// A refined root together with the final sign-change bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracketed {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
}

impl Bracketed {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Brent's method on `[a, b]` with known endpoint values of opposite sign.
///
/// Iterates until the bracket is narrower than `xtol` (plus a few ulps of
/// the root). Fails if the endpoints do not bracket a sign change.
pub fn brent<F>(mut f: F, a: f64, b: f64, fa: f64, fb: f64, xtol: f64) -> Result<Bracketed>
where
    F: FnMut(f64) -> Result<f64>,
{
    if fa == 0.0 {
        return Ok(Bracketed {
            root: a,
            lo: a,
            hi: a,
            value: 0.0,
        });
    }
    if fb == 0.0 {
        return Ok(Bracketed {
            root: b,
            lo: b,
            hi: b,
            value: 0.0,
        });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Internal(format!(
            "no sign change on [{a}, {b}] ({fa:e}, {fb:e})"
        )));
    }
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol1 || fb == 0.0 {
            let (lo, hi) = if b < c { (b, c) } else { (c, b) };
            let (lo, hi) = if fb == 0.0 { (b, b) } else { (lo, hi) };
            return Ok(Bracketed {
                root: b,
                lo,
                hi,
                value: fb,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b)?;
    }
    Err(Error::NoConvergence(format!(
        "Brent iteration did not converge near {b}"
    )))
}

/// Plain bisection; used where the function is only piecewise smooth.
pub fn bisect<F>(mut f: F, a: f64, b: f64, fa: f64, xtol: f64) -> Result<Bracketed>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut lo, mut hi, mut flo) = (a.min(b), a.max(b), fa);
    if b < a {
        flo = f(lo)?;
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= xtol || mid <= lo || mid >= hi {
            let value = f(mid)?;
            return Ok(Bracketed {
                root: mid,
                lo,
                hi,
                value,
            });
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(Bracketed {
                root: mid,
                lo: mid,
                hi: mid,
                value: 0.0,
            });
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence("bisection budget exhausted".into()))
}
