//! Bessel functions `J_ν`, `Y_ν` of real order `ν ≥ 0` and their derivatives.
//!
//! All four values come out of a single evaluation: the ratio `J'_ν/J_ν` from
//! the first continued fraction, downward recurrence to a small order
//! `|μ| ≤ 1/2`, then either Temme's series (`x < 2`) or Steed's complex
//! continued fraction (`x ≥ 2`) to fix `Y_μ, Y_{μ+1}`, and finally the
//! Wronskian `J Y' − J' Y = 2/(πx)` to normalise `J`. `Y` is carried upward by
//! its (stable) forward recurrence.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

const EPS: f64 = f64::EPSILON;
const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;
const MAXIT: usize = 200_000;
const RESCALE: f64 = 1e250;
const TEMME_XMIN: f64 = 2.0;

/// Order `ν` of a Bessel function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(invalid("nu", format!("order must be finite and >= 0, got {nu}")));
        }
        Ok(Self(nu))
    }

    /// `ν = l + (n − 2)/2` for angular momentum `l` in dimension `n ≥ 2`.
    pub fn from_angular(l: u32, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n", format!("dimension must be >= 2, got {n}")));
        }
        Ok(Self(l as f64 + (n as f64 - 2.0) / 2.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.fract() == 0.0
    }
}

/// `J_ν(x)`, `J'_ν(x)`, `Y_ν(x)`, `Y'_ν(x)` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselValues {
    pub j: f64,
    pub jp: f64,
    pub y: f64,
    pub yp: f64,
}

/// Evaluates `J_ν`, `Y_ν` and their derivatives at `x > 0`.
pub fn bessel_jy(order: BesselOrder, x: f64) -> Result<BesselValues> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!("Bessel argument must be >= 0, got {x}")));
    }
    if x == 0.0 {
        return Err(Error::Divergent("Y_nu".into()));
    }
    if !x.is_finite() {
        return Err(Error::Domain("Bessel argument must be finite".into()));
    }
    temme_steed(order.value(), x)
}

pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(if order.value() == 0.0 { 1.0 } else { 0.0 });
    }
    bessel_jy(order, x).map(|v| v.j)
}

pub fn bessel_j_prime(order: BesselOrder, x: f64) -> Result<f64> {
    if x == 0.0 {
        let nu = order.value();
        return if nu == 1.0 {
            Ok(0.5)
        } else if nu == 0.0 || nu > 1.0 {
            Ok(0.0)
        } else {
            Err(Error::Divergent(format!("J'_{nu}")))
        };
    }
    bessel_jy(order, x).map(|v| v.jp)
}

pub fn bessel_y(order: BesselOrder, x: f64) -> Result<f64> {
    bessel_jy(order, x).map(|v| v.y)
}

pub fn bessel_y_prime(order: BesselOrder, x: f64) -> Result<f64> {
    bessel_jy(order, x).map(|v| v.yp)
}

fn temme_steed(nu: f64, x: f64) -> Result<BesselValues> {
    let nl = if x < TEMME_XMIN {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let mu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for J'_ν / J_ν (modified Lentz).
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!("Bessel CF1 at nu={nu}, x={x}")));
    }

    // Downward recurrence from ν to μ with an arbitrary starting scale.
    let mut rjl = isign;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE {
            rjl /= RESCALE;
            rjpl /= RESCALE;
            rjl1 /= RESCALE;
            rjp1 /= RESCALE;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, rymu, ry1) = if x < TEMME_XMIN {
        temme_series(mu, x, f, w)?
    } else {
        steed_cf2(mu, x, f, w, rjl)?
    };

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;

    let mut ylo = rymu;
    let mut yhi = ry1;
    for i in 1..=nl {
        let next = (mu + i as f64) * xi2 * yhi - ylo;
        ylo = yhi;
        yhi = next;
        if !yhi.is_finite() {
            return Err(Error::Overflow(format!("Y_nu recurrence at nu={nu}, x={x}")));
        }
    }
    let y = ylo;
    let yp = nu * xi * ylo - yhi;
    if !y.is_finite() || !yp.is_finite() {
        return Err(Error::Overflow(format!("Y_nu at nu={nu}, x={x}")));
    }
    Ok(BesselValues { j, jp, y, yp })
}

/// Temme's series for `Y_μ`, `Y_{μ+1}` with `|μ| ≤ 1/2`, small `x`.
fn temme_series(mu: f64, x: f64, f: f64, w: f64) -> Result<(f64, f64, f64)> {
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let mu2 = mu * mu;
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = gamma_pair(mu);
    let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let e = e.exp();
    let mut p = e / (gampl * PI);
    let mut q = 1.0 / (e * PI * gammi);
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let dd = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mut converged = false;
    for i in 1..MAXIT {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!("Temme series at x={x}")));
    }
    let rymu = -sum;
    let ry1 = -sum1 * xi2;
    let rymup = mu * xi * rymu - ry1;
    let rjmu = w / (rymup - f * rymu);
    Ok((rjmu, rymu, ry1))
}

/// Steed's CF2 for `(J'_μ + iY'_μ)/(J_μ + iY_μ)`, `x ≥ 2`.
fn steed_cf2(mu: f64, x: f64, f: f64, w: f64, rjl: f64) -> Result<(f64, f64, f64)> {
    let xi = 1.0 / x;
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 1..MAXIT {
        a += 2.0 * i as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!("Steed CF2 at x={x}")));
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let ry1 = mu * xi * rymu - rymup;
    Ok((rjmu, rymu, ry1))
}

/// Taylor coefficients of `1/Γ(z) = Σ_{k≥1} c_k z^k`.
const RGAMMA_TAYLOR: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
];

/// Returns `(Γ₁(μ), Γ₂(μ), 1/Γ(1+μ), 1/Γ(1−μ))` for `|μ| ≤ 1/2`, with
/// `Γ₁ = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ)` and `Γ₂ = (1/Γ(1−μ) + 1/Γ(1+μ))/2`.
fn gamma_pair(mu: f64) -> (f64, f64, f64, f64) {
    // 1/Γ(1+μ) = Σ c_k μ^{k−1}; split into even and odd powers of μ.
    let mu2 = mu * mu;
    let mut even = 0.0; // Σ_{k odd} c_k μ^{k−1}
    let mut odd = 0.0; // Σ_{k even} c_k μ^{k−2}
    for (idx, &ck) in RGAMMA_TAYLOR.iter().enumerate().rev() {
        let k = idx + 1;
        if k % 2 == 1 {
            even = even * mu2 + ck;
        } else {
            odd = odd * mu2 + ck;
        }
    }
    let gampl = even + mu * odd;
    let gammi = even - mu * odd;
    (-odd, even, gampl, gammi)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection; only reached for 0 < x < 1/2 here.
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}
