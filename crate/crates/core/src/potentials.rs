//! Radial well profiles: the smooth bump `χ`, its scaled wells `W_R`, step
//! wells used as closed-form oracles, and the two-well configuration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, Error, Result};

/// Canonical text of the bump definition; hashed into every artifact.
pub const CHI_DEFINITION: &str = "chi(r)=s((1/2-r)/(1/4)) clipped to [0,1]; \
s(t)=h(t)/(h(t)+h(1-t)); h(t)=exp(-1/t) for t>0 else 0";

/// Hex SHA-256 of [`CHI_DEFINITION`].
pub fn chi_hash() -> String {
    let digest = Sha256::digest(CHI_DEFINITION.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn smooth_step_h(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

/// Smooth bump: 1 on `[0, 1/4]`, 0 on `[1/2, ∞)`, monotone in between.
pub fn bump_chi(r: f64) -> f64 {
    let t = (0.5 - r) / 0.25;
    if t >= 1.0 {
        return 1.0;
    }
    if t <= 0.0 {
        return 0.0;
    }
    let a = smooth_step_h(t);
    let b = smooth_step_h(1.0 - t);
    a / (a + b)
}

/// Shape of a radial well.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WellKind {
    /// `W_R(r) = χ(r/R)/R²`.
    ChiWell {
        #[serde(rename = "R")]
        r: f64,
    },
    /// `depth · 1_{[0, radius)}`.
    Step { depth: f64, radius: f64 },
}

/// A nonnegative, compactly supported radial profile `W(r)`; the physical
/// potential is `−λW`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RadialPotential {
    kind: WellKind,
}

impl RadialPotential {
    pub fn single_well(r: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(invalid("R", format!("well radius must be > 0, got {r}")));
        }
        Ok(Self {
            kind: WellKind::ChiWell { r },
        })
    }

    pub fn step_well(depth: f64, radius: f64) -> Result<Self> {
        if !(depth.is_finite() && depth > 0.0) {
            return Err(invalid("depth", format!("must be > 0, got {depth}")));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(invalid("radius", format!("must be > 0, got {radius}")));
        }
        Ok(Self {
            kind: WellKind::Step { depth, radius },
        })
    }

    pub fn kind(&self) -> WellKind {
        self.kind
    }

    pub fn profile(&self, r: f64) -> f64 {
        match self.kind {
            WellKind::ChiWell { r: scale } => bump_chi(r / scale) / (scale * scale),
            WellKind::Step { depth, radius } => {
                if r < radius {
                    depth
                } else {
                    0.0
                }
            }
        }
    }

    pub fn support_radius(&self) -> f64 {
        match self.kind {
            WellKind::ChiWell { r } => 0.5 * r,
            WellKind::Step { radius, .. } => radius,
        }
    }

    pub fn is_smooth(&self) -> bool {
        matches!(self.kind, WellKind::ChiWell { .. })
    }

    /// `W(0)`; both families are flat near the origin.
    pub fn central_value(&self) -> f64 {
        self.profile(0.0)
    }

    pub fn max_value(&self) -> f64 {
        self.central_value()
    }

    /// Radii where the profile changes analytic form, ascending, ending at
    /// the support radius. Integrators restart at these points.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self.kind {
            WellKind::ChiWell { r } => vec![0.25 * r, 0.5 * r],
            WellKind::Step { radius, .. } => vec![radius],
        }
    }

    /// Same shape with the radial variable scaled: `W(r) → W(r/c)/c²`.
    pub fn rescaled(&self, c: f64) -> Result<Self> {
        match self.kind {
            WellKind::ChiWell { r } => Self::single_well(r * c),
            WellKind::Step { depth, radius } => Self::step_well(depth / (c * c), radius * c),
        }
    }
}

impl fmt::Display for RadialPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WellKind::ChiWell { r } => write!(f, "chi:R={r}"),
            WellKind::Step { depth, radius } => write!(f, "step:depth={depth},radius={radius}"),
        }
    }
}

/// Parses `chi:R=<r>` or `step:depth=<d>,radius=<a>`; the key-value form
/// `kind=chi_well,R=<r>` is accepted as well.
impl FromStr for RadialPotential {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.split_once(':') {
            Some((k, rest)) => (k.trim().to_string(), rest.to_string()),
            None => {
                let mut kind = None;
                let mut rest = Vec::new();
                for part in s.split(',') {
                    match part.split_once('=') {
                        Some((k, v)) if k.trim() == "kind" => kind = Some(v.trim().to_string()),
                        _ => rest.push(part),
                    }
                }
                let kind = kind.ok_or_else(|| Error::Parse(format!("well spec `{s}` has no kind")))?;
                (kind, rest.join(","))
            }
        };
        let mut params = Vec::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number `{}` for `{}`", v.trim(), k.trim())))?;
            params.push((k.trim().to_string(), v));
        }
        let get = |name: &str| {
            params
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("well spec `{s}` is missing `{name}`")))
        };
        let known: &[&str] = match kind.as_str() {
            "chi" | "chi_well" => &["R"],
            "step" => &["depth", "radius"],
            other => return Err(Error::Parse(format!("unknown well kind `{other}`"))),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !known.contains(&k.as_str())) {
            return Err(Error::Parse(format!("unknown parameter `{k}` for well kind `{kind}`")));
        }
        match kind.as_str() {
            "chi" | "chi_well" => Self::single_well(get("R")?),
            _ => Self::step_well(get("depth")?, get("radius")?),
        }
    }
}

/// `V_R(x) = χ(|x|) + R⁻²χ(|x − x₀|/R)` at strength `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoubleWellConfig {
    #[serde(rename = "R")]
    r: f64,
    x0_norm: f64,
    lambda: f64,
}

impl DoubleWellConfig {
    pub fn new(r: f64, x0_norm: f64, lambda: f64) -> Result<Self> {
        if !(x0_norm.is_finite() && x0_norm > 1.0) {
            return Err(invalid("x0_norm", format!("must be > 1, got {x0_norm}")));
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(invalid("R", format!("must be > 0, got {r}")));
        }
        if r >= x0_norm - 1.0 {
            return Err(invalid(
                "R",
                format!("wells overlap: need R < |x0| - 1 = {}, got {r}", x0_norm - 1.0),
            ));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(invalid("lambda", format!("must be > 0, got {lambda}")));
        }
        Ok(Self { r, x0_norm, lambda })
    }

    pub fn radius(&self) -> f64 {
        self.r
    }

    pub fn x0_norm(&self) -> f64 {
        self.x0_norm
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn unit_well(&self) -> RadialPotential {
        RadialPotential::single_well(1.0).expect("unit radius is valid")
    }

    pub fn second_well(&self) -> RadialPotential {
        RadialPotential::single_well(self.r).expect("validated at construction")
    }
}
