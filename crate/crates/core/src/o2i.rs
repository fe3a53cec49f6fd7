//! Outdoor-to-indoor penetration loss.

use crate::error::{Error, Result};
use crate::model::Frequency;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Material {
    StandardGlass,
    IrrGlass,
    Concrete,
    Wood,
}

/// Linear penetration loss `a + b·fc` of one building material.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaterialLoss {
    pub material: Material,
    pub a: f64,
    /// dB per GHz.
    pub b: f64,
}

impl Material {
    pub const ALL: [Material; 4] = [
        Material::StandardGlass,
        Material::IrrGlass,
        Material::Concrete,
        Material::Wood,
    ];

    pub fn loss_params(self) -> MaterialLoss {
        let (a, b) = match self {
            Material::StandardGlass => (2.0, 0.2),
            Material::IrrGlass => (23.0, 0.3),
            Material::Concrete => (5.0, 4.0),
            Material::Wood => (4.85, 0.12),
        };
        MaterialLoss { material: self, a, b }
    }
}

/// Penetration loss of `material` at `fc` GHz.
pub fn material_loss(material: Material, fc: f64) -> f64 {
    let p = material.loss_params();
    p.a + p.b * fc
}

/// Material mix of an external wall. Proportions are non-negative and sum
/// to one.
#[derive(Clone, Debug, PartialEq)]
pub struct WallComposition(Vec<(Material, f64)>);

impl WallComposition {
    pub fn new(parts: Vec<(Material, f64)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("wall composition has no materials"));
        }
        if let Some((m, p)) = parts.iter().find(|(_, p)| !(*p >= 0.0) || !p.is_finite()) {
            return Err(Error::domain(format!("proportion of {m:?} must be >= 0, got {p}")));
        }
        let total: f64 = parts.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!("material proportions sum to {total}, not 1")));
        }
        Ok(WallComposition(parts))
    }

    /// 30 % standard glass, 70 % concrete.
    pub fn low_loss() -> Self {
        WallComposition(vec![(Material::StandardGlass, 0.3), (Material::Concrete, 0.7)])
    }

    /// 70 % IRR glass, 30 % concrete.
    pub fn high_loss() -> Self {
        WallComposition(vec![(Material::IrrGlass, 0.7), (Material::Concrete, 0.3)])
    }

    pub fn parts(&self) -> &[(Material, f64)] {
        &self.0
    }
}

/// Non-perpendicular-incidence offset shared by both printed composites and
/// used for custom walls unless overridden.
pub const DEFAULT_PL_NPI: f64 = 5.0;

/// `PL_npi − 10·log10(Σ p_i·10^(−L_i/10))`.
pub fn wall_loss(composition: &WallComposition, fc: f64, pl_npi: f64) -> f64 {
    let sum: f64 = composition
        .parts()
        .iter()
        .map(|&(m, p)| p * 10f64.powf(-material_loss(m, fc) / 10.0))
        .sum();
    pl_npi - 10.0 * sum.log10()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum O2iVariant {
    Tr38901Low,
    Tr38901High,
    FiveGcmLow,
    FiveGcmHigh,
    MmMagic,
    Car,
    CarMetalized,
}

impl O2iVariant {
    pub const ALL: [O2iVariant; 7] = [
        O2iVariant::Tr38901Low,
        O2iVariant::Tr38901High,
        O2iVariant::FiveGcmLow,
        O2iVariant::FiveGcmHigh,
        O2iVariant::MmMagic,
        O2iVariant::Car,
        O2iVariant::CarMetalized,
    ];

    pub fn token(self) -> &'static str {
        match self {
            O2iVariant::Tr38901Low => "tr38901-low",
            O2iVariant::Tr38901High => "tr38901-high",
            O2iVariant::FiveGcmLow => "5gcm-low",
            O2iVariant::FiveGcmHigh => "5gcm-high",
            O2iVariant::MmMagic => "mmmagic",
            O2iVariant::Car => "car",
            O2iVariant::CarMetalized => "car-metalized",
        }
    }

    pub fn params(self) -> O2iModelParams {
        let wall = match self {
            O2iVariant::Tr38901Low => WallLoss::Composite {
                wall: WallComposition::low_loss(),
                pl_npi: DEFAULT_PL_NPI,
            },
            O2iVariant::Tr38901High => WallLoss::Composite {
                wall: WallComposition::high_loss(),
                pl_npi: DEFAULT_PL_NPI,
            },
            O2iVariant::FiveGcmLow => WallLoss::Bpl { a: 5.0, b: 0.03 },
            O2iVariant::FiveGcmHigh => WallLoss::Bpl { a: 10.0, b: 5.0 },
            O2iVariant::MmMagic => WallLoss::LogFrequency {
                b: 8.5,
                c: 11.2,
                sigma_intercept: 5.7,
                sigma_slope: 2.3,
            },
            O2iVariant::Car => WallLoss::Constant(9.0),
            O2iVariant::CarMetalized => WallLoss::Constant(20.0),
        };
        let (indoor_slope, sigma_p) = match self {
            O2iVariant::Tr38901Low => (0.5, 4.4),
            O2iVariant::Tr38901High => (0.5, 6.5),
            O2iVariant::FiveGcmLow => (0.0, 4.0),
            O2iVariant::FiveGcmHigh => (0.0, 6.0),
            // Frequency dependent, see `WallLoss::LogFrequency`.
            O2iVariant::MmMagic => (0.0, 0.0),
            O2iVariant::Car | O2iVariant::CarMetalized => (0.0, 5.0),
        };
        O2iModelParams {
            variant: self,
            wall,
            indoor_slope,
            sigma_p,
        }
    }
}

impl std::fmt::Display for O2iVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for O2iVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        O2iVariant::ALL
            .into_iter()
            .find(|v| v.token() == lower)
            .ok_or_else(|| Error::domain(format!("unknown O2I variant '{s}'")))
    }
}

/// Loss through the building envelope (or car body).
#[derive(Clone, Debug, PartialEq)]
pub enum WallLoss {
    Composite { wall: WallComposition, pl_npi: f64 },
    /// `10·log10(a + b·fc²)`.
    Bpl { a: f64, b: f64 },
    /// `b + c·log10(fc)` with `σ = sigma_intercept + sigma_slope·log10(fc)`.
    LogFrequency {
        b: f64,
        c: f64,
        sigma_intercept: f64,
        sigma_slope: f64,
    },
    Constant(f64),
}

impl WallLoss {
    pub fn mean(&self, fc: f64) -> f64 {
        match self {
            WallLoss::Composite { wall, pl_npi } => wall_loss(wall, fc, *pl_npi),
            WallLoss::Bpl { a, b } => 10.0 * (a + b * fc * fc).log10(),
            WallLoss::LogFrequency { b, c, .. } => b + c * fc.log10(),
            WallLoss::Constant(mu) => *mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct O2iModelParams {
    pub variant: O2iVariant,
    pub wall: WallLoss,
    /// Indoor loss per meter of penetration depth.
    pub indoor_slope: f64,
    /// Penetration loss standard deviation in dB; frequency-dependent for
    /// the `LogFrequency` wall.
    pub sigma_p: f64,
}

impl O2iModelParams {
    pub fn with_indoor_slope(mut self, slope: f64) -> Self {
        self.indoor_slope = slope;
        self
    }

    pub fn sigma(&self, fc: f64) -> f64 {
        match self.wall {
            WallLoss::LogFrequency {
                sigma_intercept,
                sigma_slope,
                ..
            } => sigma_intercept + sigma_slope * fc.log10(),
            _ => self.sigma_p,
        }
    }

    /// `(mean, σ)` of the total O2I loss on top of the outdoor loss `plb`.
    pub fn total(&self, plb: f64, fc: Frequency, d2d_in: f64) -> Result<(f64, f64)> {
        if !(d2d_in >= 0.0) || !d2d_in.is_finite() {
            return Err(Error::domain(format!("indoor depth must be >= 0 m, got {d2d_in}")));
        }
        let f = fc.ghz();
        Ok((plb + self.wall.mean(f) + self.indoor_slope * d2d_in, self.sigma(f)))
    }
}

/// `(mean, σ)` of outdoor loss `plb` plus penetration and indoor depth loss.
pub fn o2i_total(plb: f64, variant: O2iVariant, fc: Frequency, d2d_in: f64) -> Result<(f64, f64)> {
    variant.params().total(plb, fc, d2d_in)
}

/// `(plb + μ, 5)` with `μ = 9 dB`, or `20 dB` for metalized windows.
pub fn car_penetration(plb: f64, metalized: bool) -> (f64, f64) {
    (plb + if metalized { 20.0 } else { 9.0 }, 5.0)
}
