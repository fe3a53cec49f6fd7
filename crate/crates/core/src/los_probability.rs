//! Line-of-sight probability as a function of link geometry.
//!
//! All evaluators are frequency independent and return values in `[0, 1]`.
//! At zero separation every model returns exactly 1.

use crate::error::{Error, Result};
use crate::geometry::LinkGeometry;
use crate::model::ModelId;
use crate::registry::{self, EntryKind};

/// Parameters of the `d1/d2` family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct D1D2Params {
    pub d1: f64,
    pub d2: f64,
    /// Square the whole expression (NYU variant).
    pub squared: bool,
}

impl D1D2Params {
    pub const fn new(d1: f64, d2: f64) -> Self {
        D1D2Params {
            d1,
            d2,
            squared: false,
        }
    }

    pub const fn nyu_squared(d1: f64, d2: f64) -> Self {
        D1D2Params {
            d1,
            d2,
            squared: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OfficeLayout {
    MixedOffice,
    OpenOffice,
}

/// Three-branch indoor model: certain LOS up to `near`, exponential decay
/// until `far`, then a scaled slower decay.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InHPiecewiseParams {
    pub layout: OfficeLayout,
    pub near: f64,
    pub near_decay: f64,
    pub far: f64,
    pub far_decay: f64,
    pub far_scale: f64,
}

impl InHPiecewiseParams {
    pub const MIXED_OFFICE: InHPiecewiseParams = InHPiecewiseParams {
        layout: OfficeLayout::MixedOffice,
        near: 1.2,
        near_decay: 4.7,
        far: 6.5,
        far_decay: 32.6,
        far_scale: 0.32,
    };

    pub const OPEN_OFFICE: InHPiecewiseParams = InHPiecewiseParams {
        layout: OfficeLayout::OpenOffice,
        near: 5.0,
        near_decay: 70.8,
        far: 49.0,
        far_decay: 211.7,
        far_scale: 0.54,
    };

    pub fn for_layout(layout: OfficeLayout) -> Self {
        match layout {
            OfficeLayout::MixedOffice => Self::MIXED_OFFICE,
            OfficeLayout::OpenOffice => Self::OPEN_OFFICE,
        }
    }
}

/// Tagged union over every LOS probability form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LosProbabilityModel {
    D1D2(D1D2Params),
    /// `d1/d2` with the UE-height correction `(1 + C(d2D, hUE))`.
    UMaHeight(D1D2Params),
    InHPiecewise(InHPiecewiseParams),
    RMaExponential,
}

impl LosProbabilityModel {
    pub fn evaluate(&self, d2d: f64, hue: f64) -> Result<f64> {
        check_distance(d2d)?;
        match self {
            LosProbabilityModel::D1D2(p) => Ok(los_prob_d1d2(d2d, p)),
            LosProbabilityModel::UMaHeight(p) => los_prob_uma(d2d, hue, p),
            LosProbabilityModel::InHPiecewise(p) => Ok(los_prob_inh(d2d, p)),
            LosProbabilityModel::RMaExponential => Ok(los_prob_rma(d2d)),
        }
    }
}

fn check_distance(d2d: f64) -> Result<()> {
    if !(d2d >= 0.0) || !d2d.is_finite() {
        return Err(Error::domain(format!("d2D must be finite and >= 0 m, got {d2d}")));
    }
    Ok(())
}

fn d1d2_base(d2d: f64, d1: f64, d2: f64) -> f64 {
    if d2d <= d1 {
        // min(d1/d2D, 1) = 1 and the expression collapses to 1; this also
        // covers d2D = 0.
        return 1.0;
    }
    let e = (-d2d / d2).exp();
    (d1 / d2d) * (1.0 - e) + e
}

pub fn los_prob_d1d2(d2d: f64, p: &D1D2Params) -> f64 {
    let base = d1d2_base(d2d, p.d1, p.d2);
    if p.squared {
        base * base
    } else {
        base
    }
}

/// `C(d2D, hUE)`; zero below 13 m UE height and for d2D <= 18 m.
pub fn uma_height_correction(d2d: f64, hue: f64) -> Result<f64> {
    if !(hue > 0.0) || hue > 23.0 {
        return Err(Error::domain(format!(
            "UMa LOS probability is defined for 0 < hUE <= 23 m, got {hue}"
        )));
    }
    if hue < 13.0 || d2d <= 18.0 {
        return Ok(0.0);
    }
    let g = 1.25e-6 * d2d.powi(3) * (-d2d / 150.0).exp();
    Ok(((hue - 13.0) / 10.0).powf(1.5) * g)
}

/// Unclamped `(base · (1 + C))`, squared when requested.
pub fn los_prob_uma_raw(d2d: f64, hue: f64, p: &D1D2Params) -> Result<f64> {
    check_distance(d2d)?;
    let c = uma_height_correction(d2d, hue)?;
    let v = d1d2_base(d2d, p.d1, p.d2) * (1.0 + c);
    Ok(if p.squared { v * v } else { v })
}

pub fn los_prob_uma(d2d: f64, hue: f64, p: &D1D2Params) -> Result<f64> {
    los_prob_uma_raw(d2d, hue, p).map(|v| v.clamp(0.0, 1.0))
}

pub fn los_prob_inh(d2d: f64, p: &InHPiecewiseParams) -> f64 {
    if d2d <= p.near {
        1.0
    } else if d2d < p.far {
        (-(d2d - p.near) / p.near_decay).exp()
    } else {
        (-(d2d - p.far) / p.far_decay).exp() * p.far_scale
    }
}

pub fn los_prob_rma(d2d: f64) -> f64 {
    if d2d <= 10.0 {
        1.0
    } else {
        (-(d2d - 10.0) / 1000.0).exp()
    }
}

/// Whether the UE sits outside or inside a building.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UserLocation {
    Outdoor,
    Indoor,
}

/// Registry dispatcher. When the geometry carries an indoor split and the
/// model defines the indoor-user rule, the BS-to-facade distance replaces
/// d2D.
pub fn los_probability(model: ModelId, geom: &LinkGeometry) -> Result<f64> {
    let location = if geom.indoor_split().is_some() {
        UserLocation::Indoor
    } else {
        UserLocation::Outdoor
    };
    los_probability_at(model, geom, location)
}

/// Like [`los_probability`] with an explicit user location. Requesting the
/// indoor rule without an indoor split, or on a model that has no such rule,
/// is an error.
pub fn los_probability_at(model: ModelId, geom: &LinkGeometry, location: UserLocation) -> Result<f64> {
    let entry = registry::lookup(model)?;
    let EntryKind::LosProbability { model: m, indoor_rule } = &entry.kind else {
        return Err(Error::WrongKind {
            id: model,
            expected: "LOS probability",
            actual: entry.kind.name(),
        });
    };
    let d = match location {
        UserLocation::Outdoor => geom.d2d(),
        UserLocation::Indoor => {
            let split = geom.indoor_split().ok_or_else(|| {
                Error::domain("indoor-user LOS probability needs d2D-out in the geometry")
            })?;
            if *indoor_rule {
                split.d2d_out
            } else if model.scenario.is_indoor() {
                geom.d2d()
            } else {
                return Err(Error::domain(format!(
                    "{model} does not define an indoor-user rule"
                )));
            }
        }
    };
    m.evaluate(d, geom.hue())
}
