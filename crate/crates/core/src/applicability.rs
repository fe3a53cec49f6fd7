//! Validated ranges attached to every registered model, and the check that
//! reports which constraints a query violates.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{EnvironmentConstants, LinkGeometry};
use crate::model::{Frequency, ModelId};
use crate::registry;

/// Closed, open or half-open interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub min: f64,
    pub max: f64,
    pub min_inclusive: bool,
    pub max_inclusive: bool,
}

impl Interval {
    pub const fn closed(min: f64, max: f64) -> Self {
        Interval {
            min,
            max,
            min_inclusive: true,
            max_inclusive: true,
        }
    }

    pub const fn open(min: f64, max: f64) -> Self {
        Interval {
            min,
            max,
            min_inclusive: false,
            max_inclusive: false,
        }
    }

    pub const fn at_least(min: f64) -> Self {
        Interval::closed(min, f64::INFINITY)
    }

    pub const fn above(min: f64) -> Self {
        Interval {
            min,
            max: f64::INFINITY,
            min_inclusive: false,
            max_inclusive: false,
        }
    }

    pub const fn exactly(v: f64) -> Self {
        Interval::closed(v, v)
    }

    pub const fn left_open(min: f64, max: f64) -> Self {
        Interval {
            min,
            max,
            min_inclusive: false,
            max_inclusive: true,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        let lo = if self.min_inclusive { v >= self.min } else { v > self.min };
        let hi = if self.max_inclusive { v <= self.max } else { v < self.max };
        lo && hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.min == self.max, self.max.is_infinite()) {
            (true, _) => write!(f, "{}", self.min),
            (false, true) => write!(f, "{} {}", if self.min_inclusive { ">=" } else { ">" }, self.min),
            (false, false) => write!(f, "{}–{}", self.min, self.max),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Frequency,
    D2d,
    D3d,
    BsHeight,
    UeHeight,
    StreetWidth,
    BuildingHeight,
}

impl Quantity {
    fn label(self) -> (&'static str, &'static str) {
        match self {
            Quantity::Frequency => ("fc", "GHz"),
            Quantity::D2d => ("d2D", "m"),
            Quantity::D3d => ("d3D", "m"),
            Quantity::BsHeight => ("hBS", "m"),
            Quantity::UeHeight => ("hUE", "m"),
            Quantity::StreetWidth => ("W", "m"),
            Quantity::BuildingHeight => ("h", "m"),
        }
    }
}

/// One violated constraint.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub quantity: Quantity,
    pub value: f64,
    pub allowed: Interval,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, unit) = self.quantity.label();
        write!(
            f,
            "{name} = {} {unit} out of {} {unit}",
            self.value, self.allowed
        )
    }
}

/// Validated ranges of a model. Absent axes are unconstrained.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ApplicabilityRange {
    pub fc: Option<Interval>,
    pub d2d: Option<Interval>,
    pub d3d: Option<Interval>,
    pub hbs: Option<Interval>,
    pub hue: Option<Interval>,
    pub street_width: Option<Interval>,
    pub building_height: Option<Interval>,
}

impl ApplicabilityRange {
    pub fn check_frequency(&self, fc: Frequency) -> Vec<Violation> {
        let mut out = Vec::new();
        push_if_outside(&mut out, Quantity::Frequency, fc.ghz(), self.fc);
        out
    }

    pub fn check(
        &self,
        fc: Frequency,
        geom: &LinkGeometry,
        env: Option<&EnvironmentConstants>,
    ) -> Vec<Violation> {
        let mut out = self.check_frequency(fc);
        push_if_outside(&mut out, Quantity::D2d, geom.d2d(), self.d2d);
        push_if_outside(&mut out, Quantity::D3d, geom.d3d(), self.d3d);
        push_if_outside(&mut out, Quantity::BsHeight, geom.hbs(), self.hbs);
        push_if_outside(&mut out, Quantity::UeHeight, geom.hue(), self.hue);
        if let Some(env) = env {
            push_if_outside(&mut out, Quantity::StreetWidth, env.street_width, self.street_width);
            push_if_outside(&mut out, Quantity::BuildingHeight, env.building_height, self.building_height);
        }
        out
    }

    /// Every axis has `min <= max`.
    pub fn is_well_formed(&self) -> bool {
        [
            self.fc,
            self.d2d,
            self.d3d,
            self.hbs,
            self.hue,
            self.street_width,
            self.building_height,
        ]
        .iter()
        .flatten()
        .all(|i| i.min <= i.max)
    }
}

fn push_if_outside(out: &mut Vec<Violation>, quantity: Quantity, value: f64, range: Option<Interval>) {
    if let Some(allowed) = range {
        if !allowed.contains(value) {
            out.push(Violation {
                quantity,
                value,
                allowed,
            });
        }
    }
}

/// Lists the constraints of `model` that `(fc, geom)` violates. An empty list
/// means the model is fully applicable. The registry's default environment
/// constants are used for models that need them.
pub fn check_applicability(model: ModelId, fc: Frequency, geom: &LinkGeometry) -> Result<Vec<Violation>> {
    let entry = registry::lookup(model)?;
    Ok(entry.range.check(fc, geom, entry.env.as_ref()))
}

/// Applicability enforcement level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Violations are returned as warnings.
    #[default]
    Lenient,
    /// Violations are errors.
    Strict,
}

impl Mode {
    pub(crate) fn enforce(self, violations: Vec<Violation>) -> Result<Vec<Violation>> {
        match self {
            Mode::Strict if !violations.is_empty() => Err(Error::NotApplicable(violations)),
            _ => Ok(violations),
        }
    }
}
