use crate::error::{Error, Result};

/// 3D separation from a horizontal distance and the two antenna heights.
pub fn derive_d3d(d2d: f64, hbs: f64, hue: f64) -> Result<f64> {
    if !(d2d >= 0.0) || !d2d.is_finite() {
        return Err(Error::domain(format!("d2D must be finite and >= 0 m, got {d2d}")));
    }
    check_height("hBS", hbs)?;
    check_height("hUE", hue)?;
    Ok(d2d.hypot(hbs - hue))
}

fn check_height(name: &str, h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::domain(format!("{name} must be finite and > 0 m, got {h}")));
    }
    Ok(())
}

/// Split of the horizontal distance for a UE inside a building.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndoorSplit {
    /// BS to building facade.
    pub d2d_out: f64,
    /// Penetration depth behind the facade.
    pub d2d_in: f64,
}

/// Geometry of one BS-UE link.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinkGeometry {
    d2d: f64,
    d3d: f64,
    hbs: f64,
    hue: f64,
    indoor: Option<IndoorSplit>,
}

impl LinkGeometry {
    pub fn new(d2d: f64, hbs: f64, hue: f64) -> Result<Self> {
        let d3d = derive_d3d(d2d, hbs, hue)?;
        Ok(LinkGeometry {
            d2d,
            d3d,
            hbs,
            hue,
            indoor: None,
        })
    }

    /// Builds the geometry from a 3D separation; fails if `d3d` is shorter
    /// than the height difference.
    pub fn from_d3d(d3d: f64, hbs: f64, hue: f64) -> Result<Self> {
        check_height("hBS", hbs)?;
        check_height("hUE", hue)?;
        let dh = (hbs - hue).abs();
        if !d3d.is_finite() || d3d < dh {
            return Err(Error::domain(format!(
                "d3D = {d3d} m is shorter than the antenna height difference {dh} m"
            )));
        }
        let d2d = ((d3d - dh) * (d3d + dh)).sqrt();
        Ok(LinkGeometry {
            d2d,
            d3d,
            hbs,
            hue,
            indoor: None,
        })
    }

    /// Indoor UE: `d2d = d2d_out + d2d_in`.
    pub fn indoor(d2d_out: f64, d2d_in: f64, hbs: f64, hue: f64) -> Result<Self> {
        if !(d2d_out >= 0.0) || !(d2d_in >= 0.0) {
            return Err(Error::domain(format!(
                "indoor split must be non-negative, got out={d2d_out} in={d2d_in}"
            )));
        }
        let mut g = LinkGeometry::new(d2d_out + d2d_in, hbs, hue)?;
        g.indoor = Some(IndoorSplit { d2d_out, d2d_in });
        Ok(g)
    }

    /// Attaches an indoor split to an existing geometry. The two parts must
    /// add up to `d2d` (relative tolerance 1e-9).
    pub fn with_indoor_split(mut self, d2d_out: f64, d2d_in: f64) -> Result<Self> {
        if !(d2d_out >= 0.0) || !(d2d_in >= 0.0) {
            return Err(Error::domain("indoor split must be non-negative"));
        }
        let sum = d2d_out + d2d_in;
        if (sum - self.d2d).abs() > 1e-9 * self.d2d.max(1.0) {
            return Err(Error::domain(format!(
                "d2D-out + d2D-in = {sum} m does not match d2D = {} m",
                self.d2d
            )));
        }
        self.indoor = Some(IndoorSplit { d2d_out, d2d_in });
        Ok(self)
    }

    #[inline]
    pub fn d2d(&self) -> f64 {
        self.d2d
    }

    #[inline]
    pub fn d3d(&self) -> f64 {
        self.d3d
    }

    #[inline]
    pub fn hbs(&self) -> f64 {
        self.hbs
    }

    #[inline]
    pub fn hue(&self) -> f64 {
        self.hue
    }

    pub fn indoor_split(&self) -> Option<IndoorSplit> {
        self.indoor
    }
}

/// Street width `w` and average building height `h`, both in meters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvironmentConstants {
    pub street_width: f64,
    pub building_height: f64,
}

impl EnvironmentConstants {
    /// ITU-R M.2135 rural macro defaults.
    pub const RMA_DEFAULT: EnvironmentConstants = EnvironmentConstants {
        street_width: 20.0,
        building_height: 5.0,
    };

    /// METIS urban macro NLOS defaults.
    pub const METIS_UMA_DEFAULT: EnvironmentConstants = EnvironmentConstants {
        street_width: 20.0,
        building_height: 20.0,
    };
}
