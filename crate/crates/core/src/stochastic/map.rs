use std::io::Write;

use statrs::function::erf::erfc;

use super::RandomSource;
use crate::error::{Error, Result};
use crate::los_probability::LosProbabilityModel;
use crate::model::Scenario;

/// Correlation distance used when the caller does not supply one. These are
/// placeholders, not measured values.
pub fn default_correlation_distance(scenario: Scenario) -> f64 {
    match scenario {
        Scenario::UMiStreetCanyon | Scenario::UMiOpenSquare => 12.0,
        Scenario::UMa | Scenario::RMa => 50.0,
        Scenario::InHMixedOffice | Scenario::InHOpenOffice | Scenario::InHShoppingMall => 10.0,
    }
}

/// `Φ(z)`.
pub fn standard_normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// Grid layout. Cell `(i, j)` covers
/// `[x0 + i·cell, x0 + (i+1)·cell) × [y0 + j·cell, y0 + (j+1)·cell)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MapSpec {
    pub origin: (f64, f64),
    pub cell: f64,
    pub nx: usize,
    pub ny: usize,
    pub correlation_distance: f64,
    /// UE height used for the LOS probability of every cell.
    pub hue: f64,
}

impl MapSpec {
    /// Square `n × n` grid centered on the origin with the scenario's
    /// default correlation distance and UE height.
    pub fn centered(scenario: Scenario, n: usize, cell: f64) -> Self {
        let half = n as f64 * cell / 2.0;
        MapSpec {
            origin: (-half, -half),
            cell,
            nx: n,
            ny: n,
            correlation_distance: default_correlation_distance(scenario),
            hue: scenario.default_heights().1,
        }
    }

    fn validate(&self) -> Result<()> {
        let d = self.correlation_distance;
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::domain(format!("correlation distance must be > 0 m, got {d}")));
        }
        if !(self.cell > 0.0) || !self.cell.is_finite() {
            return Err(Error::domain(format!("cell size must be > 0 m, got {}", self.cell)));
        }
        if self.cell > d / 2.0 {
            return Err(Error::domain(format!(
                "cell size {} m exceeds half the correlation distance {d} m",
                self.cell
            )));
        }
        if self.nx == 0 || self.ny == 0 {
            return Err(Error::domain("grid must have at least one cell per axis"));
        }
        if !self.origin.0.is_finite() || !self.origin.1.is_finite() {
            return Err(Error::domain("grid origin must be finite"));
        }
        Ok(())
    }
}

/// Generated LOS state and shadowing field. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct SpatialGrid {
    spec: MapSpec,
    seed: u64,
    los: Vec<bool>,
    shadow: Vec<f64>,
}

/// Draws an i.i.d. standard normal field and filters it in place with a
/// first-order recursion along x, then along y. The recursion keeps unit
/// variance exactly and gives the correlation `exp(−(|Δx| + |Δy|)/d_cor)`.
fn correlated_field(spec: &MapSpec, rng: &mut RandomSource) -> Vec<f64> {
    let (nx, ny) = (spec.nx, spec.ny);
    let mut f: Vec<f64> = (0..nx * ny).map(|_| rng.standard_normal()).collect();
    let a = (-spec.cell / spec.correlation_distance).exp();
    let b = (1.0 - a * a).sqrt();
    for row in f.chunks_mut(nx) {
        for i in 1..nx {
            row[i] = a * row[i - 1] + b * row[i];
        }
    }
    for j in 1..ny {
        let (prev, cur) = f.split_at_mut(j * nx);
        let prev = &prev[(j - 1) * nx..];
        for (c, p) in cur[..nx].iter_mut().zip(prev) {
            *c = a * p + b * *c;
        }
    }
    f
}

/// Builds a spatially consistent map around a BS at `bs`. Each cell is LOS
/// when `Φ(z_los) < P_LOS(d2D)`, which preserves the LOS marginal exactly;
/// shadowing is `σ·z_sf`.
pub fn generate_consistency_map(
    los_model: &LosProbabilityModel,
    shadow_sigma: f64,
    spec: &MapSpec,
    bs: (f64, f64),
    rng: &mut RandomSource,
) -> Result<SpatialGrid> {
    spec.validate()?;
    if !(shadow_sigma >= 0.0) || !shadow_sigma.is_finite() {
        return Err(Error::domain(format!("shadow σ must be >= 0 dB, got {shadow_sigma}")));
    }
    let los_field = correlated_field(spec, rng);
    let sf_field = correlated_field(spec, rng);

    let mut los = Vec::with_capacity(los_field.len());
    for (k, z) in los_field.iter().enumerate() {
        let (x, y) = cell_center(spec, k % spec.nx, k / spec.nx);
        let d2d = (x - bs.0).hypot(y - bs.1);
        let p = los_model.evaluate(d2d, spec.hue)?;
        los.push(p >= 1.0 || standard_normal_cdf(*z) < p);
    }
    let shadow = sf_field.into_iter().map(|z| shadow_sigma * z).collect();
    Ok(SpatialGrid {
        spec: *spec,
        seed: rng.seed(),
        los,
        shadow,
    })
}

fn cell_center(spec: &MapSpec, i: usize, j: usize) -> (f64, f64) {
    (
        spec.origin.0 + (i as f64 + 0.5) * spec.cell,
        spec.origin.1 + (j as f64 + 0.5) * spec.cell,
    )
}

impl SpatialGrid {
    pub fn spec(&self) -> &MapSpec {
        &self.spec
    }

    /// Seed of the generator the map was drawn from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        cell_center(&self.spec, i, j)
    }

    pub fn los_at(&self, i: usize, j: usize) -> bool {
        self.los[j * self.spec.nx + i]
    }

    pub fn shadow_at(&self, i: usize, j: usize) -> f64 {
        self.shadow[j * self.spec.nx + i]
    }

    pub fn los_field(&self) -> &[bool] {
        &self.los
    }

    pub fn shadow_field(&self) -> &[f64] {
        &self.shadow
    }

    /// LOS state of the containing cell and the shadowing interpolated
    /// bilinearly between cell centers (held constant beyond the outermost
    /// centers).
    pub fn query(&self, x: f64, y: f64) -> Result<(bool, f64)> {
        let s = &self.spec;
        let w = s.nx as f64 * s.cell;
        let h = s.ny as f64 * s.cell;
        let (u, v) = (x - s.origin.0, y - s.origin.1);
        if !(0.0..=w).contains(&u) || !(0.0..=h).contains(&v) {
            return Err(Error::domain(format!("point ({x}, {y}) lies outside the map extent")));
        }
        let ci = ((u / s.cell) as usize).min(s.nx - 1);
        let cj = ((v / s.cell) as usize).min(s.ny - 1);

        let (i0, i1, tx) = bracket(u / s.cell - 0.5, s.nx);
        let (j0, j1, ty) = bracket(v / s.cell - 0.5, s.ny);
        let lo = self.shadow_at(i0, j0) * (1.0 - tx) + self.shadow_at(i1, j0) * tx;
        let hi = self.shadow_at(i0, j1) * (1.0 - tx) + self.shadow_at(i1, j1) * tx;
        Ok((self.los_at(ci, cj), lo * (1.0 - ty) + hi * ty))
    }

    /// `x_m,y_m,los,shadow_db`, one row per cell center.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.into());
        w.write_record(["x_m", "y_m", "los", "shadow_db"]).map_err(io)?;
        for j in 0..self.spec.ny {
            for i in 0..self.spec.nx {
                let (x, y) = self.cell_center(i, j);
                let los = if self.los_at(i, j) { "1" } else { "0" };
                w.write_record([x.to_string(), y.to_string(), los.to_string(), self.shadow_at(i, j).to_string()])
                    .map_err(io)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Neighbouring center indices and the interpolation weight for the
/// fractional center coordinate `t`.
fn bracket(t: f64, n: usize) -> (usize, usize, f64) {
    if t <= 0.0 || n == 1 {
        return (0, 0, 0.0);
    }
    let last = (n - 1) as f64;
    if t >= last {
        return (n - 1, n - 1, 0.0);
    }
    let i = t.floor();
    let frac = t - i;
    let i = i as usize;
    (i, i + 1, frac)
}
