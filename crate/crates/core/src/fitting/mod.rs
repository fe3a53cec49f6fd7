//! Least-squares estimation of CI, CIF, ABG and dual-slope parameters from
//! measured path loss, in the dB domain.

mod input;

pub use input::{read_measurements, read_sweep_column, DistanceKind};

use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::model::Frequency;
use crate::pathloss::{AbgParams, CiParams, CifParams, DualSlopeParams, PathLossModel};

/// One measured link: carrier in GHz, 3D distance in meters, loss in dB.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementRecord {
    pub fc: f64,
    pub d: f64,
    pub pl: f64,
}

impl MeasurementRecord {
    pub fn new(fc: f64, d: f64, pl: f64) -> Result<Self> {
        if !(fc > 0.0) || !fc.is_finite() {
            return Err(Error::domain(format!("fc must be finite and > 0 GHz, got {fc}")));
        }
        if !(d >= 1.0) || !d.is_finite() {
            return Err(Error::domain(format!("d = {d} m is below the 1 m reference distance")));
        }
        if !pl.is_finite() {
            return Err(Error::domain(format!("path loss must be finite, got {pl}")));
        }
        Ok(MeasurementRecord { fc, d, pl })
    }

    fn fspl(&self) -> f64 {
        32.4 + 20.0 * self.fc.log10()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FittedParams {
    Ci(CiParams),
    Cif(CifParams),
    Abg(AbgParams),
    DualSlope(DualSlopeParams),
}

impl FittedParams {
    pub fn family(&self) -> &'static str {
        match self {
            FittedParams::Ci(_) => "ci",
            FittedParams::Cif(_) => "cif",
            FittedParams::Abg(_) => "abg",
            FittedParams::DualSlope(DualSlopeParams::Cif { .. }) => "dual-cif",
            FittedParams::DualSlope(DualSlopeParams::Abg { .. }) => "dual-abg",
        }
    }

    pub fn model(&self) -> PathLossModel {
        match *self {
            FittedParams::Ci(p) => PathLossModel::Ci(p),
            FittedParams::Cif(p) => PathLossModel::Cif(p),
            FittedParams::Abg(p) => PathLossModel::Abg(p),
            FittedParams::DualSlope(p) => PathLossModel::DualSlope(p),
        }
    }

    /// `(name, value)` pairs in a stable order.
    pub fn named(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FittedParams::Ci(p) => vec![("n", p.n)],
            FittedParams::Cif(p) => vec![("n", p.n), ("b", p.b), ("f0", p.f0)],
            FittedParams::Abg(p) => vec![("alpha", p.alpha), ("beta", p.beta), ("gamma", p.gamma)],
            FittedParams::DualSlope(DualSlopeParams::Cif { n1, b1, n2, b2, f0, dbp }) => {
                vec![("n1", n1), ("b1", b1), ("n2", n2), ("b2", b2), ("f0", f0), ("dbp", dbp)]
            }
            FittedParams::DualSlope(DualSlopeParams::Abg { alpha1, beta1, gamma, alpha2, dbp }) => vec![
                ("alpha1", alpha1),
                ("beta1", beta1),
                ("gamma", gamma),
                ("alpha2", alpha2),
                ("dbp", dbp),
            ],
        }
    }

    fn predict(&self, r: &MeasurementRecord) -> Result<f64> {
        let fc = Frequency::from_ghz(r.fc)?;
        match self {
            FittedParams::Ci(p) => crate::pathloss::pl_ci(fc, r.d, p),
            FittedParams::Cif(p) => crate::pathloss::pl_cif(fc, r.d, p),
            FittedParams::Abg(p) => crate::pathloss::pl_abg(fc, r.d, p),
            FittedParams::DualSlope(p) => crate::pathloss::pl_dual_slope(fc, r.d, p),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub params: FittedParams,
    /// RMS residual in dB.
    pub sigma: f64,
    /// Measured minus fitted, in input order.
    pub residuals: Vec<f64>,
    pub count: usize,
}

impl FitResult {
    fn from_params(params: FittedParams, records: &[MeasurementRecord]) -> Result<Self> {
        let residuals = records
            .iter()
            .map(|r| Ok(r.pl - params.predict(r)?))
            .collect::<Result<Vec<_>>>()?;
        let sse: f64 = residuals.iter().map(|e| e * e).sum();
        Ok(FitResult {
            params,
            sigma: (sse / residuals.len() as f64).sqrt(),
            residuals,
            count: records.len(),
        })
    }

    pub fn sse(&self) -> f64 {
        self.residuals.iter().map(|e| e * e).sum()
    }
}

fn distinct(values: impl Iterator<Item = f64>) -> usize {
    values.map(f64::to_bits).collect::<BTreeSet<_>>().len()
}

fn require_records(records: &[MeasurementRecord], min: usize, family: &str) -> Result<()> {
    if records.len() < min {
        return Err(Error::Fit(format!(
            "{family} fit needs at least {min} records, got {}",
            records.len()
        )));
    }
    Ok(())
}

/// Least squares via SVD. Fails when the design is numerically rank
/// deficient.
fn least_squares(x: DMatrix<f64>, y: DVector<f64>, parameter: &'static str) -> Result<DVector<f64>> {
    let svd = x.svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if !(max > 0.0) || min / max < 1e-10 {
        return Err(Error::RankDeficient {
            parameter,
            reason: format!("singular value ratio {:.3e}", if max > 0.0 { min / max } else { 0.0 }),
        });
    }
    svd.solve(&y, 0.0).map_err(|e| Error::Fit(e.to_string()))
        .map(|b| b.column(0).into_owned())
}

/// `n̂ = Σ (PL − FSPL)·log10 d / (10·Σ log10² d)`.
pub fn fit_ci(records: &[MeasurementRecord]) -> Result<FitResult> {
    require_records(records, 2, "CI")?;
    if distinct(records.iter().map(|r| r.d)) < 2 {
        return Err(Error::Fit("CI fit needs at least 2 distinct distances".into()));
    }
    let (num, den) = records.iter().fold((0.0, 0.0), |(num, den), r| {
        let l = r.d.log10();
        (num + (r.pl - r.fspl()) * l, den + l * l)
    });
    if den == 0.0 {
        return Err(Error::RankDeficient {
            parameter: "n",
            reason: "every distance is 1 m".into(),
        });
    }
    FitResult::from_params(FittedParams::Ci(CiParams { n: num / (10.0 * den) }), records)
}

/// OLS on `[10·log10 d, 1, 10·log10 fc]`.
pub fn fit_abg(records: &[MeasurementRecord]) -> Result<FitResult> {
    require_records(records, 3, "ABG")?;
    if distinct(records.iter().map(|r| r.fc)) < 2 {
        return Err(Error::RankDeficient {
            parameter: "gamma",
            reason: "all records share one frequency, so the intercept and frequency columns are collinear".into(),
        });
    }
    if distinct(records.iter().map(|r| r.d)) < 2 {
        return Err(Error::RankDeficient {
            parameter: "alpha",
            reason: "all records share one distance".into(),
        });
    }
    let x = DMatrix::from_fn(records.len(), 3, |i, j| match j {
        0 => 10.0 * records[i].d.log10(),
        1 => 1.0,
        _ => 10.0 * records[i].fc.log10(),
    });
    let y = DVector::from_iterator(records.len(), records.iter().map(|r| r.pl));
    let b = least_squares(x, y, "beta")?;
    let p = AbgParams { alpha: b[0], beta: b[1], gamma: b[2] };
    FitResult::from_params(FittedParams::Abg(p), records)
}

/// Record-count weighted mean frequency.
pub fn mean_frequency(records: &[MeasurementRecord]) -> f64 {
    records.iter().map(|r| r.fc).sum::<f64>() / records.len() as f64
}

/// CIF with `f0` set to the mean frequency of the records.
pub fn fit_cif(records: &[MeasurementRecord]) -> Result<FitResult> {
    require_records(records, 2, "CIF")?;
    fit_cif_with_f0(records, mean_frequency(records))
}

/// CIF with a caller-chosen anchor frequency.
pub fn fit_cif_with_f0(records: &[MeasurementRecord], f0: f64) -> Result<FitResult> {
    require_records(records, 2, "CIF")?;
    if !(f0 > 0.0) {
        return Err(Error::domain(format!("f0 must be > 0 GHz, got {f0}")));
    }
    if distinct(records.iter().map(|r| r.fc)) < 2 {
        // The frequency regressor is identically zero.
        let ci = fit_ci(records)?;
        let FittedParams::Ci(CiParams { n }) = ci.params else { unreachable!() };
        return FitResult::from_params(FittedParams::Cif(CifParams { n, b: 0.0, f0 }), records);
    }
    let x = DMatrix::from_fn(records.len(), 2, |i, j| {
        let r = &records[i];
        let l = 10.0 * r.d.log10();
        if j == 0 { l } else { l * (r.fc - f0) / f0 }
    });
    let y = DVector::from_iterator(records.len(), records.iter().map(|r| r.pl - r.fspl()));
    let c = least_squares(x, y, "n")?;
    let n = c[0];
    if n.abs() < 1e-12 {
        return Err(Error::Fit("fitted n is 0, so b cannot be recovered".into()));
    }
    FitResult::from_params(FittedParams::Cif(CifParams { n, b: c[1] / n, f0 }), records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualFamily {
    Cif,
    Abg,
}

/// Grid search over breakpoint candidates; at each candidate the two-slope
/// model (continuous at the breakpoint) is fitted by linear least squares.
/// The candidate with the smallest SSE wins; ties keep the earlier one.
pub fn fit_dual_slope(records: &[MeasurementRecord], family: DualFamily, candidates: &[f64]) -> Result<FitResult> {
    require_records(records, 6, "dual-slope")?;
    let f0 = mean_frequency(records);
    let single_frequency = distinct(records.iter().map(|r| r.fc)) < 2;
    if family == DualFamily::Abg && single_frequency {
        return Err(Error::RankDeficient {
            parameter: "gamma",
            reason: "all records share one frequency".into(),
        });
    }

    let mut best: Option<FitResult> = None;
    let mut last_err = None;
    for &dbp in candidates {
        if !(dbp > 1.0) || !dbp.is_finite() {
            return Err(Error::domain(format!("breakpoint candidate {dbp} m must exceed 1 m")));
        }
        let below = records.iter().filter(|r| r.d < dbp).count();
        let above = records.iter().filter(|r| r.d > dbp).count();
        if below == 0 || above == 0 {
            continue;
        }
        let fit = match family {
            DualFamily::Cif => dual_cif_at(records, dbp, f0, single_frequency),
            DualFamily::Abg => dual_abg_at(records, dbp),
        };
        match fit {
            Ok(fit) => {
                if best.as_ref().is_none_or(|b| fit.sse() < b.sse()) {
                    best = Some(fit);
                }
            }
            Err(e @ Error::RankDeficient { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    best.ok_or_else(|| {
        last_err.unwrap_or_else(|| Error::Fit("no breakpoint candidate has data on both sides".into()))
    })
}

fn split(d: f64, dbp: f64) -> (f64, f64) {
    (10.0 * d.min(dbp).log10(), 10.0 * (d.max(dbp) / dbp).log10())
}

fn dual_cif_at(records: &[MeasurementRecord], dbp: f64, f0: f64, single_frequency: bool) -> Result<FitResult> {
    let cols = if single_frequency { 2 } else { 4 };
    let x = DMatrix::from_fn(records.len(), cols, |i, j| {
        let r = &records[i];
        let (l1, l2) = split(r.d, dbp);
        let u = (r.fc - f0) / f0;
        match (cols, j) {
            (2, 0) | (4, 0) => l1,
            (2, _) => l2,
            (_, 1) => u * l1,
            (_, 2) => l2,
            _ => u * l2,
        }
    });
    let y = DVector::from_iterator(records.len(), records.iter().map(|r| r.pl - r.fspl()));
    let c = least_squares(x, y, "n2")?;
    let (n1, nb1, n2, nb2) = if single_frequency {
        (c[0], 0.0, c[1], 0.0)
    } else {
        (c[0], c[1], c[2], c[3])
    };
    let ratio = |nb: f64, n: f64| if nb == 0.0 { Ok(0.0) } else if n.abs() < 1e-12 {
        Err(Error::Fit("fitted slope is 0, so b cannot be recovered".into()))
    } else {
        Ok(nb / n)
    };
    let p = DualSlopeParams::Cif {
        n1,
        b1: ratio(nb1, n1)?,
        n2,
        b2: ratio(nb2, n2)?,
        f0,
        dbp,
    };
    FitResult::from_params(FittedParams::DualSlope(p), records)
}

fn dual_abg_at(records: &[MeasurementRecord], dbp: f64) -> Result<FitResult> {
    let x = DMatrix::from_fn(records.len(), 4, |i, j| {
        let r = &records[i];
        let (l1, l2) = split(r.d, dbp);
        match j {
            0 => l1,
            1 => 1.0,
            2 => 10.0 * r.fc.log10(),
            _ => l2,
        }
    });
    let y = DVector::from_iterator(records.len(), records.iter().map(|r| r.pl));
    let c = least_squares(x, y, "alpha2")?;
    let p = DualSlopeParams::Abg {
        alpha1: c[0],
        beta1: c[1],
        gamma: c[2],
        alpha2: c[3],
        dbp,
    };
    FitResult::from_params(FittedParams::DualSlope(p), records)
}
