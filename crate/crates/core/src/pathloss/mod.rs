//! Deterministic mean path loss.
//!
//! The generic families (CI, CIF, CIH, ABG and their dual-slope variants)
//! live here; the organization-specific composite formulas live in
//! [`standard`]. Every evaluator returns the mean in dB. Shadow fading is
//! additive and sampled separately in [`crate::stochastic`].

pub mod standard;

pub use standard::*;

use crate::applicability::{Mode, Violation};
use crate::error::{Error, Result};
use crate::geometry::{EnvironmentConstants, LinkGeometry};
use crate::model::{Frequency, ModelId};
use crate::registry::{self, EntryKind};

/// Speed of light used by every breakpoint formula, in m/s.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Close-in free space reference distance model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CiParams {
    /// Path loss exponent.
    pub n: f64,
}

/// CI with a frequency-dependent exponent `n·(1 + b·(fc − f0)/f0)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CifParams {
    pub n: f64,
    pub b: f64,
    /// Anchor frequency in GHz.
    pub f0: f64,
}

/// CI with a BS-height-dependent exponent `n·(1 + btx·(hBS − hB0)/hB0)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CihParams {
    pub n: f64,
    pub btx: f64,
    /// Reference BS height in meters.
    pub hb0: f64,
}

/// Floating-intercept model `10α·log10(d) + β + 10γ·log10(fc)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AbgParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Two-slope models anchored at the breakpoint, so the curve is continuous
/// at `dbp` by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DualSlopeParams {
    Cif {
        n1: f64,
        b1: f64,
        n2: f64,
        b2: f64,
        f0: f64,
        dbp: f64,
    },
    Abg {
        alpha1: f64,
        beta1: f64,
        gamma: f64,
        alpha2: f64,
        dbp: f64,
    },
}

impl DualSlopeParams {
    pub fn dbp(&self) -> f64 {
        match *self {
            DualSlopeParams::Cif { dbp, .. } | DualSlopeParams::Abg { dbp, .. } => dbp,
        }
    }
}

pub(crate) fn check_reference_distance(d: f64) -> Result<()> {
    if !(d >= 1.0) || !d.is_finite() {
        return Err(Error::domain(format!(
            "d = {d} m is below the 1 m reference distance"
        )));
    }
    Ok(())
}

/// Free space path loss at 1 m: `32.4 + 20·log10(fc)`.
pub fn fspl_1m(fc: Frequency) -> f64 {
    32.4 + 20.0 * fc.ghz().log10()
}

pub fn pl_ci(fc: Frequency, d3d: f64, p: &CiParams) -> Result<f64> {
    check_reference_distance(d3d)?;
    Ok(fspl_1m(fc) + 10.0 * p.n * d3d.log10())
}

/// Effective exponent of the CIF model at `fc`.
pub fn cif_exponent(fc: Frequency, n: f64, b: f64, f0: f64) -> f64 {
    n * (1.0 + b * (fc.ghz() - f0) / f0)
}

pub fn pl_cif(fc: Frequency, d: f64, p: &CifParams) -> Result<f64> {
    check_reference_distance(d)?;
    Ok(fspl_1m(fc) + 10.0 * cif_exponent(fc, p.n, p.b, p.f0) * d.log10())
}

pub fn pl_cih(fc: Frequency, d: f64, hbs: f64, p: &CihParams) -> Result<f64> {
    check_reference_distance(d)?;
    if !(10.0..=150.0).contains(&hbs) {
        return Err(Error::domain(format!(
            "CIH models need 10 m <= hBS <= 150 m, got {hbs}"
        )));
    }
    let n = p.n * (1.0 + p.btx * (hbs - p.hb0) / p.hb0);
    Ok(fspl_1m(fc) + 10.0 * n * d.log10())
}

pub fn pl_abg(fc: Frequency, d: f64, p: &AbgParams) -> Result<f64> {
    check_reference_distance(d)?;
    Ok(10.0 * p.alpha * d.log10() + p.beta + 10.0 * p.gamma * fc.ghz().log10())
}

pub fn pl_dual_slope(fc: Frequency, d: f64, p: &DualSlopeParams) -> Result<f64> {
    check_reference_distance(d)?;
    let dbp = p.dbp();
    if !(dbp > 1.0) {
        return Err(Error::domain(format!("breakpoint must exceed 1 m, got {dbp}")));
    }
    let near = d.min(dbp).log10();
    let far = (d.max(dbp) / dbp).log10();
    Ok(match *p {
        DualSlopeParams::Cif { n1, b1, n2, b2, f0, .. } => {
            fspl_1m(fc)
                + 10.0 * cif_exponent(fc, n1, b1, f0) * near
                + 10.0 * cif_exponent(fc, n2, b2, f0) * far
        }
        DualSlopeParams::Abg {
            alpha1,
            beta1,
            gamma,
            alpha2,
            ..
        } => 10.0 * alpha1 * near + beta1 + 10.0 * gamma * fc.ghz().log10() + 10.0 * alpha2 * far,
    })
}

/// Any registered mean path loss formula.
#[derive(Clone, Debug, PartialEq)]
pub enum PathLossModel {
    Ci(CiParams),
    Cif(CifParams),
    Cih(CihParams),
    Abg(AbgParams),
    DualSlope(DualSlopeParams),
    /// Two-branch LOS model with the effective-height breakpoint, branch
    /// chosen on d2D.
    Breakpoint(BreakpointCompositeParams),
    MetisUmiLos,
    ItuRmaLos,
    /// `a·log10(d2D) + b` at a single frequency.
    LogDistance2d { a: f64, b: f64 },
    Ieee80211ad(AdLink, AdCondition),
    /// `max(LOS, NLOS)`.
    LowerBounded {
        los: Box<PathLossModel>,
        nlos: NlosFormula,
    },
}

impl PathLossModel {
    pub fn evaluate(
        &self,
        fc: Frequency,
        geom: &LinkGeometry,
        env: Option<&EnvironmentConstants>,
    ) -> Result<f64> {
        match self {
            PathLossModel::Ci(p) => pl_ci(fc, geom.d3d(), p),
            PathLossModel::Cif(p) => pl_cif(fc, geom.d3d(), p),
            PathLossModel::Cih(p) => pl_cih(fc, geom.d3d(), geom.hbs(), p),
            PathLossModel::Abg(p) => pl_abg(fc, geom.d3d(), p),
            PathLossModel::DualSlope(p) => pl_dual_slope(fc, geom.d3d(), p),
            PathLossModel::Breakpoint(p) => pl_breakpoint_composite(fc, geom, p),
            PathLossModel::MetisUmiLos => pl_metis_umi_los(fc, geom.d3d(), geom.hbs(), geom.hue()),
            PathLossModel::ItuRmaLos => {
                let env = env.copied().unwrap_or(EnvironmentConstants::RMA_DEFAULT);
                pl_itur_rma_los(fc, geom.d3d(), &env, geom.hbs(), geom.hue())
            }
            PathLossModel::LogDistance2d { a, b } => {
                check_reference_distance(geom.d2d())?;
                Ok(b + a * geom.d2d().log10())
            }
            PathLossModel::Ieee80211ad(link, cond) => {
                let d = match link {
                    AdLink::StaSta => geom.d2d(),
                    AdLink::StaAp => geom.d3d(),
                };
                pl_80211ad(fc, d, *link, *cond)
            }
            PathLossModel::LowerBounded { los, nlos } => {
                pl_max_lower_bounded_nlos(fc, geom, los, nlos, env)
            }
        }
    }
}

/// Mean path loss of a registered model. `env` overrides the registry's
/// default environment constants.
pub fn mean_path_loss(
    model: ModelId,
    fc: Frequency,
    geom: &LinkGeometry,
    env: Option<&EnvironmentConstants>,
) -> Result<f64> {
    let entry = registry::lookup(model)?;
    let EntryKind::PathLoss(m) = &entry.kind else {
        return Err(Error::WrongKind {
            id: model,
            expected: "path loss",
            actual: entry.kind.name(),
        });
    };
    m.evaluate(fc, geom, env.or(entry.env.as_ref()))
}

/// Result of a checked evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub mean_db: f64,
    /// Shadow-fading standard deviation, when the model publishes one.
    pub sigma_db: Option<f64>,
    pub warnings: Vec<Violation>,
}

/// Applicability-checked evaluation: violations are warnings in
/// [`Mode::Lenient`] and errors in [`Mode::Strict`].
pub fn evaluate(
    model: ModelId,
    fc: Frequency,
    geom: &LinkGeometry,
    env: Option<&EnvironmentConstants>,
    mode: Mode,
) -> Result<Evaluation> {
    let entry = registry::lookup(model)?;
    let env = env.or(entry.env.as_ref());
    let warnings = mode.enforce(entry.range.check(fc, geom, env))?;
    let mean_db = mean_path_loss(model, fc, geom, env)?;
    Ok(Evaluation {
        mean_db,
        sigma_db: entry.sigma_db,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ghz(v: f64) -> Frequency {
        Frequency::from_ghz(v).unwrap()
    }

    #[test]
    fn fspl_examples() {
        assert_eq!(fspl_1m(ghz(1.0)), 32.4);
        assert_abs_diff_eq!(fspl_1m(ghz(28.0)), 61.343, epsilon = 1e-3);
        assert_abs_diff_eq!(fspl_1m(ghz(100.0)), 72.4, epsilon = 1e-12);
    }

    #[test]
    fn ci_examples() {
        let f = ghz(28.0);
        assert_eq!(pl_ci(f, 1.0, &CiParams { n: 2.1 }).unwrap(), fspl_1m(f));
        assert_abs_diff_eq!(pl_ci(f, 100.0, &CiParams { n: 2.1 }).unwrap(), 103.343, epsilon = 1e-3);
        assert_abs_diff_eq!(pl_ci(f, 100.0, &CiParams { n: 3.17 }).unwrap(), 124.743, epsilon = 1e-3);
    }

    #[test]
    fn ci_below_reference_distance() {
        let err = pl_ci(ghz(28.0), 0.5, &CiParams { n: 2.0 }).unwrap_err();
        assert!(err.to_string().contains("below the 1 m reference"), "{err}");
    }

    #[test]
    fn cif_examples() {
        let f = ghz(24.2);
        let p = CifParams { n: 3.19, b: 0.06, f0: 24.2 };
        // fspl_1m(24.2) = 60.0763, plus 31.9·2.
        assert_abs_diff_eq!(pl_cif(f, 100.0, &p).unwrap(), 123.876, epsilon = 0.01);
        assert_eq!(
            pl_cif(f, 100.0, &p).unwrap(),
            pl_ci(f, 100.0, &CiParams { n: 3.19 }).unwrap()
        );
        let no_b = CifParams { n: 2.7, b: 0.0, f0: 24.2 };
        assert_eq!(
            pl_cif(ghz(73.0), 40.0, &no_b).unwrap(),
            pl_ci(ghz(73.0), 40.0, &CiParams { n: 2.7 }).unwrap()
        );
    }

    #[test]
    fn cih_examples() {
        let f = ghz(73.0);
        let los = CihParams { n: 2.31, btx: -0.03, hb0: 35.0 };
        let nlos = CihParams { n: 3.07, btx: -0.049, hb0: 35.0 };
        assert_abs_diff_eq!(pl_cih(f, 1.0, 35.0, &los).unwrap(), 69.666, epsilon = 1e-3);
        assert_abs_diff_eq!(pl_cih(f, 1000.0, 35.0, &nlos).unwrap(), 161.766, epsilon = 1e-3);
        assert_abs_diff_eq!(pl_cih(f, 1000.0, 35.0, &los).unwrap(), 138.966, epsilon = 1e-3);
        assert!(pl_cih(f, 1000.0, 5.0, &los).is_err());
        assert!(pl_cih(f, 1000.0, 151.0, &los).is_err());
    }

    #[test]
    fn abg_examples() {
        let f = ghz(28.0);
        let umi = AbgParams { alpha: 3.53, beta: 22.4, gamma: 2.13 };
        assert_abs_diff_eq!(pl_abg(f, 100.0, &umi).unwrap(), 123.824, epsilon = 1e-3);
        assert_eq!(pl_abg(ghz(1.0), 1.0, &umi).unwrap(), 22.4);
        let uma = AbgParams { alpha: 3.4, beta: 19.2, gamma: 2.3 };
        assert_abs_diff_eq!(pl_abg(f, 100.0, &uma).unwrap(), 120.485, epsilon = 1e-3);
    }

    #[test]
    fn dual_slope_examples() {
        let mall = DualSlopeParams::Cif { n1: 2.43, b1: -0.01, n2: 8.36, b2: 0.39, f0: 39.5, dbp: 110.0 };
        assert_abs_diff_eq!(pl_dual_slope(ghz(39.5), 50.0, &mall).unwrap(), 105.617, epsilon = 1e-3);

        // Hand evaluation: 60.0403 + 25.1·log10(7.8) + 42.5·log10(10/7.8)
        //                 = 60.0403 + 22.3916 + 4.5860.
        let office = DualSlopeParams::Cif { n1: 2.51, b1: 0.06, n2: 4.25, b2: 0.04, f0: 24.1, dbp: 7.8 };
        assert_abs_diff_eq!(pl_dual_slope(ghz(24.1), 10.0, &office).unwrap(), 87.018, epsilon = 1e-3);

        for p in [mall, office, DualSlopeParams::Abg { alpha1: 1.7, beta1: 33.0, gamma: 2.49, alpha2: 4.17, dbp: 6.9 }] {
            let dbp = p.dbp();
            let a = pl_dual_slope(ghz(28.0), dbp - 1e-9, &p).unwrap();
            let b = pl_dual_slope(ghz(28.0), dbp + 1e-9, &p).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-6);
        }
    }

    #[test]
    fn dual_slope_rejects_degenerate_breakpoint() {
        let p = DualSlopeParams::Abg { alpha1: 1.7, beta1: 33.0, gamma: 2.49, alpha2: 4.17, dbp: 1.0 };
        assert!(pl_dual_slope(ghz(28.0), 10.0, &p).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ci_frequency_shift(f1 in 0.5f64..100.0, f2 in 0.5f64..100.0, d in 1.0f64..1e4, n in 1.0f64..5.0) {
                let p = CiParams { n };
                let delta = pl_ci(ghz(f2), d, &p).unwrap() - pl_ci(ghz(f1), d, &p).unwrap();
                prop_assert!((delta - 20.0 * (f2 / f1).log10()).abs() < 1e-9);
            }

            #[test]
            fn ci_anchored_at_fspl(f in 0.5f64..100.0, n in 1.0f64..5.0) {
                prop_assert_eq!(pl_ci(ghz(f), 1.0, &CiParams { n }).unwrap(), fspl_1m(ghz(f)));
            }

            #[test]
            fn cih_at_reference_height_is_ci(f in 0.5f64..100.0, d in 1.0f64..1e4, n in 1.0f64..5.0,
                                              btx in -0.1f64..0.1, hb0 in 10.0f64..150.0) {
                let cih = pl_cih(ghz(f), d, hb0, &CihParams { n, btx, hb0 }).unwrap();
                let ci = pl_ci(ghz(f), d, &CiParams { n }).unwrap();
                prop_assert!((cih - ci).abs() < 1e-12);
            }

            #[test]
            fn cif_reduces_to_ci(f in 0.5f64..100.0, d in 1.0f64..1e4, n in 1.0f64..5.0,
                                 b in -0.5f64..0.5, f0 in 1.0f64..100.0) {
                let ci = pl_ci(ghz(f), d, &CiParams { n }).unwrap();
                let zero_b = pl_cif(ghz(f), d, &CifParams { n, b: 0.0, f0 }).unwrap();
                prop_assert!((zero_b - ci).abs() < 1e-12);
                let at_f0 = pl_cif(ghz(f0), d, &CifParams { n, b, f0 }).unwrap();
                let ci_f0 = pl_ci(ghz(f0), d, &CiParams { n }).unwrap();
                prop_assert!((at_f0 - ci_f0).abs() < 1e-12);
            }
        }
    }
}
