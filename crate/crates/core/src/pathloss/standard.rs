//! Organization-specific composite path loss formulas: breakpoint LOS
//! models, LOS-lower-bounded NLOS models, the ITU-R rural macro pair and
//! the IEEE 802.11ad indoor rows.

use std::f64::consts::PI;

use super::{check_reference_distance, AbgParams, PathLossModel, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::geometry::{EnvironmentConstants, LinkGeometry};
use crate::model::Frequency;

fn check_effective_heights(hbs: f64, hue: f64) -> Result<()> {
    if !(hbs > 1.0) || !(hue > 1.0) {
        return Err(Error::domain(format!(
            "breakpoint needs antenna heights above 1 m, got hBS={hbs} hUE={hue}"
        )));
    }
    Ok(())
}

/// `4·(hBS − 1)·(hUE − 1)·fc/c`, in meters.
pub fn breakpoint_tr38901(fc: Frequency, hbs: f64, hue: f64) -> Result<f64> {
    check_effective_heights(hbs, hue)?;
    Ok(4.0 * (hbs - 1.0) * (hue - 1.0) * fc.hz() / SPEED_OF_LIGHT)
}

/// METIS frequency-scaled breakpoint:
/// `0.87·exp(−log10(fc)/0.65)·4·(hBS − 1)·(hUE − 1)/λ`.
pub fn breakpoint_metis(fc: Frequency, hbs: f64, hue: f64) -> Result<f64> {
    let scale = 0.87 * (-fc.ghz().log10() / 0.65).exp();
    Ok(scale * breakpoint_tr38901(fc, hbs, hue)?)
}

/// Rural macro breakpoint `2π·hBS·hUE·fc/c` (no effective-height offset).
pub fn breakpoint_itur_rma(fc: Frequency, hbs: f64, hue: f64) -> Result<f64> {
    if !(hbs > 0.0) || !(hue > 0.0) {
        return Err(Error::domain("antenna heights must be positive"));
    }
    Ok(2.0 * PI * hbs * hue * fc.hz() / SPEED_OF_LIGHT)
}

/// Coefficients of the two-branch 3GPP-style LOS model:
///
/// ```text
/// PL1 = A + B·log10(d3D) + 20·log10(fc)
/// PL2 = A + 40·log10(d3D) + 20·log10(fc) − K·log10(d'BP² + (hBS − hUE)²)
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BreakpointCompositeParams {
    pub intercept: f64,
    pub near_slope: f64,
    pub correction: f64,
}

impl BreakpointCompositeParams {
    pub const UMI: BreakpointCompositeParams = BreakpointCompositeParams {
        intercept: 32.4,
        near_slope: 21.0,
        correction: 9.5,
    };

    pub const UMA: BreakpointCompositeParams = BreakpointCompositeParams {
        intercept: 28.0,
        near_slope: 22.0,
        correction: 9.0,
    };
}

/// Both branches of the breakpoint model at a given geometry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BreakpointBranches {
    pub dbp: f64,
    pub near: f64,
    pub far: f64,
}

pub fn breakpoint_branches(
    fc: Frequency,
    geom: &LinkGeometry,
    p: &BreakpointCompositeParams,
) -> Result<BreakpointBranches> {
    check_reference_distance(geom.d3d())?;
    let dbp = breakpoint_tr38901(fc, geom.hbs(), geom.hue())?;
    let log_d = geom.d3d().log10();
    let freq = 20.0 * fc.ghz().log10();
    let dh = geom.hbs() - geom.hue();
    Ok(BreakpointBranches {
        dbp,
        near: p.intercept + p.near_slope * log_d + freq,
        far: p.intercept + 40.0 * log_d + freq - p.correction * (dbp * dbp + dh * dh).log10(),
    })
}

/// Breakpoint model; the branch is chosen on d2D, both branches take d3D.
pub fn pl_breakpoint_composite(
    fc: Frequency,
    geom: &LinkGeometry,
    p: &BreakpointCompositeParams,
) -> Result<f64> {
    let b = breakpoint_branches(fc, geom, p)?;
    Ok(if geom.d2d() <= b.dbp { b.near } else { b.far })
}

pub fn pl_tr38901_umi_los(fc: Frequency, geom: &LinkGeometry) -> Result<f64> {
    pl_breakpoint_composite(fc, geom, &BreakpointCompositeParams::UMI)
}

pub fn pl_tr38901_uma_los(fc: Frequency, geom: &LinkGeometry) -> Result<f64> {
    pl_breakpoint_composite(fc, geom, &BreakpointCompositeParams::UMA)
}

/// |PL1 − PL2| at the d2D breakpoint, for the given heights.
pub fn breakpoint_mismatch(fc: Frequency, hbs: f64, hue: f64, p: &BreakpointCompositeParams) -> Result<f64> {
    let dbp = breakpoint_tr38901(fc, hbs, hue)?;
    let geom = LinkGeometry::new(dbp, hbs, hue)?;
    let b = breakpoint_branches(fc, &geom, p)?;
    Ok((b.near - b.far).abs())
}

/// METIS path loss offset `−1.38·log10(fc) + 3.34`.
pub fn metis_pl0(fc: Frequency) -> f64 {
    -1.38 * fc.ghz().log10() + 3.34
}

/// METIS UMi street-canyon LOS. Exponent 2.2 up to the METIS breakpoint and
/// 4.0 after it, anchored at the breakpoint value.
pub fn pl_metis_umi_los(fc: Frequency, d: f64, hbs: f64, hue: f64) -> Result<f64> {
    check_reference_distance(d)?;
    let dbp = breakpoint_metis(fc, hbs, hue)?;
    let near = |d: f64| 22.0 * d.log10() + 28.0 + 20.0 * fc.ghz().log10() + metis_pl0(fc);
    Ok(if d <= dbp {
        near(d)
    } else {
        40.0 * (d / dbp).log10() + near(dbp)
    })
}

/// UE-height term of the macro NLOS formula.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MacroUeTerm {
    /// `−(3.2·(log10(11.75·hUE))² − 4.97)`
    Quadratic,
    /// `−k·hUE`
    Linear(f64),
}

/// Raw NLOS formulas used below a LOS lower bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NlosFormula {
    /// `10α·log10(d3D) + β + 10γ·log10(fc) − ue_slope·(hUE − ue_ref)`
    Abg {
        abg: AbgParams,
        ue_slope: f64,
        ue_ref: f64,
    },
    /// Street-width / building-height macro formula with a leading constant.
    Macro { constant: f64, ue_term: MacroUeTerm },
}

impl NlosFormula {
    pub const TR38901_UMI: NlosFormula = NlosFormula::Abg {
        abg: AbgParams { alpha: 3.53, beta: 22.4, gamma: 2.13 },
        ue_slope: 0.3,
        ue_ref: 1.5,
    };
    pub const TR38901_UMA: NlosFormula = NlosFormula::Abg {
        abg: AbgParams { alpha: 3.908, beta: 13.54, gamma: 2.0 },
        ue_slope: 0.6,
        ue_ref: 1.5,
    };
    pub const TR38901_INH: NlosFormula = NlosFormula::Abg {
        abg: AbgParams { alpha: 3.83, beta: 17.30, gamma: 2.49 },
        ue_slope: 0.0,
        ue_ref: 0.0,
    };
    pub const METIS_UMI: NlosFormula = NlosFormula::Abg {
        abg: AbgParams { alpha: 3.67, beta: 23.15, gamma: 2.6 },
        ue_slope: 0.3,
        ue_ref: 0.0,
    };
    pub const MMMAGIC_INH: NlosFormula = NlosFormula::Abg {
        abg: AbgParams { alpha: 3.69, beta: 15.2, gamma: 2.68 },
        ue_slope: 0.0,
        ue_ref: 0.0,
    };
    pub const ITUR_RMA: NlosFormula = NlosFormula::Macro {
        constant: 161.04,
        ue_term: MacroUeTerm::Quadratic,
    };
    pub const METIS_UMA: NlosFormula = NlosFormula::Macro {
        constant: 161.94,
        ue_term: MacroUeTerm::Linear(0.6),
    };

    pub fn evaluate(&self, fc: Frequency, geom: &LinkGeometry, env: Option<&EnvironmentConstants>) -> Result<f64> {
        match *self {
            NlosFormula::Abg { abg, ue_slope, ue_ref } => {
                Ok(super::pl_abg(fc, geom.d3d(), &abg)? - ue_slope * (geom.hue() - ue_ref))
            }
            NlosFormula::Macro { constant, ue_term } => {
                let env = env.ok_or_else(|| {
                    Error::domain("macro NLOS formula needs street width and building height")
                })?;
                macro_nlos_raw(constant, ue_term, fc, geom.d3d(), env, geom.hbs(), geom.hue())
            }
        }
    }
}

/// Nine-coefficient macro NLOS formula with street width `W` and building
/// height `h`.
pub fn macro_nlos_raw(
    constant: f64,
    ue_term: MacroUeTerm,
    fc: Frequency,
    d3d: f64,
    env: &EnvironmentConstants,
    hbs: f64,
    hue: f64,
) -> Result<f64> {
    check_reference_distance(d3d)?;
    let (w, h) = (env.street_width, env.building_height);
    if !(w > 0.0) || !(h > 0.0) || !(hbs > 0.0) || !(hue > 0.0) {
        return Err(Error::domain(format!(
            "macro NLOS needs positive W, h, hBS, hUE; got W={w} h={h} hBS={hbs} hUE={hue}"
        )));
    }
    let log_hbs = hbs.log10();
    let ue = match ue_term {
        MacroUeTerm::Quadratic => 3.2 * (11.75 * hue).log10().powi(2) - 4.97,
        MacroUeTerm::Linear(k) => k * hue,
    };
    Ok(constant - 7.1 * w.log10() + 7.5 * h.log10()
        - (24.37 - 3.7 * (h / hbs).powi(2)) * log_hbs
        + (43.42 - 3.1 * log_hbs) * (d3d.log10() - 3.0)
        + 20.0 * fc.ghz().log10()
        - ue)
}

/// `max(LOS, NLOS)`: the NLOS formula is never allowed below the LOS loss.
pub fn pl_max_lower_bounded_nlos(
    fc: Frequency,
    geom: &LinkGeometry,
    los: &PathLossModel,
    nlos: &NlosFormula,
    env: Option<&EnvironmentConstants>,
) -> Result<f64> {
    let l = los.evaluate(fc, geom, env)?;
    let n = nlos.evaluate(fc, geom, env)?;
    Ok(l.max(n))
}

/// METIS UMi NLOS, lower-bounded by METIS UMi LOS.
pub fn pl_metis_umi_nlos(fc: Frequency, geom: &LinkGeometry) -> Result<f64> {
    pl_max_lower_bounded_nlos(fc, geom, &PathLossModel::MetisUmiLos, &NlosFormula::METIS_UMI, None)
}

/// METIS UMa NLOS, lower-bounded by the UMa breakpoint LOS model.
pub fn pl_metis_uma_nlos(fc: Frequency, geom: &LinkGeometry, env: &EnvironmentConstants) -> Result<f64> {
    pl_max_lower_bounded_nlos(
        fc,
        geom,
        &PathLossModel::Breakpoint(BreakpointCompositeParams::UMA),
        &NlosFormula::METIS_UMA,
        Some(env),
    )
}

/// ITU-R rural macro LOS. The branch is chosen on d3D so the curve is
/// continuous at the breakpoint.
pub fn pl_itur_rma_los(fc: Frequency, d3d: f64, env: &EnvironmentConstants, hbs: f64, hue: f64) -> Result<f64> {
    check_reference_distance(d3d)?;
    let h = env.building_height;
    if !(h > 0.0) {
        return Err(Error::domain(format!("building height must be positive, got {h}")));
    }
    let dbp = breakpoint_itur_rma(fc, hbs, hue)?;
    let near = |d: f64| {
        20.0 * (40.0 * PI * d * fc.ghz() / 3.0).log10()
            + (0.03 * h.powf(1.72)).min(10.0) * d.log10()
            - (0.044 * h.powf(1.72)).min(14.77)
            + 0.002 * h.log10() * d
    };
    Ok(if d3d <= dbp {
        near(d3d)
    } else {
        near(dbp) + 40.0 * (d3d / dbp).log10()
    })
}

/// ITU-R rural macro NLOS, lower-bounded by the rural LOS model.
pub fn pl_itur_rma_nlos(fc: Frequency, d3d: f64, env: &EnvironmentConstants, hbs: f64, hue: f64) -> Result<f64> {
    let los = pl_itur_rma_los(fc, d3d, env, hbs, hue)?;
    let nlos = macro_nlos_raw(161.04, MacroUeTerm::Quadratic, fc, d3d, env, hbs, hue)?;
    Ok(los.max(nlos))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdLink {
    /// Station to station, same height; uses d2D.
    StaSta,
    /// Station to access point; uses d3D.
    StaAp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdCondition {
    Los,
    Nlos,
}

/// IEEE 802.11ad 60 GHz indoor rows. `d` is d2D for STA-STA links and d3D
/// for STA-AP links.
pub fn pl_80211ad(fc: Frequency, d: f64, link: AdLink, condition: AdCondition) -> Result<f64> {
    check_reference_distance(d)?;
    let (a, slope) = match (condition, link) {
        (AdCondition::Los, _) => (32.5, 20.0),
        (AdCondition::Nlos, AdLink::StaSta) => (51.5, 6.0),
        (AdCondition::Nlos, AdLink::StaAp) => (45.5, 14.0),
    };
    Ok(a + 20.0 * fc.ghz().log10() + slope * d.log10())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathloss::fspl_1m;
    use approx::assert_abs_diff_eq;

    fn ci_equivalent(fc: Frequency, d3d: f64, n: f64) -> Result<f64> {
        Ok(fspl_1m(fc) + 10.0 * n * d3d.log10())
    }

    fn ghz(v: f64) -> Frequency {
        Frequency::from_ghz(v).unwrap()
    }

    #[test]
    fn tr38901_breakpoints() {
        assert_abs_diff_eq!(breakpoint_tr38901(ghz(28.0), 10.0, 1.5).unwrap(), 1680.0, epsilon = 1e-9);
        let smallest = breakpoint_tr38901(ghz(28.0), 4.0, 1.5).unwrap();
        assert_abs_diff_eq!(smallest, 560.0, epsilon = 1e-9);
        assert!(smallest > 500.0);
        assert_abs_diff_eq!(breakpoint_tr38901(ghz(1.0), 2.0, 2.0).unwrap(), 13.333, epsilon = 1e-3);
        assert!(breakpoint_tr38901(ghz(28.0), 1.0, 1.5).is_err());
        assert!(breakpoint_tr38901(ghz(28.0), 10.0, 0.9).is_err());
    }

    #[test]
    fn metis_breakpoints() {
        assert_abs_diff_eq!(breakpoint_metis(ghz(28.0), 10.0, 1.5).unwrap(), 157.731, epsilon = 1e-3);
        assert_abs_diff_eq!(breakpoint_metis(ghz(1.0), 10.0, 1.5).unwrap(), 52.2, epsilon = 1e-9);
        assert_abs_diff_eq!(breakpoint_metis(ghz(5.0), 10.0, 1.5).unwrap(), 89.05, epsilon = 0.01);
    }

    #[test]
    fn rma_breakpoint_passes_10km_at_9_1ghz() {
        let dbp = breakpoint_itur_rma(ghz(9.1), 35.0, 1.5).unwrap();
        assert_abs_diff_eq!(dbp, 10_006.0, epsilon = 10.0);
        assert!(dbp > 10_000.0);
    }

    #[test]
    fn tr38901_los_examples() {
        let uma = LinkGeometry::from_d3d(100.0, 25.0, 1.5).unwrap();
        assert_abs_diff_eq!(pl_tr38901_uma_los(ghz(28.0), &uma).unwrap(), 100.943, epsilon = 1e-3);
        let umi = LinkGeometry::from_d3d(100.0, 10.0, 1.5).unwrap();
        assert_abs_diff_eq!(pl_tr38901_umi_los(ghz(28.0), &umi).unwrap(), 103.343, epsilon = 1e-3);
    }

    #[test]
    fn tr38901_branches_meet_at_breakpoint() {
        // 40·log10(d3D) − K·log10(d3D²) at d2D = d'BP reduces to the near
        // slope, so the printed correction term makes the branches meet.
        for fc in [0.8, 3.5, 28.0, 73.0] {
            for hue in [1.5, 5.0, 22.5] {
                let umi = breakpoint_mismatch(ghz(fc), 10.0, hue, &BreakpointCompositeParams::UMI).unwrap();
                let uma = breakpoint_mismatch(ghz(fc), 25.0, hue, &BreakpointCompositeParams::UMA).unwrap();
                assert!(umi < 0.35 && uma < 0.35);
                assert!(umi < 1e-9 && uma < 1e-9, "umi {umi} uma {uma}");
            }
        }
    }

    #[test]
    fn umi_los_below_breakpoint_is_ci_2_1() {
        let f = ghz(28.0);
        let mut d2d = 10.0;
        while d2d < 1680.0 {
            let g = LinkGeometry::new(d2d, 10.0, 1.5).unwrap();
            let a = pl_tr38901_umi_los(f, &g).unwrap();
            let b = ci_equivalent(f, g.d3d(), 2.1).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
            d2d += 7.3;
        }
    }

    #[test]
    fn lower_bounded_nlos_examples() {
        let f = ghz(28.0);
        let uma = LinkGeometry::from_d3d(100.0, 25.0, 1.5).unwrap();
        let v = pl_max_lower_bounded_nlos(
            f,
            &uma,
            &PathLossModel::Breakpoint(BreakpointCompositeParams::UMA),
            &NlosFormula::TR38901_UMA,
            None,
        )
        .unwrap();
        assert_abs_diff_eq!(v, 120.643, epsilon = 1e-3);

        let umi = LinkGeometry::from_d3d(100.0, 10.0, 1.5).unwrap();
        let v = pl_max_lower_bounded_nlos(
            f,
            &umi,
            &PathLossModel::Breakpoint(BreakpointCompositeParams::UMI),
            &NlosFormula::TR38901_UMI,
            None,
        )
        .unwrap();
        assert_abs_diff_eq!(v, 123.824, epsilon = 1e-3);
    }

    #[test]
    fn metis_umi_examples() {
        assert_abs_diff_eq!(pl_metis_umi_los(ghz(5.0), 50.0, 10.0, 1.5).unwrap(), 81.73, epsilon = 0.01);
        assert_abs_diff_eq!(metis_pl0(ghz(28.0)), 1.343, epsilon = 1e-3);
        for fc in [0.8, 5.0, 28.0, 60.0] {
            let dbp = breakpoint_metis(ghz(fc), 10.0, 1.5).unwrap();
            let a = pl_metis_umi_los(ghz(fc), dbp, 10.0, 1.5).unwrap();
            let b = pl_metis_umi_los(ghz(fc), dbp * (1.0 + 1e-12), 10.0, 1.5).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }

        let g = LinkGeometry::from_d3d(50.0, 10.0, 1.5).unwrap();
        assert_abs_diff_eq!(pl_metis_umi_nlos(ghz(5.0), &g).unwrap(), 103.23, epsilon = 0.01);

    }

    #[test]
    fn metis_umi_ue_height_term_is_linear() {
        let f = ghz(5.0);
        let env = None;
        let a = LinkGeometry::from_d3d(300.0, 10.0, 0.001).unwrap();
        let b = LinkGeometry::from_d3d(300.0, 10.0, 22.5).unwrap();
        let d = NlosFormula::METIS_UMI.evaluate(f, &a, env).unwrap() - NlosFormula::METIS_UMI.evaluate(f, &b, env).unwrap();
        assert_abs_diff_eq!(d, 0.3 * (22.5 - 0.001), epsilon = 1e-9);
    }

    /// Independent term-by-term evaluation of the METIS UMa NLOS row at
    /// (5 GHz, 1000 m, hBS 25 m, hUE 1.5 m, w = h = 20 m).
    #[test]
    fn metis_uma_nlos_hand_value() {
        let log = f64::log10;
        let expected = 161.94 - 7.1 * log(20.0) + 7.5 * log(20.0)
            - (24.37 - 3.7 * (20.0f64 / 25.0).powi(2)) * log(25.0)
            + (43.42 - 3.1 * log(25.0)) * (log(1000.0) - 3.0)
            + 20.0 * log(5.0)
            - 0.6 * 1.5;
        assert_abs_diff_eq!(expected, 144.782, epsilon = 1e-3);
        let g = LinkGeometry::from_d3d(1000.0, 25.0, 1.5).unwrap();
        let v = pl_metis_uma_nlos(ghz(5.0), &g, &EnvironmentConstants::METIS_UMA_DEFAULT).unwrap();
        assert_abs_diff_eq!(v, 144.782, epsilon = 1e-3);
    }

    #[test]
    fn itur_rma_los_example() {
        let env = EnvironmentConstants::RMA_DEFAULT;
        assert_abs_diff_eq!(pl_itur_rma_los(ghz(24.0), 500.0, &env, 35.0, 1.5).unwrap(), 115.31, epsilon = 0.01);
    }

    #[test]
    fn itur_rma_los_single_slope_above_9_1ghz() {
        let env = EnvironmentConstants::RMA_DEFAULT;
        let h: f64 = 5.0;
        for fc in [9.1, 24.0, 73.0] {
            let mut d = 11.0;
            while d < 10_000.0 {
                let v = pl_itur_rma_los(ghz(fc), d, &env, 35.0, 1.5).unwrap();
                let near = 20.0 * (40.0 * PI * d * fc / 3.0).log10()
                    + (0.03 * h.powf(1.72)).min(10.0) * d.log10()
                    - (0.044 * h.powf(1.72)).min(14.77)
                    + 0.002 * h.log10() * d;
                assert_eq!(v, near);
                d *= 1.5;
            }
        }
    }

    #[test]
    fn itur_rma_los_is_continuous_below_9_1ghz() {
        let env = EnvironmentConstants::RMA_DEFAULT;
        let dbp = breakpoint_itur_rma(ghz(3.0), 35.0, 1.5).unwrap();
        let a = pl_itur_rma_los(ghz(3.0), dbp, &env, 35.0, 1.5).unwrap();
        let b = pl_itur_rma_los(ghz(3.0), dbp * (1.0 + 1e-12), &env, 35.0, 1.5).unwrap();
        assert_abs_diff_eq!(a, b, epsilon = 1e-9);
    }

    #[test]
    fn itur_rma_nlos_examples() {
        let env = EnvironmentConstants::RMA_DEFAULT;
        assert_abs_diff_eq!(pl_itur_rma_nlos(ghz(24.0), 1000.0, &env, 35.0, 1.5).unwrap(), 147.14, epsilon = 0.01);
        // 3.2·(log10(11.75·hUE))² = 4.97 zeroes the UE term.
        let hue = 10f64.powf((4.97f64 / 3.2).sqrt()) / 11.75;
        let with = macro_nlos_raw(161.04, MacroUeTerm::Quadratic, ghz(24.0), 1000.0, &env, 35.0, hue).unwrap();
        let without = macro_nlos_raw(161.04, MacroUeTerm::Linear(0.0), ghz(24.0), 1000.0, &env, 35.0, hue).unwrap();
        assert_abs_diff_eq!(with, without, epsilon = 1e-12);
        assert!(
            pl_itur_rma_nlos(ghz(24.0), 2000.0, &env, 35.0, 1.5).unwrap()
                > pl_itur_rma_nlos(ghz(24.0), 1000.0, &env, 35.0, 1.5).unwrap()
        );
    }

    #[test]
    fn ieee_80211ad_examples() {
        let f = ghz(60.0);
        assert_abs_diff_eq!(pl_80211ad(f, 10.0, AdLink::StaSta, AdCondition::Los).unwrap(), 88.06, epsilon = 0.01);
        assert_abs_diff_eq!(pl_80211ad(f, 1.0, AdLink::StaSta, AdCondition::Los).unwrap(), 68.06, epsilon = 0.01);
        assert_abs_diff_eq!(pl_80211ad(f, 10.0, AdLink::StaSta, AdCondition::Nlos).unwrap(), 93.06, epsilon = 0.01);
        assert_abs_diff_eq!(
            pl_80211ad(f, 10.0, AdLink::StaAp, AdCondition::Nlos).unwrap(),
            45.5 + 20.0 * 60f64.log10() + 14.0,
            epsilon = 1e-12
        );
    }
}
