//! Every published model with its parameters, shadow-fading σ, validated
//! ranges and default geometry.

use std::sync::OnceLock;

use crate::applicability::{ApplicabilityRange, Interval};
use crate::error::{Error, Result};
use crate::geometry::EnvironmentConstants;
use crate::los_probability::{D1D2Params, InHPiecewiseParams, LosProbabilityModel};
use crate::model::{Family, ModelId, Org, Scenario, Visibility};
use crate::o2i::O2iVariant;
use crate::pathloss::{
    AbgParams, AdCondition, AdLink, BreakpointCompositeParams, CiParams, CifParams, CihParams,
    DualSlopeParams, NlosFormula, PathLossModel,
};

#[derive(Clone, Debug, PartialEq)]
pub enum EntryKind {
    PathLoss(PathLossModel),
    LosProbability {
        model: LosProbabilityModel,
        /// Indoor users are evaluated at d2D-out.
        indoor_rule: bool,
    },
    Penetration(O2iVariant),
}

impl EntryKind {
    pub fn name(&self) -> &'static str {
        match self {
            EntryKind::PathLoss(_) => "path loss",
            EntryKind::LosProbability { .. } => "LOS probability",
            EntryKind::Penetration(_) => "O2I penetration",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub id: ModelId,
    pub kind: EntryKind,
    pub sigma_db: Option<f64>,
    pub range: ApplicabilityRange,
    /// Default (hBS, hUE) in meters.
    pub heights: (f64, f64),
    pub env: Option<EnvironmentConstants>,
}

pub fn entries() -> &'static [Entry] {
    static REGISTRY: OnceLock<Vec<Entry>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn lookup(id: ModelId) -> Result<&'static Entry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or(Error::UnknownModel(id))
}

/// First registered entry for `(org, scenario, visibility)`, optionally
/// narrowed to a family.
pub fn find(
    org: Org,
    scenario: Scenario,
    visibility: Visibility,
    family: Option<Family>,
) -> Option<&'static Entry> {
    entries().iter().find(|e| {
        e.id.org == org
            && e.id.scenario == scenario
            && e.id.visibility == visibility
            && family.is_none_or(|f| e.id.family == f)
    })
}

struct Builder {
    out: Vec<Entry>,
}

/// Range shorthand used only while building the table.
#[derive(Default, Clone, Copy)]
struct R(ApplicabilityRange);

impl R {
    fn fc(mut self, i: Interval) -> Self {
        self.0.fc = Some(i);
        self
    }
    fn d2d(mut self, i: Interval) -> Self {
        self.0.d2d = Some(i);
        self
    }
    fn d3d(mut self, i: Interval) -> Self {
        self.0.d3d = Some(i);
        self
    }
    fn hbs(mut self, i: Interval) -> Self {
        self.0.hbs = Some(i);
        self
    }
    fn hue(mut self, i: Interval) -> Self {
        self.0.hue = Some(i);
        self
    }
    fn env(mut self, w: Interval, h: Interval) -> Self {
        self.0.street_width = Some(w);
        self.0.building_height = Some(h);
        self
    }
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        org: Org,
        scenario: Scenario,
        visibility: Visibility,
        family: Family,
        kind: EntryKind,
        sigma_db: Option<f64>,
        range: R,
        env: Option<EnvironmentConstants>,
    ) {
        let id = ModelId::new(org, scenario, visibility, family);
        debug_assert!(self.out.iter().all(|e| e.id != id), "duplicate {id}");
        let mut range = range.0;
        if matches!(kind, EntryKind::PathLoss(_)) && range.d3d.is_none() {
            range.d3d = Some(Interval::at_least(1.0));
        }
        self.out.push(Entry {
            id,
            kind,
            sigma_db,
            range,
            heights: scenario.default_heights(),
            env,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn pl(&mut self, org: Org, sc: Scenario, vis: Visibility, fam: Family, m: PathLossModel, sigma: f64, range: R) {
        self.push(org, sc, vis, fam, EntryKind::PathLoss(m), Some(sigma), range, None);
    }

    fn losp(&mut self, org: Org, sc: Scenario, fam: Family, model: LosProbabilityModel, indoor_rule: bool, range: R) {
        let kind = EntryKind::LosProbability { model, indoor_rule };
        self.push(org, sc, Visibility::Los, fam, kind, None, range, None);
    }

    fn o2i(&mut self, org: Org, sc: Scenario, fam: Family, v: O2iVariant, range: R) {
        let sigma = v.params().sigma_p;
        let sigma = (sigma > 0.0).then_some(sigma);
        self.push(org, sc, Visibility::O2i, fam, EntryKind::Penetration(v), sigma, range, None);
    }
}

const fn ci(n: f64) -> PathLossModel {
    PathLossModel::Ci(CiParams { n })
}

const fn abg(alpha: f64, beta: f64, gamma: f64) -> PathLossModel {
    PathLossModel::Abg(AbgParams { alpha, beta, gamma })
}

fn bounded(los: PathLossModel, nlos: NlosFormula) -> PathLossModel {
    PathLossModel::LowerBounded {
        los: Box::new(los),
        nlos,
    }
}

fn build() -> Vec<Entry> {
    use Family as F;
    use Org::*;
    use Scenario::*;
    use Visibility::{Los, Nlos};

    let mut b = Builder { out: Vec::new() };
    let mm = R::default().fc(Interval::open(6.0, 100.0));
    let tr = R::default().fc(Interval::open(0.5, 100.0));
    let tr_hue = Interval::closed(1.5, 22.5);
    // Breakpoint formulas need both heights above 1 m.
    let above_1m = Interval::above(1.0);

    // UMi street canyon.
    b.pl(FiveGcm, UMiStreetCanyon, Los, F::Ci, ci(2.1), 3.76, mm);
    b.pl(FiveGcm, UMiStreetCanyon, Nlos, F::Ci, ci(3.17), 8.09, mm);
    b.pl(FiveGcm, UMiStreetCanyon, Nlos, F::Abg, abg(3.53, 22.4, 2.13), 7.82, mm);
    let umi_los = PathLossModel::Breakpoint(BreakpointCompositeParams::UMI);
    b.pl(
        Tr38901,
        UMiStreetCanyon,
        Los,
        F::Standard,
        umi_los.clone(),
        4.0,
        tr.d2d(Interval::closed(10.0, 5000.0)).hue(tr_hue).hbs(above_1m),
    );
    let tr_nlos = tr.d2d(Interval::open(10.0, 5000.0)).hue(tr_hue).hbs(above_1m);
    b.pl(
        Tr38901,
        UMiStreetCanyon,
        Nlos,
        F::Standard,
        bounded(umi_los, NlosFormula::TR38901_UMI),
        7.82,
        tr_nlos,
    );
    b.pl(Tr38901, UMiStreetCanyon, Nlos, F::Ci, ci(3.19), 8.2, tr_nlos);
    b.pl(
        Metis,
        UMiStreetCanyon,
        Los,
        F::Standard,
        PathLossModel::MetisUmiLos,
        3.1,
        R::default()
            .fc(Interval::closed(0.8, 60.0))
            .d3d(Interval::left_open(10.0, 500.0))
            .hbs(above_1m)
            .hue(above_1m),
    );
    b.pl(
        Metis,
        UMiStreetCanyon,
        Nlos,
        F::Standard,
        bounded(PathLossModel::MetisUmiLos, NlosFormula::METIS_UMI),
        4.0,
        R::default()
            .fc(Interval::closed(0.45, 6.0))
            .d2d(Interval::open(10.0, 2000.0))
            .hue(tr_hue)
            .hbs(above_1m),
    );
    b.pl(MmMagic, UMiStreetCanyon, Los, F::Abg, abg(1.92, 32.9, 2.08), 2.0, mm);
    b.pl(MmMagic, UMiStreetCanyon, Nlos, F::Abg, abg(4.5, 31.0, 2.0), 7.82, mm);

    // UMi open square.
    b.pl(FiveGcm, UMiOpenSquare, Los, F::Ci, ci(1.85), 4.2, mm);
    b.pl(FiveGcm, UMiOpenSquare, Nlos, F::Ci, ci(2.89), 7.1, mm);
    b.pl(FiveGcm, UMiOpenSquare, Nlos, F::Abg, abg(4.14, 3.66, 2.43), 7.0, mm);

    // UMa.
    b.pl(FiveGcm, UMa, Los, F::Ci, ci(2.0), 4.1, mm);
    b.pl(FiveGcm, UMa, Nlos, F::Ci, ci(3.0), 6.8, mm);
    b.pl(FiveGcm, UMa, Nlos, F::Abg, abg(3.4, 19.2, 2.3), 6.5, mm);
    let uma_los = PathLossModel::Breakpoint(BreakpointCompositeParams::UMA);
    b.pl(Tr38901, UMa, Los, F::Standard, uma_los.clone(), 4.0, tr.hue(tr_hue).hbs(above_1m));
    let tr_nlos = tr.d2d(Interval::open(10.0, 5000.0)).hue(tr_hue).hbs(above_1m);
    b.pl(
        Tr38901,
        UMa,
        Nlos,
        F::Standard,
        bounded(uma_los.clone(), NlosFormula::TR38901_UMA),
        6.0,
        tr_nlos,
    );
    b.pl(Tr38901, UMa, Nlos, F::Ci, ci(3.0), 7.8, tr_nlos);
    let metis_uma = R::default()
        .fc(Interval::open(0.45, 6.0))
        .d2d(Interval::open(10.0, 5000.0))
        .hue(tr_hue)
        .hbs(above_1m);
    b.pl(Metis, UMa, Los, F::Standard, uma_los.clone(), 4.0, metis_uma);
    b.push(
        Metis,
        UMa,
        Nlos,
        F::Standard,
        EntryKind::PathLoss(bounded(uma_los, NlosFormula::METIS_UMA)),
        Some(6.0),
        metis_uma.env(Interval::above(0.0), Interval::above(0.0)),
        Some(EnvironmentConstants::METIS_UMA_DEFAULT),
    );

    // 5GCM indoor office rows apply to both office layouts.
    for sc in [InHMixedOffice, InHOpenOffice] {
        b.pl(FiveGcm, sc, Los, F::Ci, ci(1.73), 3.02, mm);
        b.pl(
            FiveGcm,
            sc,
            Nlos,
            F::Cif,
            PathLossModel::Cif(CifParams { n: 3.19, b: 0.06, f0: 24.2 }),
            8.29,
            mm,
        );
        b.pl(FiveGcm, sc, Nlos, F::Abg, abg(3.83, 17.30, 2.49), 8.03, mm);
        b.pl(
            FiveGcm,
            sc,
            Nlos,
            F::DualCif,
            PathLossModel::DualSlope(DualSlopeParams::Cif {
                n1: 2.51,
                b1: 0.06,
                n2: 4.25,
                b2: 0.04,
                f0: 24.1,
                dbp: 7.8,
            }),
            7.65,
            mm,
        );
        b.pl(
            FiveGcm,
            sc,
            Nlos,
            F::DualAbg,
            PathLossModel::DualSlope(DualSlopeParams::Abg {
                alpha1: 1.7,
                beta1: 33.0,
                gamma: 2.49,
                alpha2: 4.17,
                dbp: 6.9,
            }),
            7.78,
            mm,
        );
    }
    b.pl(FiveGcm, InHShoppingMall, Los, F::Ci, ci(1.73), 2.01, mm);
    b.pl(
        FiveGcm,
        InHShoppingMall,
        Nlos,
        F::Cif,
        PathLossModel::Cif(CifParams { n: 2.59, b: 0.01, f0: 39.5 }),
        7.40,
        mm,
    );
    b.pl(FiveGcm, InHShoppingMall, Nlos, F::Abg, abg(3.21, 18.09, 2.24), 6.97, mm);
    b.pl(
        FiveGcm,
        InHShoppingMall,
        Nlos,
        F::DualCif,
        PathLossModel::DualSlope(DualSlopeParams::Cif {
            n1: 2.43,
            b1: -0.01,
            n2: 8.36,
            b2: 0.39,
            f0: 39.5,
            dbp: 110.0,
        }),
        6.26,
        mm,
    );
    b.pl(
        FiveGcm,
        InHShoppingMall,
        Nlos,
        F::DualAbg,
        PathLossModel::DualSlope(DualSlopeParams::Abg {
            alpha1: 2.9,
            beta1: 22.17,
            gamma: 2.24,
            alpha2: 11.47,
            dbp: 147.0,
        }),
        6.36,
        mm,
    );

    // Other indoor models. TR 38.901 and 802.11ad rows are office rows.
    for sc in [InHMixedOffice, InHOpenOffice] {
        let inh_los = ci(1.73);
        b.pl(Tr38901, sc, Los, F::Ci, inh_los.clone(), 3.0, tr.d3d(Interval::open(1.0, 100.0)));
        let nlos_range = tr.d3d(Interval::open(1.0, 86.0));
        b.pl(
            Tr38901,
            sc,
            Nlos,
            F::Standard,
            bounded(inh_los, NlosFormula::TR38901_INH),
            8.03,
            nlos_range,
        );
        b.pl(Tr38901, sc, Nlos, F::Ci, ci(3.19), 8.29, nlos_range);

        let ad = R::default().fc(Interval::open(57.0, 63.0));
        let ad_2d = ad.d2d(Interval::at_least(1.0));
        let m = |link, cond| PathLossModel::Ieee80211ad(link, cond);
        b.pl(Ieee80211ad, sc, Los, F::StaSta, m(AdLink::StaSta, AdCondition::Los), 0.0, ad_2d);
        b.pl(Ieee80211ad, sc, Los, F::StaAp, m(AdLink::StaAp, AdCondition::Los), 0.0, ad);
        b.pl(Ieee80211ad, sc, Nlos, F::StaSta, m(AdLink::StaSta, AdCondition::Nlos), 3.3, ad_2d);
        b.pl(Ieee80211ad, sc, Nlos, F::StaAp, m(AdLink::StaAp, AdCondition::Nlos), 3.0, ad);

        let magic_los = abg(1.38, 33.6, 2.03);
        b.pl(MmMagic, sc, Los, F::Abg, magic_los.clone(), 1.18, mm);
        b.pl(MmMagic, sc, Nlos, F::Standard, bounded(magic_los, NlosFormula::MMMAGIC_INH), 8.03, mm);
    }
    let mall = R::default().fc(Interval::exactly(63.0));
    b.pl(
        Metis,
        InHShoppingMall,
        Los,
        F::LogDistance2d,
        PathLossModel::LogDistance2d { a: 18.4, b: 68.8 },
        2.0,
        mall.d2d(Interval::open(1.5, 13.4)),
    );
    b.pl(
        Metis,
        InHShoppingMall,
        Nlos,
        F::LogDistance2d,
        PathLossModel::LogDistance2d { a: 3.59, b: 94.3 },
        2.0,
        mall.d2d(Interval::open(4.0, 16.1)),
    );

    // RMa. The rural macro rows publish no σ in the compiled tables.
    let rma_common = R::default()
        .hbs(Interval::open(10.0, 150.0))
        .hue(Interval::open(1.0, 10.0))
        .env(Interval::closed(5.0, 50.0), Interval::closed(5.0, 50.0));
    for (org, fc) in [(ItuRM2135, None), (Tr38901, Some(Interval::left_open(0.5, 30.0)))] {
        let mut los = rma_common.d2d(Interval::open(10.0, 10_000.0));
        let mut nlos = rma_common.d2d(Interval::open(10.0, 5000.0));
        los.0.fc = fc;
        nlos.0.fc = fc;
        let env = Some(EnvironmentConstants::RMA_DEFAULT);
        b.push(org, RMa, Los, F::Standard, EntryKind::PathLoss(PathLossModel::ItuRmaLos), None, los, env);
        b.push(
            org,
            RMa,
            Nlos,
            F::Standard,
            EntryKind::PathLoss(bounded(PathLossModel::ItuRmaLos, NlosFormula::ITUR_RMA)),
            None,
            nlos,
            env,
        );
    }
    let cih = R::default().hbs(Interval::closed(10.0, 150.0));
    b.pl(
        Nyu,
        RMa,
        Los,
        F::Cih,
        PathLossModel::Cih(CihParams { n: 2.31, btx: -0.03, hb0: 35.0 }),
        1.7,
        cih,
    );
    b.pl(
        Nyu,
        RMa,
        Nlos,
        F::Cih,
        PathLossModel::Cih(CihParams { n: 3.07, btx: -0.049, hb0: 35.0 }),
        6.7,
        cih,
    );

    // LOS probability.
    let any = R::default();
    let d1d2 = |d1, d2| LosProbabilityModel::D1D2(D1D2Params::new(d1, d2));
    b.losp(Tr38901, UMiStreetCanyon, F::D1D2, d1d2(18.0, 36.0), true, any);
    b.losp(FiveGcm, UMiStreetCanyon, F::D1D2, d1d2(20.0, 39.0), false, any);
    b.losp(
        FiveGcm,
        UMiStreetCanyon,
        F::NyuSquared,
        LosProbabilityModel::D1D2(D1D2Params::nyu_squared(22.0, 100.0)),
        false,
        any,
    );
    b.losp(Metis, UMiStreetCanyon, F::D1D2, d1d2(18.0, 36.0), true, any.d2d(Interval::at_least(10.0)));
    b.losp(MmMagic, UMiStreetCanyon, F::D1D2, d1d2(20.0, 39.0), true, any);

    // C(d2D, hUE) is defined up to 23 m.
    let uma = any.hue(Interval::closed(0.0, 23.0));
    let height = |p| LosProbabilityModel::UMaHeight(p);
    b.losp(Tr38901, UMa, F::D1D2, height(D1D2Params::new(18.0, 63.0)), true, uma);
    b.losp(FiveGcm, UMa, F::D1D2, height(D1D2Params::new(20.0, 66.0)), false, uma);
    b.losp(FiveGcm, UMa, F::NyuSquared, height(D1D2Params::nyu_squared(20.0, 160.0)), false, uma);
    b.losp(Metis, UMa, F::D1D2, height(D1D2Params::new(18.0, 63.0)), true, uma);

    let mixed = LosProbabilityModel::InHPiecewise(InHPiecewiseParams::MIXED_OFFICE);
    b.losp(Tr38901, InHMixedOffice, F::Piecewise, mixed, false, any);
    b.losp(
        Tr38901,
        InHOpenOffice,
        F::Piecewise,
        LosProbabilityModel::InHPiecewise(InHPiecewiseParams::OPEN_OFFICE),
        false,
        any,
    );
    b.losp(FiveGcm, InHMixedOffice, F::Piecewise, mixed, false, any);
    b.losp(MmMagic, InHMixedOffice, F::Piecewise, mixed, false, any);

    b.losp(Tr38901, RMa, F::Exponential, LosProbabilityModel::RMaExponential, false, any);
    b.losp(ItuRM2135, RMa, F::Exponential, LosProbabilityModel::RMaExponential, false, any);

    // O2I penetration.
    for sc in [UMiStreetCanyon, UMa] {
        b.o2i(Tr38901, sc, F::LowLoss, O2iVariant::Tr38901Low, any);
        b.o2i(Tr38901, sc, F::HighLoss, O2iVariant::Tr38901High, any);
        b.o2i(FiveGcm, sc, F::LowLoss, O2iVariant::FiveGcmLow, any);
        b.o2i(FiveGcm, sc, F::HighLoss, O2iVariant::FiveGcmHigh, any);
    }
    b.o2i(Tr38901, RMa, F::LowLoss, O2iVariant::Tr38901Low, any);
    b.o2i(MmMagic, UMiStreetCanyon, F::Parametric, O2iVariant::MmMagic, any);
    for sc in [UMiStreetCanyon, UMa, RMa] {
        b.o2i(Tr38901, sc, F::Car, O2iVariant::Car, any);
        b.o2i(Tr38901, sc, F::CarMetalized, O2iVariant::CarMetalized, any.fc(Interval::closed(0.6, 60.0)));
    }

    b.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LinkGeometry;
    use crate::model::Frequency;
    use crate::pathloss::mean_path_loss;
    use approx::assert_abs_diff_eq;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let mut seen = HashSet::new();
        for e in entries() {
            assert!(seen.insert(e.id), "duplicate {}", e.id);
        }
    }

    #[test]
    fn ranges_are_well_formed() {
        for e in entries() {
            assert!(e.range.is_well_formed(), "{}", e.id);
            if let Some(s) = e.sigma_db {
                assert!(s >= 0.0);
            }
        }
    }

    #[test]
    fn ids_round_trip_through_text() {
        for e in entries() {
            let parsed: ModelId = e.id.to_string().parse().unwrap();
            assert_eq!(parsed, e.id);
            assert_eq!(lookup(parsed).unwrap().id, e.id);
        }
    }

    #[test]
    fn mmmagic_uma_los_probability_is_absent() {
        assert!(find(Org::MmMagic, Scenario::UMa, Visibility::Los, None).is_none());
    }

    #[test]
    fn dispatcher_examples() {
        let f = Frequency::from_ghz(28.0).unwrap();
        let id = ModelId::new(Org::FiveGcm, Scenario::UMiOpenSquare, Visibility::Los, Family::Ci);
        let g = LinkGeometry::from_d3d(100.0, 10.0, 1.5).unwrap();
        assert_abs_diff_eq!(mean_path_loss(id, f, &g, None).unwrap(), 98.343, epsilon = 1e-3);

        let id = ModelId::new(Org::Tr38901, Scenario::InHMixedOffice, Visibility::Los, Family::Ci);
        let g = LinkGeometry::from_d3d(50.0, 3.0, 1.0).unwrap();
        assert_abs_diff_eq!(mean_path_loss(id, f, &g, None).unwrap(), 90.74, epsilon = 0.01);

        let id = ModelId::new(Org::Metis, Scenario::InHShoppingMall, Visibility::Los, Family::LogDistance2d);
        let g = LinkGeometry::new(10.0, 2.0, 2.0).unwrap();
        let f63 = Frequency::from_ghz(63.0).unwrap();
        assert_abs_diff_eq!(mean_path_loss(id, f63, &g, None).unwrap(), 87.2, epsilon = 1e-9);
    }

    #[test]
    fn metis_uma_nlos_uses_default_street_constants() {
        let id = ModelId::new(Org::Metis, Scenario::UMa, Visibility::Nlos, Family::Standard);
        let g = LinkGeometry::from_d3d(1000.0, 25.0, 1.5).unwrap();
        let f = Frequency::from_ghz(5.0).unwrap();
        assert_abs_diff_eq!(mean_path_loss(id, f, &g, None).unwrap(), 144.782, epsilon = 1e-3);
    }

    #[test]
    fn path_loss_on_los_probability_entry_is_wrong_kind() {
        let id = ModelId::new(Org::Tr38901, Scenario::UMa, Visibility::Los, Family::D1D2);
        let g = LinkGeometry::new(100.0, 25.0, 1.5).unwrap();
        let f = Frequency::from_ghz(28.0).unwrap();
        assert!(matches!(mean_path_loss(id, f, &g, None), Err(Error::WrongKind { .. })));
    }

    mod properties {
        use super::*;
        use crate::applicability::Interval;
        use proptest::prelude::*;

        /// Maps `t ∈ [0, 1]` into the interval, or into `[lo, hi]` when the
        /// axis is unconstrained or unbounded above.
        fn pick(i: Option<Interval>, lo: f64, hi: f64, t: f64) -> f64 {
            let (a, b) = match i {
                Some(i) => (i.min.max(lo), if i.max.is_finite() { i.max } else { hi }),
                None => (lo, hi),
            };
            (a.ln() + (b.ln() - a.ln()) * t).exp()
        }

        proptest! {
            #[test]
            fn applicable_inputs_never_error(k in 0usize..1000, tf in 0.0f64..1.0, td in 0.0f64..1.0) {
                let paths: Vec<_> = entries().iter().filter(|e| matches!(e.kind, EntryKind::PathLoss(_))).collect();
                let e = paths[k % paths.len()];
                let (hbs, hue) = e.heights;
                let fc = Frequency::from_ghz(pick(e.range.fc, 0.5, 100.0, tf)).unwrap();
                let g = if e.range.d2d.is_some() {
                    LinkGeometry::new(pick(e.range.d2d, 1.0, 10_000.0, td), hbs, hue).unwrap()
                } else {
                    let lo = (hbs - hue).abs().max(1.0);
                    LinkGeometry::from_d3d(pick(e.range.d3d, lo, 10_000.0, td), hbs, hue).unwrap()
                };
                if e.range.check(fc, &g, e.env.as_ref()).is_empty() {
                    let v = mean_path_loss(e.id, fc, &g, None);
                    prop_assert!(v.as_ref().is_ok_and(|v| v.is_finite()), "{} at {fc}, {g:?}: {v:?}", e.id);
                }
            }
        }
    }
}
