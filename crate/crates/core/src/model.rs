//! Domain vocabulary shared by every model: carrier frequency, scenarios,
//! organizations and the [`ModelId`] key used to look models up in the
//! registry.
//!
//! Units are fixed crate-wide: frequencies in GHz, distances and heights in
//! meters, losses in dB.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Carrier frequency in GHz.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Frequency(f64);

impl Frequency {
    pub fn from_ghz(ghz: f64) -> Result<Self> {
        if !ghz.is_finite() || ghz <= 0.0 {
            return Err(Error::domain(format!(
                "carrier frequency must be finite and > 0 GHz, got {ghz}"
            )));
        }
        Ok(Frequency(ghz))
    }

    #[inline]
    pub fn ghz(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn hz(self) -> f64 {
        self.0 * 1e9
    }
}

impl TryFrom<f64> for Frequency {
    type Error = Error;

    fn try_from(ghz: f64) -> Result<Self> {
        Frequency::from_ghz(ghz)
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} GHz", self.0)
    }
}

macro_rules! token_enum {
    (
        $(#[$meta:meta])*
        pub enum $name:ident { $($variant:ident => $token:literal),+ $(,)? }
    ) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn token(self) -> &'static str {
                match self { $($name::$variant => $token),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.token())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                let lower = s.trim().to_ascii_lowercase();
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.token() == lower)
                    .ok_or_else(|| {
                        let known: Vec<_> = $name::ALL.iter().map(|v| v.token()).collect();
                        format!("unknown {} `{}` (expected one of: {})",
                            stringify!($name).to_ascii_lowercase(), s, known.join(", "))
                    })
            }
        }
    };
}

token_enum! {
    /// Body that published a model.
    pub enum Org {
        Tr38901 => "tr38901",
        FiveGcm => "5gcm",
        Metis => "metis",
        MmMagic => "mmmagic",
        ItuRM2135 => "itur",
        Nyu => "nyu",
        Ieee80211ad => "80211ad",
    }
}

token_enum! {
    pub enum Scenario {
        UMiStreetCanyon => "umi-street",
        UMiOpenSquare => "umi-square",
        UMa => "uma",
        InHMixedOffice => "inh-mixed",
        InHOpenOffice => "inh-open",
        InHShoppingMall => "inh-mall",
        RMa => "rma",
    }
}

token_enum! {
    pub enum Visibility {
        Los => "los",
        Nlos => "nlos",
        O2i => "o2i",
    }
}

token_enum! {
    /// Functional form of a registered model.
    ///
    /// Path loss families, the organization-specific composite formulas
    /// (`Standard`), the IEEE 802.11ad link types, LOS-probability forms and
    /// outdoor-to-indoor penetration variants all share this tag space.
    pub enum Family {
        Ci => "ci",
        Cif => "cif",
        Cih => "cih",
        Abg => "abg",
        DualCif => "dual-cif",
        DualAbg => "dual-abg",
        Standard => "standard",
        LogDistance2d => "ab",
        StaSta => "sta-sta",
        StaAp => "sta-ap",
        D1D2 => "d1d2",
        NyuSquared => "nyu-squared",
        Piecewise => "piecewise",
        Exponential => "exponential",
        LowLoss => "low-loss",
        HighLoss => "high-loss",
        Parametric => "parametric",
        Car => "car",
        CarMetalized => "car-metalized",
    }
}

impl Scenario {
    /// Default (BS, UE) antenna heights in meters.
    pub fn default_heights(self) -> (f64, f64) {
        match self {
            Scenario::UMiStreetCanyon | Scenario::UMiOpenSquare => (10.0, 1.5),
            Scenario::UMa => (25.0, 1.5),
            Scenario::InHMixedOffice | Scenario::InHOpenOffice | Scenario::InHShoppingMall => {
                (3.0, 1.0)
            }
            Scenario::RMa => (35.0, 1.5),
        }
    }

    pub fn is_indoor(self) -> bool {
        matches!(
            self,
            Scenario::InHMixedOffice | Scenario::InHOpenOffice | Scenario::InHShoppingMall
        )
    }
}

/// Registry key: (organization, scenario, visibility condition, family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelId {
    pub org: Org,
    pub scenario: Scenario,
    pub visibility: Visibility,
    pub family: Family,
}

impl ModelId {
    pub const fn new(org: Org, scenario: Scenario, visibility: Visibility, family: Family) -> Self {
        ModelId {
            org,
            scenario,
            visibility,
            family,
        }
    }
}

/// `org:scenario:visibility:family`, e.g. `5gcm:umi-street:nlos:abg`.
impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}:{}",
            self.org, self.scenario, self.visibility, self.family
        )
    }
}

impl FromStr for ModelId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [org, scenario, visibility, family] = parts.as_slice() else {
            return Err(format!(
                "model id `{s}` must have the form org:scenario:visibility:family"
            ));
        };
        Ok(ModelId {
            org: org.parse()?,
            scenario: scenario.parse()?,
            visibility: visibility.parse()?,
            family: family.parse()?,
        })
    }
}
