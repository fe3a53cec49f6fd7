//! Large-scale millimeter-wave channel models.
//!
//! LOS probability, mean path loss, outdoor-to-indoor penetration, shadow
//! fading and spatially consistent LOS/shadowing maps for the UMi, UMa, InH
//! and RMa scenarios, plus least-squares fitting of the generic path loss
//! families to measurements.

// `!(x > 0.0)` is used on purpose so NaN lands on the rejecting side.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod applicability;
pub mod cli;
pub mod error;
pub mod fitting;
pub mod geometry;
pub mod los_probability;
pub mod model;
pub mod o2i;
pub mod pathloss;
pub mod registry;
pub mod stochastic;

pub use applicability::{check_applicability, ApplicabilityRange, Interval, Mode, Violation};
pub use error::{Error, Result};
pub use geometry::{derive_d3d, EnvironmentConstants, LinkGeometry};
pub use los_probability::los_probability;
pub use model::{Family, Frequency, ModelId, Org, Scenario, Visibility};
pub use pathloss::{evaluate, mean_path_loss};
