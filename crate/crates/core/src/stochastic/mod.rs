//! Shadow fading and spatially consistent LOS/shadowing maps.

mod map;

pub use map::{
    default_correlation_distance, generate_consistency_map, standard_normal_cdf, MapSpec,
    SpatialGrid,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::geometry::{EnvironmentConstants, LinkGeometry};
use crate::model::{Frequency, ModelId};
use crate::pathloss::mean_path_loss;
use crate::registry;

/// Seeded generator. The same seed reproduces the same stream on every
/// platform.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn standard_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }
}

/// Zero-mean log-normal shadowing, Gaussian in dB.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShadowFading {
    sigma: f64,
}

impl ShadowFading {
    pub fn new(sigma_db: f64) -> Result<Self> {
        if !(sigma_db >= 0.0) || !sigma_db.is_finite() {
            return Err(Error::domain(format!("shadow fading σ must be >= 0 dB, got {sigma_db}")));
        }
        Ok(ShadowFading { sigma: sigma_db })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn sample(&self, rng: &mut RandomSource) -> f64 {
        // Always draw, so the stream position does not depend on σ.
        self.sigma * rng.standard_normal()
    }
}

/// Mean path loss plus one shadow-fading draw.
pub fn sample_path_loss(
    model: ModelId,
    fc: Frequency,
    geom: &LinkGeometry,
    env: Option<&EnvironmentConstants>,
    rng: &mut RandomSource,
) -> Result<f64> {
    let entry = registry::lookup(model)?;
    let sigma = entry
        .sigma_db
        .ok_or_else(|| Error::domain(format!("{model} publishes no shadow fading σ")))?;
    let mean = mean_path_loss(model, fc, geom, env)?;
    Ok(mean + ShadowFading::new(sigma)?.sample(rng))
}
