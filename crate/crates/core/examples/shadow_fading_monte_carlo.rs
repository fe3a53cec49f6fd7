//! Coverage probability of a 28 GHz UMi link against a 130 dB maximum
//! allowable path loss, mixing LOS and NLOS by the LOS probability.

use mmwave_channel::stochastic::{sample_path_loss, RandomSource};
use mmwave_channel::{los_probability, Frequency, LinkGeometry, ModelId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mmwave_channel::Result<()> {
    let los: ModelId = "5gcm:umi-street:los:ci".parse().unwrap();
    let nlos: ModelId = "5gcm:umi-street:nlos:abg".parse().unwrap();
    let p_model: ModelId = "tr38901:umi-street:los:d1d2".parse().unwrap();
    let fc = Frequency::from_ghz(28.0)?;
    let mut rng = RandomSource::new(42);
    let mut coin = ChaCha8Rng::seed_from_u64(43);
    let trials = 20_000;

    for d in [25.0, 50.0, 100.0, 150.0, 200.0, 300.0] {
        let g = LinkGeometry::new(d, 10.0, 1.5)?;
        let p = los_probability(p_model, &g)?;
        let mut covered = 0;
        for _ in 0..trials {
            let model = if coin.random::<f64>() < p { los } else { nlos };
            if sample_path_loss(model, fc, &g, None, &mut rng)? <= 130.0 {
                covered += 1;
            }
        }
        println!("d2D {d:>5} m  P_LOS {p:.3}  coverage {:.3}", covered as f64 / trials as f64);
    }
    Ok(())
}
