//! A 256 × 256 spatially consistent UMi map: LOS share per ring and the
//! shadowing seen along a straight walk.

use mmwave_channel::los_probability::{D1D2Params, LosProbabilityModel};
use mmwave_channel::stochastic::{generate_consistency_map, MapSpec, RandomSource};
use mmwave_channel::Scenario;

fn main() -> mmwave_channel::Result<()> {
    let model = LosProbabilityModel::D1D2(D1D2Params::new(18.0, 36.0));
    let spec = MapSpec::centered(Scenario::UMiStreetCanyon, 256, 2.0);
    let map = generate_consistency_map(&model, 4.0, &spec, (0.0, 0.0), &mut RandomSource::new(7))?;

    for (lo, hi) in [(0.0, 18.0), (18.0, 50.0), (50.0, 100.0), (100.0, 200.0)] {
        let (mut los, mut n) = (0, 0);
        for j in 0..spec.ny {
            for i in 0..spec.nx {
                let (x, y) = map.cell_center(i, j);
                let r = x.hypot(y);
                if r >= lo && r < hi {
                    n += 1;
                    los += map.los_at(i, j) as usize;
                }
            }
        }
        println!("{lo:>5}-{hi:<5} m: {:.3} LOS over {n} cells", los as f64 / n as f64);
    }

    println!("\nwalk along y = 20 m:");
    for k in 0..=10 {
        let x = -100.0 + 20.0 * k as f64;
        let (los, sf) = map.query(x, 20.0)?;
        println!("x = {x:>6.1}  {}  {sf:+.2} dB", if los { "LOS " } else { "NLOS" });
    }
    Ok(())
}
