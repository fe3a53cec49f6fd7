//! Rural macro: the ITU-R/3GPP formulas against the NYU CIH fit at 24 GHz,
//! plus the effect of the BS height on the CIH exponent.

use mmwave_channel::{mean_path_loss, Frequency, LinkGeometry, ModelId};

fn main() -> mmwave_channel::Result<()> {
    let fc = Frequency::from_ghz(24.0)?;
    let ids: Vec<ModelId> = [
        "itur:rma:los:standard",
        "itur:rma:nlos:standard",
        "nyu:rma:los:cih",
        "nyu:rma:nlos:cih",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();

    for d in [100.0, 500.0, 1000.0, 2000.0, 5000.0] {
        let g = LinkGeometry::new(d, 35.0, 1.5)?;
        let pls = ids
            .iter()
            .map(|&m| mean_path_loss(m, fc, &g, None))
            .collect::<Result<Vec<_>, _>>()?;
        println!("{d:>6} m  {}", pls.iter().map(|p| format!("{p:>8.2}")).collect::<String>());
    }

    let nyu: ModelId = "nyu:rma:nlos:cih".parse().unwrap();
    println!();
    for hbs in [10.0, 35.0, 100.0, 150.0] {
        let g = LinkGeometry::new(1000.0, hbs, 1.5)?;
        println!("hBS {hbs:>5} m: NLOS {:.2} dB at 1 km", mean_path_loss(nyu, fc, &g, None)?);
    }
    Ok(())
}
