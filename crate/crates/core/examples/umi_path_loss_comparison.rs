//! Four UMi street-canyon LOS models at 28 GHz, side by side.

use mmwave_channel::{mean_path_loss, Frequency, LinkGeometry, ModelId};

fn main() -> mmwave_channel::Result<()> {
    let ids = [
        "tr38901:umi-street:los:standard",
        "5gcm:umi-street:los:ci",
        "metis:umi-street:los:standard",
        "mmmagic:umi-street:los:abg",
    ];
    let models: Vec<ModelId> = ids.iter().map(|s| s.parse().unwrap()).collect();
    let fc = Frequency::from_ghz(28.0)?;

    println!("{:>6} {}", "d2D", ids.map(|s| format!("{s:>32}")).join(""));
    for d in [10.0, 25.0, 50.0, 100.0, 200.0, 300.0, 500.0] {
        let g = LinkGeometry::new(d, 10.0, 1.5)?;
        let row = models
            .iter()
            .map(|&m| mean_path_loss(m, fc, &g, None).map(|pl| format!("{pl:>32.2}")))
            .collect::<Result<String, _>>()?;
        println!("{d:>6} {row}");
    }
    Ok(())
}
