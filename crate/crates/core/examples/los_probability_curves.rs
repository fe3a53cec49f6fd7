//! UMa LOS probability of the three published d1/d2 variants at a 1.5 m UE.

use mmwave_channel::{los_probability, Family, LinkGeometry, ModelId, Org, Scenario, Visibility};

fn main() -> mmwave_channel::Result<()> {
    let models = [
        ModelId::new(Org::Tr38901, Scenario::UMa, Visibility::Los, Family::D1D2),
        ModelId::new(Org::FiveGcm, Scenario::UMa, Visibility::Los, Family::D1D2),
        ModelId::new(Org::FiveGcm, Scenario::UMa, Visibility::Los, Family::NyuSquared),
    ];
    print!("{:>8}", "d (m)");
    for m in &models {
        print!("  {:>28}", m.to_string());
    }
    println!();
    for d in [10.0, 18.0, 50.0, 100.0, 200.0, 300.0, 500.0, 1000.0] {
        let g = LinkGeometry::new(d, 25.0, 1.5)?;
        print!("{d:>8}");
        for &m in &models {
            print!("  {:>28.4}", los_probability(m, &g)?);
        }
        println!();
    }
    Ok(())
}
